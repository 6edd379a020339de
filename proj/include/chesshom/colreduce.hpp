// Left-to-right column reduction for matrix ranks. Each column is reduced
// against finished pivot columns until its lowest nonzero row is fresh;
// boundary matrices reduce with very little fill this way, unlike full
// elimination. Over Z the update is the fraction-free
//   c <- (v/g)*c - (w/g)*p,  g = gcd(v, w),
// followed by division by the column content, which preserves the rank over
// the rationals exactly.
#pragma once

#include "chesshom/ring.hpp"
#include "chesshom/sparse.hpp"

#include <algorithm>
#include <vector>

namespace chesshom {

namespace detail {

template <class R>
struct ColReducer {
    using T = typename R::elem;
    using Column = std::vector<std::pair<long, T>>;  // sorted by row

    R ring;

    explicit ColReducer(R r) : ring(r) {}

    static long low(const Column& c) { return c.empty() ? -1 : c.back().first; }

    void divide_by_content(Column& c)
    {
        if constexpr (!R::is_field) {
            Int g = 0;
            for (const auto& [r, v] : c) {
                g = int_gcd(g, v);
                if (g == 1) return;
            }
            if (g > 1)
                for (auto& [r, v] : c) v /= g;
        }
    }

    // dst <- a*dst + b*src, both sorted sparse columns
    Column axpby(const Column& dst, const T& a, const Column& src, const T& b)
    {
        Column out;
        out.reserve(dst.size() + src.size());
        std::size_t i = 0, j = 0;
        while (i < dst.size() || j < src.size()) {
            if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
                T nv = ring.mul(a, dst[i].second);
                if (!ring.is_zero(nv)) out.emplace_back(dst[i].first, std::move(nv));
                ++i;
            } else if (i == dst.size() || src[j].first < dst[i].first) {
                T nv = ring.mul(b, src[j].second);
                if (!ring.is_zero(nv)) out.emplace_back(src[j].first, std::move(nv));
                ++j;
            } else {
                T nv = ring.add(ring.mul(a, dst[i].second), ring.mul(b, src[j].second));
                if (!ring.is_zero(nv)) out.emplace_back(dst[i].first, std::move(nv));
                ++i;
                ++j;
            }
        }
        return out;
    }

    long run(const SparseMat<R>& A)
    {
        std::vector<Column> pivot_col(static_cast<std::size_t>(A.rows));
        std::vector<char> has_pivot(static_cast<std::size_t>(A.rows), 0);
        long rank = 0;
        for (long c = 0; c < A.cols; ++c) {
            Column cur = A.col_entries[static_cast<std::size_t>(c)];
            while (!cur.empty()) {
                long l = low(cur);
                if (!has_pivot[static_cast<std::size_t>(l)]) break;
                const Column& piv = pivot_col[static_cast<std::size_t>(l)];
                const T& v = piv.back().second;
                const T& w = cur.back().second;
                if constexpr (R::is_field) {
                    T coef = ring.neg(ring.div_exact(w, v));
                    cur = axpby(cur, ring.one(), piv, coef);
                } else {
                    Int g = int_gcd(v, w);
                    cur = axpby(cur, v / g, piv, Int(-(w / g)));
                    divide_by_content(cur);
                }
            }
            if (!cur.empty()) {
                has_pivot[static_cast<std::size_t>(low(cur))] = 1;
                pivot_col[static_cast<std::size_t>(low(cur))] = std::move(cur);
                ++rank;
            }
        }
        return rank;
    }
};

}  // namespace detail

// Rank by column reduction: exact over Z (rational rank) and over Z_p.
template <class R>
long rank_colreduce(const SparseMat<R>& A)
{
    detail::ColReducer<R> red(A.ring);
    return red.run(A);
}

}  // namespace chesshom
