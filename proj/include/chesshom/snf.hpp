// Sparse exact elimination over Z and Z_p with Markowitz pivot selection.
//
// Unimodular row/column operations bring the matrix to a (generalized)
// diagonal form; invariant factors follow by gcd-driven diagonal
// improvement. Row operations are mirrored onto "carried" vectors, which is
// enough transformation data to solve n*z = Mx in SNF coordinates without
// storing full transformation matrices.
#pragma once

#include "chesshom/ring.hpp"
#include "chesshom/sparse.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <vector>

namespace chesshom {

enum class PivotStrategy { Markowitz, Textbook };

struct SnfOptions {
    PivotStrategy strategy = PivotStrategy::Markowitz;
    long dense_threshold = 64;  // hand the endgame to a dense kernel at this size
};

template <class R>
struct ElimResult {
    using elem = typename R::elem;

    long rank = 0;
    std::vector<elem> diagonal;  // raw pivot values, in pivot order
    std::vector<long> pivot_rows;
    std::vector<long> pivot_cols;
    // Carried vectors transformed by the accumulated row operations:
    // coords[k][i] sits over diagonal[i]; residual[k] is true when the
    // transformed vector is nonzero outside the pivot rows.
    std::vector<std::vector<elem>> carried_coords;
    std::vector<char> carried_residual;
};

template <class R>
using SparseColumn = std::vector<std::pair<long, typename R::elem>>;

namespace detail {

template <class R>
class SparseEliminator {
public:
    using T = typename R::elem;

    SparseEliminator(const SparseMat<R>& A, const std::vector<SparseColumn<R>>& carried,
                     const SnfOptions& opt)
        : ring_(A.ring), nrows_(A.rows), ncols_(A.cols), opt_(opt)
    {
        rows_.resize(static_cast<std::size_t>(nrows_));
        col_rows_.resize(static_cast<std::size_t>(ncols_));
        col_count_.assign(static_cast<std::size_t>(ncols_), 0);
        row_active_.assign(static_cast<std::size_t>(nrows_), 1);
        col_active_.assign(static_cast<std::size_t>(ncols_), 1);

        for (long c = 0; c < ncols_; ++c) {
            const auto& col = A.col_entries[static_cast<std::size_t>(c)];
            for (const auto& [r, v] : col) {
                rows_[static_cast<std::size_t>(r)].push_back(
                    RowEntry{static_cast<std::int32_t>(c), v});
                col_rows_[static_cast<std::size_t>(c)].push_back(static_cast<std::int32_t>(r));
            }
            col_count_[static_cast<std::size_t>(c)] = static_cast<std::int32_t>(col.size());
            if (!col.empty())
                col_queue_.insert({static_cast<std::int32_t>(col.size()),
                                   static_cast<std::int32_t>(c)});
        }
        carried_.resize(carried.size());
        for (std::size_t k = 0; k < carried.size(); ++k) {
            carried_[k].assign(static_cast<std::size_t>(nrows_), ring_.zero());
            for (const auto& [r, v] : carried[k]) carried_[k][static_cast<std::size_t>(r)] = v;
        }
    }

    ElimResult<R> run()
    {
        while (true) {
            if (try_dense_endgame()) break;
            auto piv = select_pivot();
            if (!piv) break;
            process_pivot(piv->first, piv->second);
        }
        ElimResult<R> res;
        res.rank = static_cast<long>(diagonal_.size());
        res.diagonal = std::move(diagonal_);
        res.pivot_rows = std::move(pivot_rows_);
        res.pivot_cols = std::move(pivot_cols_);
        res.carried_coords.resize(carried_.size());
        res.carried_residual.assign(carried_.size(), 0);
        for (std::size_t k = 0; k < carried_.size(); ++k) {
            res.carried_coords[k].reserve(res.pivot_rows.size());
            for (long r : res.pivot_rows)
                res.carried_coords[k].push_back(carried_[k][static_cast<std::size_t>(r)]);
            for (long r = 0; r < nrows_; ++r)
                if (row_active_[static_cast<std::size_t>(r)] &&
                    !ring_.is_zero(carried_[k][static_cast<std::size_t>(r)])) {
                    res.carried_residual[k] = 1;
                    break;
                }
        }
        return res;
    }

private:
    struct RowEntry {
        std::int32_t col;
        T val;
    };

    // --- basic storage ops ---------------------------------------------

    const T* find(long r, long c) const
    {
        const auto& row = rows_[static_cast<std::size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const RowEntry& e, long col) { return e.col < col; });
        if (it == row.end() || it->col != c) return nullptr;
        return &it->val;
    }

    void bump_col(long c, int delta)
    {
        auto& cnt = col_count_[static_cast<std::size_t>(c)];
        if (col_active_[static_cast<std::size_t>(c)]) {
            if (cnt > 0) col_queue_.erase({cnt, static_cast<std::int32_t>(c)});
            cnt += delta;
            if (cnt > 0) col_queue_.insert({cnt, static_cast<std::int32_t>(c)});
        } else {
            cnt += delta;
        }
    }

    void remove_entry(long r, long c)
    {
        auto& row = rows_[static_cast<std::size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const RowEntry& e, long col) { return e.col < col; });
        row.erase(it);
        bump_col(c, -1);
    }

    void set_value(long r, long c, const T& v)
    {
        auto& row = rows_[static_cast<std::size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const RowEntry& e, long col) { return e.col < col; });
        it->val = v;
    }

    // dst += lambda * src (rows); carried vectors follow every row op.
    void row_axpy(long dst, long src, const T& lambda)
    {
        auto& D = rows_[static_cast<std::size_t>(dst)];
        const auto& S = rows_[static_cast<std::size_t>(src)];
        scratch_.clear();
        scratch_.reserve(D.size() + S.size());
        std::size_t i = 0, j = 0;
        while (i < D.size() || j < S.size()) {
            if (j == S.size() || (i < D.size() && D[i].col < S[j].col)) {
                scratch_.push_back(std::move(D[i]));
                ++i;
            } else if (i == D.size() || S[j].col < D[i].col) {
                T nv = ring_.mul(lambda, S[j].val);
                if (!ring_.is_zero(nv)) {
                    col_rows_[static_cast<std::size_t>(S[j].col)].push_back(
                        static_cast<std::int32_t>(dst));
                    bump_col(S[j].col, +1);
                    scratch_.push_back(RowEntry{S[j].col, std::move(nv)});
                }
                ++j;
            } else {
                T nv = ring_.add(D[i].val, ring_.mul(lambda, S[j].val));
                if (!ring_.is_zero(nv))
                    scratch_.push_back(RowEntry{D[i].col, std::move(nv)});
                else
                    bump_col(D[i].col, -1);
                ++i;
                ++j;
            }
        }
        D.swap(scratch_);
        for (auto& cv : carried_) {
            auto& vs = cv[static_cast<std::size_t>(src)];
            if (!ring_.is_zero(vs))
                cv[static_cast<std::size_t>(dst)] =
                    ring_.add(cv[static_cast<std::size_t>(dst)], ring_.mul(lambda, vs));
        }
    }

    // Rebuild col_rows_[c] keeping live rows only, sorted and deduplicated.
    std::vector<std::int32_t>& compact_col(long c)
    {
        auto& lst = col_rows_[static_cast<std::size_t>(c)];
        std::size_t w = 0;
        for (std::size_t i = 0; i < lst.size(); ++i) {
            long r = lst[i];
            if (row_active_[static_cast<std::size_t>(r)] && find(r, c)) lst[w++] = lst[i];
        }
        lst.resize(w);
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        return lst;
    }

    // --- pivot selection -------------------------------------------------

    static Int pivot_weight(const Int& v) { return v < 0 ? Int(-v) : v; }
    static std::int64_t pivot_weight(std::int64_t) { return 1; }  // field: all units alike

    std::optional<std::pair<long, long>> select_pivot()
    {
        if (col_queue_.empty()) return std::nullopt;
        if (opt_.strategy == PivotStrategy::Textbook) return select_textbook();

        constexpr int kPreferredCols = 8;
        constexpr int kMaxCols = 32;
        bool have = false, best_unit = false;
        long best_cost = 0, best_r = -1, best_c = -1;
        int seen = 0;
        for (const auto& [cnt, c32] : col_queue_) {
            long c = c32;
            auto& in_col = compact_col(c);
            if (in_col.empty()) continue;
            ++seen;
            long ccnt = col_count_[static_cast<std::size_t>(c)];
            for (long r : in_col) {
                const T* pv = find(r, c);
                bool unit = ring_.is_unit(*pv);
                long cost = (static_cast<long>(rows_[static_cast<std::size_t>(r)].size()) - 1) *
                            (ccnt - 1);
                bool better;
                if (!have)
                    better = true;
                else if (unit != best_unit)
                    better = unit;
                else
                    better = cost < best_cost;
                if (better) {
                    have = true;
                    best_unit = unit;
                    best_cost = cost;
                    best_r = r;
                    best_c = c;
                }
            }
            if (have && best_unit && (best_cost == 0 || seen >= kPreferredCols)) break;
            if (seen >= kMaxCols) break;
        }
        if (!have) return std::nullopt;  // cannot happen while counts are exact
        return std::make_pair(best_r, best_c);
    }

    std::optional<std::pair<long, long>> select_textbook()
    {
        // lowest active column; smallest |value| within it, lowest row on ties
        for (long c = 0; c < ncols_; ++c) {
            if (!col_active_[static_cast<std::size_t>(c)] ||
                col_count_[static_cast<std::size_t>(c)] <= 0)
                continue;
            auto& in_col = compact_col(c);
            if (in_col.empty()) continue;
            long best_r = -1;
            T best_v = ring_.zero();
            for (long r : in_col) {
                const T* pv = find(r, c);
                if (best_r < 0 || pivot_weight(*pv) < pivot_weight(best_v)) {
                    best_r = r;
                    best_v = *pv;
                }
            }
            return std::make_pair(best_r, c);
        }
        return std::nullopt;
    }

    // --- pivot processing --------------------------------------------------

    void process_pivot(long r, long c)
    {
        while (true) {
            T v = *find(r, c);
            // column phase: shrink or clear the other entries of col c
            long other = -1;
            for (long cand : col_rows_[static_cast<std::size_t>(c)]) {
                if (cand != r && row_active_[static_cast<std::size_t>(cand)] && find(cand, c)) {
                    other = cand;
                    break;
                }
            }
            if (other != -1) {
                T w = *find(other, c);
                T q = ring_.quot_round(w, v);
                if (!ring_.is_zero(q)) row_axpy(other, r, ring_.neg(q));
                if (find(other, c)) r = other;  // nonzero remainder takes over as pivot
                continue;
            }
            // row phase: col c is now a singleton at row r, so column ops
            // below touch row r only
            const auto& row = rows_[static_cast<std::size_t>(r)];
            if (row.size() > 1) {
                long j = row[0].col == c ? row[1].col : row[0].col;
                T val = *find(r, j);
                if (ring_.divides(v, val)) {
                    remove_entry(r, j);
                } else {
                    T q = ring_.quot_round(val, v);
                    set_value(r, j, ring_.sub(val, ring_.mul(q, v)));
                    c = j;  // strictly smaller pivot value; clean column j next
                }
                continue;
            }
            break;
        }
        finish_pivot(r, c, *find(r, c));
    }

    void finish_pivot(long r, long c, T v)
    {
        pivot_rows_.push_back(r);
        pivot_cols_.push_back(c);
        diagonal_.push_back(std::move(v));
        row_active_[static_cast<std::size_t>(r)] = 0;
        if (col_count_[static_cast<std::size_t>(c)] > 0)
            col_queue_.erase({col_count_[static_cast<std::size_t>(c)],
                              static_cast<std::int32_t>(c)});
        col_active_[static_cast<std::size_t>(c)] = 0;
        col_count_[static_cast<std::size_t>(c)] = 0;
        rows_[static_cast<std::size_t>(r)].clear();
        rows_[static_cast<std::size_t>(r)].shrink_to_fit();
    }

    // --- dense endgame -------------------------------------------------------

    bool try_dense_endgame()
    {
        if (col_queue_.empty()) return false;
        if (static_cast<long>(col_queue_.size()) > opt_.dense_threshold ||
            static_cast<long>(col_queue_.size()) > dense_gate_)
            return false;

        std::vector<long> cols;
        std::set<long> row_set;
        for (const auto& [cnt, c32] : col_queue_) {
            long c = c32;
            auto& lst = col_rows_[static_cast<std::size_t>(c)];
            for (long r : lst)
                if (row_active_[static_cast<std::size_t>(r)] && find(r, c)) row_set.insert(r);
            cols.push_back(c);
        }
        if (static_cast<long>(row_set.size()) > opt_.dense_threshold) {
            dense_gate_ = static_cast<long>(col_queue_.size()) / 2;  // retry later
            return false;
        }
        std::sort(cols.begin(), cols.end());
        std::vector<long> rows(row_set.begin(), row_set.end());

        const std::size_t nr = rows.size(), nc = cols.size();
        std::vector<std::vector<T>> D(nr, std::vector<T>(nc, ring_.zero()));
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                if (const T* pv = find(rows[i], cols[j])) D[i][j] = *pv;

        std::vector<char> row_done(nr, 0), col_done(nc, 0);
        while (true) {
            long pi = -1, pj = -1;
            for (std::size_t i = 0; i < nr; ++i) {
                if (row_done[i]) continue;
                for (std::size_t j = 0; j < nc; ++j) {
                    if (col_done[j] || ring_.is_zero(D[i][j])) continue;
                    if (pi < 0 || pivot_weight(D[i][j]) < pivot_weight(D[pi][pj])) {
                        pi = static_cast<long>(i);
                        pj = static_cast<long>(j);
                    }
                }
            }
            if (pi < 0) break;

            while (true) {
                T v = D[pi][pj];
                long other = -1;
                for (std::size_t i = 0; i < nr; ++i)
                    if (!row_done[i] && static_cast<long>(i) != pi && !ring_.is_zero(D[i][pj])) {
                        other = static_cast<long>(i);
                        break;
                    }
                if (other != -1) {
                    T q = ring_.quot_round(D[other][pj], v);
                    if (!ring_.is_zero(q)) {
                        T nq = ring_.neg(q);
                        for (std::size_t j = 0; j < nc; ++j)
                            if (!ring_.is_zero(D[static_cast<std::size_t>(pi)][j]))
                                D[static_cast<std::size_t>(other)][j] =
                                    ring_.add(D[static_cast<std::size_t>(other)][j],
                                              ring_.mul(nq, D[static_cast<std::size_t>(pi)][j]));
                        for (auto& cv : carried_) {
                            auto& vs = cv[static_cast<std::size_t>(rows[static_cast<std::size_t>(pi)])];
                            if (!ring_.is_zero(vs)) {
                                auto& vd =
                                    cv[static_cast<std::size_t>(rows[static_cast<std::size_t>(other)])];
                                vd = ring_.add(vd, ring_.mul(nq, vs));
                            }
                        }
                    }
                    if (!ring_.is_zero(D[static_cast<std::size_t>(other)][static_cast<std::size_t>(pj)]))
                        pi = other;
                    continue;
                }
                long j2 = -1;
                for (std::size_t j = 0; j < nc; ++j)
                    if (!col_done[j] && static_cast<long>(j) != pj &&
                        !ring_.is_zero(D[static_cast<std::size_t>(pi)][j])) {
                        j2 = static_cast<long>(j);
                        break;
                    }
                if (j2 != -1) {
                    T val = D[static_cast<std::size_t>(pi)][static_cast<std::size_t>(j2)];
                    if (ring_.divides(v, val)) {
                        D[static_cast<std::size_t>(pi)][static_cast<std::size_t>(j2)] = ring_.zero();
                    } else {
                        T q = ring_.quot_round(val, v);
                        D[static_cast<std::size_t>(pi)][static_cast<std::size_t>(j2)] =
                            ring_.sub(val, ring_.mul(q, v));
                        pj = j2;
                    }
                    continue;
                }
                break;
            }
            pivot_rows_.push_back(rows[static_cast<std::size_t>(pi)]);
            pivot_cols_.push_back(cols[static_cast<std::size_t>(pj)]);
            diagonal_.push_back(D[static_cast<std::size_t>(pi)][static_cast<std::size_t>(pj)]);
            row_done[static_cast<std::size_t>(pi)] = 1;
            col_done[static_cast<std::size_t>(pj)] = 1;
            row_active_[static_cast<std::size_t>(rows[static_cast<std::size_t>(pi)])] = 0;
        }

        for (const auto& [cnt, c32] : col_queue_) {
            col_active_[static_cast<std::size_t>(c32)] = 0;
            col_count_[static_cast<std::size_t>(c32)] = 0;
        }
        col_queue_.clear();
        return true;
    }

    R ring_;
    long nrows_, ncols_;
    SnfOptions opt_;
    long dense_gate_ = std::numeric_limits<long>::max();
    std::vector<std::vector<RowEntry>> rows_;
    std::vector<std::vector<std::int32_t>> col_rows_;
    std::vector<std::int32_t> col_count_;
    std::vector<char> row_active_, col_active_;
    std::set<std::pair<std::int32_t, std::int32_t>> col_queue_;
    std::vector<std::vector<T>> carried_;
    std::vector<RowEntry> scratch_;
    std::vector<long> pivot_rows_, pivot_cols_;
    std::vector<T> diagonal_;
};

}  // namespace detail

template <class R>
ElimResult<R> eliminate(const SparseMat<R>& A, const std::vector<SparseColumn<R>>& carried = {},
                        const SnfOptions& opt = {})
{
    detail::SparseEliminator<R> e(A, carried, opt);
    return e.run();
}

// Invariant factors of a diagonalization: strip signs and repair the
// divisibility chain by pairwise gcd/lcm.
inline std::vector<Int> normalize_invariants(const std::vector<Int>& diagonal)
{
    std::vector<Int> ones, rest;
    for (const Int& d : diagonal) {
        Int a = d < 0 ? Int(-d) : d;
        if (a == 1)
            ones.push_back(a);
        else if (a != 0)
            rest.push_back(a);
    }
    std::sort(rest.begin(), rest.end());
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j)
            if (rest[j] % rest[i] != 0) {
                Int g = int_gcd(rest[i], rest[j]);
                Int l = (rest[i] / g) * rest[j];
                rest[i] = g;
                rest[j] = l;
            }
    std::vector<Int> out = std::move(ones);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

struct SnfResult {
    long rank = 0;
    std::vector<Int> invariants;  // d1 | d2 | ... | dr (includes unit factors)
    std::vector<Int> diagonal;    // raw pivots, aligned with carried coordinates
    std::vector<std::vector<Int>> carried_coords;
    std::vector<char> carried_residual;
};

inline SnfResult snf(const ZMat& A, const std::vector<SparseColumn<IntRing>>& carried = {},
                     const SnfOptions& opt = {})
{
    ElimResult<IntRing> e = eliminate(A, carried, opt);
    SnfResult res;
    res.rank = e.rank;
    res.invariants = normalize_invariants(e.diagonal);
    res.diagonal = std::move(e.diagonal);
    res.carried_coords = std::move(e.carried_coords);
    res.carried_residual = std::move(e.carried_residual);
    return res;
}

inline long rank_mod_p(const ModMat& A, const SnfOptions& opt = {})
{
    return eliminate(A, {}, opt).rank;
}

// Rank of an exact-integer matrix over Z_p.
inline long rank_mod_p(const ZMat& A, std::int64_t p, const SnfOptions& opt = {})
{
    if (!is_prime_i64(p)) throw DomainError("rank_mod_p: p must be prime");
    ModRing ring(p);
    ModMat M(ring, A.rows, A.cols);
    for (long c = 0; c < A.cols; ++c)
        for (const auto& [r, v] : A.col_entries[static_cast<std::size_t>(c)]) {
            Int red = v % p;
            if (red < 0) red += p;
            M.set(r, c, static_cast<std::int64_t>(red));
        }
    M.sort_columns();
    return rank_mod_p(M, opt);
}

}  // namespace chesshom
