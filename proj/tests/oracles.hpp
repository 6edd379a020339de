// Test-only reference implementations, written independently of the engine
// code paths they check: a dense textbook Smith normal form, dense modular
// rank, and a filter-based face enumerator.
#pragma once

#include "chesshom/complex.hpp"
#include "chesshom/ring.hpp"
#include "chesshom/sparse.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

using chesshom::Int;

using DenseMat = std::vector<std::vector<Int>>;

inline DenseMat densify(const chesshom::ZMat& m)
{
    DenseMat d(static_cast<std::size_t>(m.rows),
               std::vector<Int>(static_cast<std::size_t>(m.cols), 0));
    for (long c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.col_entries[static_cast<std::size_t>(c)])
            d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    return d;
}

// Textbook dense SNF: move the smallest nonzero to the corner, reduce its
// row and column, fix divisibility by folding offending entries in, repeat.
inline std::vector<Int> dense_snf_invariants(DenseMat a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<Int> invariants;
    std::size_t t = 0;
    auto abs_of = [](const Int& x) { return x < 0 ? Int(-x) : x; };
    while (true) {
        // locate minimal |entry| in the trailing block
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 &&
                    (pi == rows || abs_of(a[i][j]) < abs_of(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        std::swap(a[t], a[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {  // remainder smaller than pivot: swap up
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide the rest of the block
                for (std::size_t i = t + 1; i < rows && clean; ++i)
                    for (std::size_t j = t + 1; j < cols && clean; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                            clean = false;
                        }
            }
        }
        invariants.push_back(abs_of(a[t][t]));
        ++t;
        if (t >= rows || t >= cols) {
            bool leftovers = false;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0) leftovers = true;
            if (leftovers) throw std::logic_error("oracle snf: block not exhausted");
            break;
        }
    }
    return invariants;
}

inline long dense_rank_mod_p(DenseMat a, long p)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (auto& row : a)
        for (auto& x : row) {
            x %= p;
            if (x < 0) x += p;
        }
    long rank = 0;
    std::size_t lead_row = 0;
    for (std::size_t j = 0; j < cols && lead_row < rows; ++j) {
        std::size_t piv = rows;
        for (std::size_t i = lead_row; i < rows; ++i)
            if (a[i][j] != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(a[lead_row], a[piv]);
        // scale pivot row to make the leading entry 1
        Int inv = 1, base = a[lead_row][j];
        for (Int k = 1; k < p; ++k)
            if ((base * k) % p == 1) {
                inv = k;
                break;
            }
        for (auto& x : a[lead_row]) x = (x * inv) % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead_row || a[i][j] == 0) continue;
            Int f = a[i][j];
            for (std::size_t jj = 0; jj < cols; ++jj)
                a[i][jj] = ((a[i][jj] - f * a[lead_row][jj]) % p + p) % p;
        }
        ++lead_row;
        ++rank;
    }
    return rank;
}

// All d-faces by brute force: every (d+1)-subset of the allowed edge set,
// kept when it is a face of the spec, sorted lexicographically.
inline std::vector<chesshom::Face> brute_force_faces(const chesshom::ComplexSpec& spec, int d)
{
    using chesshom::Edge;
    using chesshom::Face;
    std::vector<Edge> edges;
    if (spec.kind() == chesshom::GraphKind::Complete) {
        for (int u = 1; u <= spec.n_vertices(); ++u)
            for (int v = u + 1; v <= spec.n_vertices(); ++v) edges.push_back(Edge{u, v});
    } else {
        for (int r : spec.rows())
            for (int c : spec.cols()) edges.push_back(Edge{r, c});
    }
    std::sort(edges.begin(), edges.end());
    std::vector<Face> out;
    if (d == -1) {
        out.push_back(Face{});
        return out;
    }
    if (d < -1) return out;
    const int k = d + 1;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int from, int chosen) {
        if (chosen == k) {
            Face f;
            for (int i = 0; i < k; ++i)
                f.edges.push_back(edges[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
            if (chesshom::is_face(spec, f)) out.push_back(f);
            return;
        }
        for (int i = from; i < static_cast<int>(edges.size()); ++i) {
            idx[static_cast<std::size_t>(chosen)] = i;
            rec(i + 1, chosen + 1);
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle
