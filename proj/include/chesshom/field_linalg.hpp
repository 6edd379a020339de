// Dense linear algebra over Z_p for the pair-sequence audits: kernel and
// image bases, homology-class coordinates, and ranks of induced maps. The
// complexes involved are small (hundreds of faces), so dense is fine.
#pragma once

#include "chesshom/ring.hpp"
#include "chesshom/sparse.hpp"

#include <cstdint>
#include <vector>

namespace chesshom {

using FpVec = std::vector<std::int64_t>;

inline FpVec fp_dense_column(const ModMat& m, long c)
{
    FpVec v(static_cast<std::size_t>(m.rows), 0);
    for (const auto& [r, val] : m.col_entries[static_cast<std::size_t>(c)])
        v[static_cast<std::size_t>(r)] = val;
    return v;
}

// Incrementally echelonized span with coordinates of every member in terms
// of the vectors added so far.
class FpSpan {
public:
    FpSpan(ModRing ring, long ambient_dim) : ring_(ring), dim_(ambient_dim) {}

    long size() const { return static_cast<long>(basis_.size()); }
    long added() const { return added_; }

    // Returns the new basis index, or -1 when v was already in the span.
    long add(const FpVec& v)
    {
        FpVec coords;
        FpVec r = reduce_internal(v, &coords);
        long self = added_++;
        long pivot = leading(r);
        if (pivot < 0) return -1;
        // normalize leading entry to 1
        std::int64_t inv = ring_.inv(r[static_cast<std::size_t>(pivot)]);
        for (auto& x : r) x = ring_.mul(x, inv);
        coords.resize(static_cast<std::size_t>(added_), 0);
        for (auto& x : coords) x = ring_.mul(ring_.neg(x), inv);
        coords[static_cast<std::size_t>(self)] = inv;
        basis_.push_back(BasisVec{std::move(r), pivot, std::move(coords)});
        return static_cast<long>(basis_.size()) - 1;
    }

    // If v lies in the span, writes coordinates over the added vectors
    // (length = added()) and returns true.
    bool express(const FpVec& v, FpVec* coords_out) const
    {
        FpVec coords;
        FpVec r = reduce_internal(v, &coords);
        if (leading(r) >= 0) return false;
        if (coords_out) {
            coords.resize(static_cast<std::size_t>(added_), 0);
            *coords_out = std::move(coords);
        }
        return true;
    }

    bool contains(const FpVec& v) const { return express(v, nullptr); }

private:
    struct BasisVec {
        FpVec v;
        long pivot;
        FpVec coords;  // v = sum coords[j] * added_j
    };

    static long leading(const FpVec& v)
    {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return static_cast<long>(i);
        return -1;
    }

    // r = v - sum c_i b_i with r having no pivot collisions; coords over the
    // added originals accumulate as sum c_i * b_i.coords.
    FpVec reduce_internal(FpVec v, FpVec* coords) const
    {
        coords->assign(static_cast<std::size_t>(added_), 0);
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& b : basis_) {
                std::int64_t x = v[static_cast<std::size_t>(b.pivot)];
                if (x == 0) continue;
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (b.v[i] != 0) v[i] = ring_.sub(v[i], ring_.mul(x, b.v[i]));
                for (std::size_t j = 0; j < b.coords.size(); ++j)
                    if (b.coords[j] != 0)
                        (*coords)[j] = ring_.add((*coords)[j], ring_.mul(x, b.coords[j]));
                changed = true;
            }
        }
        return v;
    }

    ModRing ring_;
    long dim_;
    long added_ = 0;
    std::vector<BasisVec> basis_;
};

// Kernel basis of a sparse matrix over Z_p by column echelonization with a
// recorded column transform.
inline std::vector<FpVec> fp_kernel_basis(const ModMat& A)
{
    const ModRing ring = A.ring;
    const std::size_t nr = static_cast<std::size_t>(A.rows);
    const std::size_t nc = static_cast<std::size_t>(A.cols);
    std::vector<FpVec> cols(nc), trans(nc);
    for (std::size_t c = 0; c < nc; ++c) {
        cols[c] = fp_dense_column(A, static_cast<long>(c));
        trans[c].assign(nc, 0);
        trans[c][c] = 1;
    }
    std::vector<char> used(nc, 0);
    for (std::size_t r = 0; r < nr; ++r) {
        std::size_t pc = nc;
        for (std::size_t c = 0; c < nc; ++c)
            if (!used[c] && cols[c][r] != 0) {
                pc = c;
                break;
            }
        if (pc == nc) continue;
        used[pc] = 1;
        std::int64_t inv = ring.inv(cols[pc][r]);
        for (std::size_t c = 0; c < nc; ++c) {
            if (c == pc || cols[c][r] == 0) continue;
            std::int64_t f = ring.mul(cols[c][r], inv);
            for (std::size_t i = r; i < nr; ++i)
                if (cols[pc][i] != 0)
                    cols[c][i] = ring.sub(cols[c][i], ring.mul(f, cols[pc][i]));
            for (std::size_t i = 0; i < nc; ++i)
                if (trans[pc][i] != 0)
                    trans[c][i] = ring.sub(trans[c][i], ring.mul(f, trans[pc][i]));
        }
    }
    std::vector<FpVec> kernel;
    for (std::size_t c = 0; c < nc; ++c)
        if (!used[c]) kernel.push_back(std::move(trans[c]));
    return kernel;
}

// Cycle space, boundary space and a homology basis of one degree of a chain
// complex over Z_p, with class-coordinate queries.
class FpHomologyBasis {
public:
    // down = boundary matrix C_d -> C_{d-1}; up = C_{d+1} -> C_d.
    FpHomologyBasis(const ModMat& down, const ModMat& up)
        : ring_(down.ring), chain_dim_(down.cols), span_(down.ring, down.cols)
    {
        for (long c = 0; c < up.cols; ++c) {
            FpVec b = fp_dense_column(up, c);
            if (span_.add(b) >= 0) ++boundary_dim_;
        }
        for (FpVec& z : fp_kernel_basis(down)) {
            long slot = span_.added();
            if (span_.add(z) >= 0) {
                rep_slots_.push_back(slot);
                reps_.push_back(std::move(z));
            }
        }
    }

    long dim() const { return static_cast<long>(reps_.size()); }
    long boundary_dim() const { return boundary_dim_; }
    long chain_dim() const { return chain_dim_; }
    const std::vector<FpVec>& reps() const { return reps_; }

    // Homology coordinates of a cycle: its coefficients over the chosen
    // representatives, boundaries quotiented away. False when the vector is
    // not in cycles+boundaries span (i.e. not a cycle of this complex).
    bool class_coords(const FpVec& v, FpVec* out) const
    {
        FpVec coords;
        if (!span_.express(v, &coords)) return false;
        if (out) {
            out->clear();
            out->reserve(reps_.size());
            for (long slot : rep_slots_) out->push_back(coords[static_cast<std::size_t>(slot)]);
        }
        return true;
    }

private:
    ModRing ring_;
    long chain_dim_;
    long boundary_dim_ = 0;
    FpSpan span_;
    std::vector<long> rep_slots_;
    std::vector<FpVec> reps_;
};

// Rank of a set of vectors over Z_p.
inline long fp_rank_of(const std::vector<FpVec>& vecs, ModRing ring, long ambient)
{
    FpSpan span(ring, ambient);
    long r = 0;
    for (const FpVec& v : vecs)
        if (span.add(v) >= 0) ++r;
    return r;
}

}  // namespace chesshom
