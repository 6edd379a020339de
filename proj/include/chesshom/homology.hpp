// Reduced simplicial homology over Z and Z_p, torsion invariants, and
// orders of cycle classes, all driven by the sparse elimination engine.
#pragma once

#include "chesshom/chain.hpp"
#include "chesshom/colreduce.hpp"
#include "chesshom/complex.hpp"
#include "chesshom/errors.hpp"
#include "chesshom/pool.hpp"
#include "chesshom/ring.hpp"
#include "chesshom/snf.hpp"
#include "chesshom/sparse.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace chesshom {

struct HomologyGroup {
    long free_rank = 0;
    std::vector<Int> torsion;  // invariants > 1, divisibility chain d1 | d2 | ...

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;

    nlohmann::json to_json() const
    {
        nlohmann::json t = nlohmann::json::array();
        for (const Int& d : torsion) t.push_back(detail::coeff_to_json(d));
        return {{"free", free_rank}, {"torsion", t}};
    }

    // e.g. "Z^2 \u2295 Z_3 \u2295 Z_9"; "0" for the trivial group
    std::string human() const
    {
        if (is_zero()) return "0";
        std::string s;
        if (free_rank == 1)
            s = "Z";
        else if (free_rank > 1)
            s = "Z^" + std::to_string(free_rank);
        for (const Int& d : torsion) {
            if (!s.empty()) s += " \u2295 ";
            s += "Z_" + d.str();
        }
        return s;
    }
};

// Largest torsion invariant (their lcm), or 0 when torsion-free.
inline Int group_exponent(const HomologyGroup& g)
{
    return g.torsion.empty() ? Int(0) : g.torsion.back();
}

// Number of d-faces. Exact; closed form for plain boards and matching
// complexes, enumeration for the carved-out subcomplexes.
inline long face_count(const ComplexSpec& spec, int d)
{
    if (d < -1) return 0;
    if (d == -1) return 1;
    long k = d + 1;
    auto binom = [](long n, long r) -> long {
        if (r < 0 || r > n) return 0;
        long b = 1;
        for (long i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
        return b;
    };
    if (spec.family() == Family::Matching) {
        long n = spec.n_vertices();
        if (2 * k > n) return 0;
        long c = binom(n, 2 * k);
        for (long i = 2 * k - 1; i > 0; i -= 2) c *= i;  // (2k-1)!!
        return c;
    }
    if (spec.family() == Family::Board) {
        long m = static_cast<long>(spec.rows().size());
        long n = static_cast<long>(spec.cols().size());
        long c = binom(m, k) * binom(n, k);
        for (long i = 2; i <= k; ++i) c *= i;
        return c;
    }
    return static_cast<long>(enumerate_faces(spec, d).size());
}

// Upper bound on the d-face count, cheap enough for budget guardrails.
inline double face_count_estimate(const ComplexSpec& spec, int d)
{
    if (d < 0) return 1.0;
    long k = d + 1;
    auto binom = [](double n, long r) {
        double b = 1;
        for (long i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
        return b < 0 ? 0.0 : b;
    };
    if (spec.family() == Family::Matching) {
        double c = binom(spec.n_vertices(), 2 * k);
        for (long i = 2 * k - 1; i > 0; i -= 2) c *= i;
        return c;
    }
    double m = static_cast<double>(spec.rows().size());
    double n = static_cast<double>(spec.cols().size());
    double c = binom(m, k) * binom(n, k);
    for (long i = 2; i <= k; ++i) c *= i;
    return c;
}

namespace detail {

// rank of the boundary matrix in degree d (d <= top+1), with the reduced
// augmentation at d = 0. Column reduction: exact over Z and over Z_p.
template <class R>
long boundary_rank(const ComplexSpec& spec, int d, R ring, const SnfOptions&)
{
    int top = complex_dimension(spec);
    if (d < 0 || d > top) return 0;
    auto mat = boundary_matrix(spec, d, ring);
    return rank_colreduce(mat);
}

}  // namespace detail

// Reduced homology in a single degree.
inline HomologyGroup homology(const ComplexSpec& spec, int d, const RingSpec& ring = RingZ{},
                              const SnfOptions& opt = {})
{
    int top = complex_dimension(spec);
    if (d < -1 || d > top) return {};
    long fd = face_count(spec, d);

    if (std::holds_alternative<RingZ>(ring)) {
        long rank_d = detail::boundary_rank(spec, d, IntRing{}, opt);
        HomologyGroup g;
        if (d + 1 > top) {
            g.free_rank = fd - rank_d;
            return g;
        }
        SnfResult up = snf(boundary_matrix(spec, d + 1, IntRing{}), {}, opt);
        g.free_rank = fd - rank_d - up.rank;
        for (const Int& v : up.invariants)
            if (v > 1) g.torsion.push_back(v);
        return g;
    }

    ModRing r(std::get<RingZp>(ring).p);
    long rank_d = detail::boundary_rank(spec, d, r, opt);
    long rank_up = d + 1 > top ? 0 : detail::boundary_rank(spec, d + 1, r, opt);
    HomologyGroup g;
    g.free_rank = fd - rank_d - rank_up;
    return g;
}

// All degrees -1..top at once; each boundary matrix is eliminated once.
// Index i holds degree i-1.
inline std::vector<HomologyGroup> homology_all(const ComplexSpec& spec,
                                               const RingSpec& ring = RingZ{},
                                               const SnfOptions& opt = {})
{
    int top = complex_dimension(spec);
    std::vector<HomologyGroup> out;
    if (top < -1) return out;
    std::vector<long> fd(static_cast<std::size_t>(top + 2));
    for (int d = -1; d <= top; ++d) fd[static_cast<std::size_t>(d + 1)] = face_count(spec, d);

    std::vector<long> rank(static_cast<std::size_t>(top + 3), 0);  // rank[d+1] = rank of del_d
    std::vector<std::vector<Int>> tors(static_cast<std::size_t>(top + 3));
    for (int d = 0; d <= top; ++d) {
        if (std::holds_alternative<RingZ>(ring)) {
            SnfResult s = snf(boundary_matrix(spec, d, IntRing{}), {}, opt);
            rank[static_cast<std::size_t>(d + 1)] = s.rank;
            for (const Int& v : s.invariants)
                if (v > 1) tors[static_cast<std::size_t>(d + 1)].push_back(v);
        } else {
            ModRing r(std::get<RingZp>(ring).p);
            rank[static_cast<std::size_t>(d + 1)] = rank_colreduce(boundary_matrix(spec, d, r));
        }
    }
    out.resize(static_cast<std::size_t>(top + 2));
    for (int d = -1; d <= top; ++d) {
        auto& g = out[static_cast<std::size_t>(d + 1)];
        g.free_rank = fd[static_cast<std::size_t>(d + 1)] - rank[static_cast<std::size_t>(d + 1)] -
                      rank[static_cast<std::size_t>(d + 2)];
        g.torsion = tors[static_cast<std::size_t>(d + 2)];
    }
    return out;
}

// Per-degree homology dimensions (over Q for RingZ, over Z_p otherwise)
// computed from boundary ranks alone; index i holds degree i-1. The
// per-degree ranks are independent, so they may run on a worker pool.
inline std::vector<long> betti_numbers(const ComplexSpec& spec, const RingSpec& ring = RingZ{},
                                       int threads = 1)
{
    int top = complex_dimension(spec);
    std::vector<long> out;
    if (top < -1) return out;
    std::vector<long> rank(static_cast<std::size_t>(top + 3), 0);
    parallel_for_indexed(top + 1, threads, [&](long d) {
        if (std::holds_alternative<RingZ>(ring))
            rank[static_cast<std::size_t>(d + 1)] =
                rank_colreduce(boundary_matrix(spec, static_cast<int>(d), IntRing{}));
        else
            rank[static_cast<std::size_t>(d + 1)] = rank_colreduce(
                boundary_matrix(spec, static_cast<int>(d), ModRing(std::get<RingZp>(ring).p)));
    });
    out.resize(static_cast<std::size_t>(top + 2));
    for (int d = -1; d <= top; ++d)
        out[static_cast<std::size_t>(d + 1)] = face_count(spec, d) -
                                               rank[static_cast<std::size_t>(d + 1)] -
                                               rank[static_cast<std::size_t>(d + 2)];
    return out;
}

// Order of a cycle class in H_d(spec; Z).
struct ClassOrder {
    enum class Kind { Zero, Finite, Infinite };
    Kind kind = Kind::Zero;
    Int order = 1;  // meaningful for Finite (then >= 2)

    static ClassOrder zero() { return {Kind::Zero, 1}; }
    static ClassOrder finite(Int n) { return {Kind::Finite, std::move(n)}; }
    static ClassOrder infinite() { return {Kind::Infinite, 0}; }

    friend bool operator==(const ClassOrder&, const ClassOrder&) = default;

    std::string str() const
    {
        switch (kind) {
            case Kind::Zero: return "Zero";
            case Kind::Infinite: return "Infinite";
            case Kind::Finite: return "Finite(" + order.str() + ")";
        }
        return "?";
    }
};

// Smallest positive n with n*z a boundary, via SNF coordinates of the
// boundary matrix one degree up with z carried through the row operations.
inline ClassOrder class_order(const ZChain& z, const ComplexSpec& spec,
                              const SnfOptions& opt = {})
{
    if (!boundary(z).is_zero()) throw NotACycle("class_order: chain has nonzero boundary");
    if (z.is_zero()) return ClassOrder::zero();
    int d = z.dim();
    FaceTable tab(spec, d);
    SparseColumn<IntRing> zcol = chain_to_column(z, tab);

    int top = complex_dimension(spec);
    ZMat up = d + 1 > top ? ZMat(IntRing{}, static_cast<long>(tab.size()), 0)
                          : z_boundary_matrix(spec, d + 1);
    SnfResult s = snf(up, {zcol}, opt);
    if (s.carried_residual[0]) return ClassOrder::infinite();

    Int n = 1;
    for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
        const Int& di = s.diagonal[i];
        const Int& yi = s.carried_coords[0][i];
        if (yi == 0) continue;
        Int g = int_gcd(di, yi);
        Int need = di < 0 ? Int(-di) : di;
        need /= g;
        n = int_lcm(n, need);
    }
    if (n == 1) return ClassOrder::zero();
    return ClassOrder::finite(n);
}

inline bool bounds_in(const ZChain& z, const ComplexSpec& spec)
{
    return class_order(z, spec).kind == ClassOrder::Kind::Zero;
}

// True when the mod-p reduction of an integral cycle represents a nonzero
// class in H_d(spec; Z_p): over a field that is exactly "not a boundary".
inline bool class_nonzero_mod_p(const ZChain& z, const ComplexSpec& spec, std::int64_t p,
                                const SnfOptions& opt = {})
{
    if (!boundary(z).is_zero()) throw NotACycle("class_nonzero_mod_p: not a cycle");
    int d = z.dim();
    FaceTable tab(spec, d);
    ModRing ring(p);
    SparseColumn<ModRing> zcol;
    for (const auto& [f, c] : z.terms()) {
        Int red = c % p;
        if (red < 0) red += p;
        if (red != 0) zcol.emplace_back(tab.index(f), static_cast<std::int64_t>(red));
    }
    std::sort(zcol.begin(), zcol.end());
    if (zcol.empty()) return false;

    int top = complex_dimension(spec);
    ModMat up = d + 1 > top ? ModMat(ring, static_cast<long>(tab.size()), 0)
                            : boundary_matrix(spec, d + 1, ring);
    ElimResult<ModRing> e = eliminate(up, {zcol}, opt);
    return e.carried_residual[0] != 0;
}

// The quotient of the cycle group Z_d by boundaries together with the given
// cycles: with no generators this is H_d(spec; Z) itself; with generators
// g_i it is H_d / <[g_1], ..., [g_k]>, which measures the subgroup they
// span (trivial quotient <=> the classes generate).
inline HomologyGroup homology_quotient(const ComplexSpec& spec, int d,
                                       const std::vector<ZChain>& gens,
                                       const SnfOptions& opt = {})
{
    int top = complex_dimension(spec);
    if (d < -1 || d > top) return {};
    FaceTable tab(spec, d);
    long fd = static_cast<long>(tab.size());

    ZMat aug(IntRing{}, fd, 0);
    if (d + 1 <= top) aug = z_boundary_matrix(spec, d + 1);
    long extra = static_cast<long>(gens.size());
    aug.col_entries.resize(static_cast<std::size_t>(aug.cols + extra));
    for (long k = 0; k < extra; ++k) {
        const ZChain& g = gens[static_cast<std::size_t>(k)];
        if (!boundary(g).is_zero())
            throw NotACycle("homology_quotient: generator has nonzero boundary");
        aug.col_entries[static_cast<std::size_t>(aug.cols + k)] = chain_to_column(g, tab);
    }
    aug.cols += extra;

    long rank_d = detail::boundary_rank(spec, d, IntRing{}, opt);
    SnfResult s = snf(aug, {}, opt);
    HomologyGroup out;
    out.free_rank = fd - rank_d - s.rank;
    for (const Int& v : s.invariants)
        if (v > 1) out.torsion.push_back(v);
    return out;
}

}  // namespace chesshom
