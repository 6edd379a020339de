// Constructors for the explicit chains and cycles used by the torsion
// arguments: the top-homology generators z_{k,k+1}, the gamma cycles on
// matching complexes and chessboards, the 5x5 auxiliary chains, and the
// composite cycles w_{k+1} built from them.
#pragma once

#include "chesshom/chain.hpp"
#include "chesshom/complex.hpp"
#include "chesshom/errors.hpp"
#include "chesshom/ring.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace chesshom {

namespace detail {

inline int perm_sign(const std::vector<int>& perm)
{
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

}  // namespace detail

// Top-homology generator of a board S x T with S inside T and |T| = |S|+1:
// the signed sum over all bijections pi of T of the matching {i pi(i)}.
inline ZChain z_top_on(const std::vector<int>& row_set, const std::vector<int>& col_set)
{
    if (col_set.size() != row_set.size() + 1)
        throw DomainError("z_top: need one more column than rows");
    for (int r : row_set)
        if (!std::binary_search(col_set.begin(), col_set.end(), r))
            throw DomainError("z_top: row labels must sit inside the column labels");

    const int k = static_cast<int>(row_set.size());
    ZChain out(IntRing{}, GraphKind::Bipartite, k - 1);
    std::vector<int> order(col_set.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> perm = order;
    std::unordered_map<int, std::size_t> col_pos;
    for (std::size_t i = 0; i < col_set.size(); ++i) col_pos[col_set[i]] = i;
    do {
        std::vector<Edge> edges;
        edges.reserve(row_set.size());
        for (int r : row_set) edges.push_back(Edge{r, col_set[perm[col_pos[r]]]});
        out.add_monomial(IntRing::from_int(detail::perm_sign(perm)), std::move(edges));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// z_{k,k+1} on the board [1,k] x [1,k+1]; (k+1)! monomials, generates the
// top homology (an infinite cyclic group) of that board.
inline ZChain z_top(int k)
{
    if (k < 1) throw DomainError("z_top: need k >= 1");
    std::vector<int> rows(static_cast<std::size_t>(k)), cols(static_cast<std::size_t>(k) + 1);
    std::iota(rows.begin(), rows.end(), 1);
    std::iota(cols.begin(), cols.end(), 1);
    return z_top_on(rows, cols);
}

// gamma_{3r} = (12-23) ^ (45-56) ^ ... on the matching complex; 2^r
// monomials, a cycle of dimension r-1 in both M_{3r} and M_{3r+1}.
inline ZChain gamma_3r(int r)
{
    if (r < 1) throw DomainError("gamma_3r: need r >= 1");
    ZChain out(IntRing{}, GraphKind::Complete, -1);
    out.add_term(IntRing::one(), Face{});
    for (int i = 0; i < r; ++i) {
        int base = 3 * i;
        ZChain factor(IntRing{}, GraphKind::Complete, 0);
        factor.add_term(IntRing::one(), Face{{Edge{base + 1, base + 2}}});
        factor.add_term(IntRing::from_int(-1), Face{{Edge{base + 2, base + 3}}});
        out = wedge(out, factor);
    }
    return out;
}

// The recursive chessboard cycle as an ordered list of difference factors
// (e_plus, e_minus); the chain is the wedge of (e_plus - e_minus) in listed
// order. Defined for m+n = 0 mod 3 and min <= max <= 2*min; indices with
// m > n transpose every edge.
inline std::vector<std::pair<Edge, Edge>> gamma_mn_factors(int m, int n)
{
    if (m < 1 || n < 1) throw DomainError("gamma_mn: need m,n >= 1");
    if ((m + n) % 3 != 0) throw DomainError("gamma_mn: need m+n = 0 (mod 3)");
    if (m > n) {
        auto f = gamma_mn_factors(n, m);
        for (auto& [e1, e2] : f) {
            e1 = Edge{e1.b, e1.a};
            e2 = Edge{e2.b, e2.a};
        }
        return f;
    }
    if (n > 2 * m) throw DomainError("gamma_mn: need n <= 2m");
    if (m == 1 && n == 2) return {{Edge{1, 1}, Edge{1, 2}}};
    if (m < n) {
        auto f = gamma_mn_factors(m - 1, n - 2);
        f.push_back({Edge{m, n - 1}, Edge{m, n}});
        return f;
    }
    auto f = gamma_mn_factors(m - 2, n - 1);
    f.push_back({Edge{m - 1, n}, Edge{m, n}});
    return f;
}

inline ZChain gamma_mn(int m, int n)
{
    ZChain out(IntRing{}, GraphKind::Bipartite, -1);
    out.add_term(IntRing::one(), Face{});
    for (const auto& [e1, e2] : gamma_mn_factors(m, n)) {
        ZChain factor(IntRing{}, GraphKind::Bipartite, 0);
        factor.add_term(IntRing::one(), Face{{e1}});
        factor.add_term(IntRing::from_int(-1), Face{{e2}});
        out = wedge(out, factor);
    }
    return out;
}

// --- the 5x5 chains ---------------------------------------------------------

namespace detail {

inline void require_labels_2345(std::initializer_list<int> labels, std::size_t distinct)
{
    std::set<int> seen;
    for (int x : labels) {
        if (x < 2 || x > 5) throw LabelError("label outside [2,5]");
        seen.insert(x);
    }
    if (seen.size() != distinct) throw LabelError("labels must be distinct");
}

}  // namespace detail

// Hexagon cycle on rows {3,4,5} and columns {u,v}; generates the first
// homology of that sub-board.
inline ZChain z_uv(int u, int v)
{
    detail::require_labels_2345({u, v}, 2);
    WedgeExpr<IntRing> w(IntRing{}, GraphKind::Bipartite);
    w.add(1, {Edge{3, u}, Edge{4, v}});
    w.add(1, {Edge{4, v}, Edge{5, u}});
    w.add(1, {Edge{5, u}, Edge{3, v}});
    w.add(1, {Edge{3, v}, Edge{4, u}});
    w.add(1, {Edge{4, u}, Edge{5, v}});
    w.add(1, {Edge{5, v}, Edge{3, u}});
    return w.normalize();
}

// The twelve-term 2-chain whose boundary identifies z_{st} with z_{uv};
// of the cyclic form a1^a2^a3 - a2^a3^a4 + ... - a12^a1^a2.
inline ZChain gamma12(int s, int t, int u, int v)
{
    detail::require_labels_2345({s, t, u, v}, 4);
    const std::vector<Edge> a = {Edge{3, u}, Edge{5, s}, Edge{4, v}, Edge{3, t},
                                 Edge{5, u}, Edge{4, s}, Edge{3, v}, Edge{5, t},
                                 Edge{4, u}, Edge{3, s}, Edge{5, v}, Edge{4, t}};
    WedgeExpr<IntRing> w(IntRing{}, GraphKind::Bipartite);
    for (int i = 0; i < 12; ++i)
        w.add(i % 2 == 0 ? 1 : -1, {a[i % 12], a[(i + 1) % 12], a[(i + 2) % 12]});
    return w.normalize();
}

// Five-term 2-chain used to express z_{uv} through the generators e_4, e_5;
// fixed s = 2, {t,u,v} = {3,4,5}.
inline ZChain w_uv(int u, int v)
{
    detail::require_labels_2345({u, v}, 2);
    if (u == 2 || v == 2) throw LabelError("w_uv: u,v range over {3,4,5}");
    const int s = 2;
    const int t = 3 + 4 + 5 - u - v;
    WedgeExpr<IntRing> w(IntRing{}, GraphKind::Bipartite);
    w.add(1, {Edge{5, u}, Edge{4, s}, Edge{3, v}});
    w.add(-1, {Edge{4, s}, Edge{3, v}, Edge{5, t}});
    w.add(1, {Edge{3, v}, Edge{5, t}, Edge{4, u}});
    w.add(-1, {Edge{5, t}, Edge{4, u}, Edge{3, s}});
    w.add(1, {Edge{4, u}, Edge{3, s}, Edge{5, v}});
    return w.normalize();
}

// rho = (1 1bar - 2 1bar) ^ (3 2bar - 4 2bar) ^ (5 3bar - 5 4bar), the
// generator of the second homology of Gamma_{5,5}.
inline ZChain rho()
{
    auto diff = [](Edge e1, Edge e2) {
        ZChain c(IntRing{}, GraphKind::Bipartite, 0);
        c.add_term(IntRing::one(), Face{{e1}});
        c.add_term(IntRing::from_int(-1), Face{{e2}});
        return c;
    };
    return wedge(wedge(diff(Edge{1, 1}, Edge{2, 1}), diff(Edge{3, 2}, Edge{4, 2})),
                 diff(Edge{5, 3}, Edge{5, 4}));
}

// e_i = (3 2bar - 4 2bar) ^ (5 3bar - 5 ibar) for i in {4,5}: the two
// generators of the first homology of the board [3,5] x [2,5].
inline ZChain e_generator(int i)
{
    if (i != 4 && i != 5) throw LabelError("e_generator: i must be 4 or 5");
    auto diff = [](Edge e1, Edge e2) {
        ZChain c(IntRing{}, GraphKind::Bipartite, 0);
        c.add_term(IntRing::one(), Face{{e1}});
        c.add_term(IntRing::from_int(-1), Face{{e2}});
        return c;
    };
    return wedge(diff(Edge{3, 2}, Edge{4, 2}), diff(Edge{5, 3}, Edge{5, i}));
}

// --- composite torsion cycles -----------------------------------------------

struct WkParams {
    int k, a, b;
    int m0() const { return a + 3 * b - 2; }
    int n0() const { return 2 * a + 3 * b - 3; }
    int m() const { return k + a + 3 * b - 1; }
    int n() const { return k + 2 * a + 3 * b - 1; }
    int d() const { return k + a + 2 * b - 2; }
};

inline void validate_wk(const WkParams& p)
{
    if (p.k < 0) throw DomainError("w_k: need k >= 0");
    if (!((p.a >= 1 && p.b >= 2) || (p.a == 0 && p.b >= 3)))
        throw DomainError("w_k: need a >= 1, b >= 2 (or a = 0, b >= 3)");
}

// w_{k+1} = z_{k+1,k+2} ^ gamma_{m0,n0-1} shifted by (i,j) -> (i+k+1, j+k+2);
// a d-cycle supported on the board [1,m] x [1,n-1], viewed in M_{m,n}.
inline ZChain w_k(int k, int a, int b)
{
    WkParams p{k, a, b};
    validate_wk(p);
    ZChain z = z_top(k + 1);
    ZChain g = gamma_mn(p.m0(), p.n0() - 1);
    std::unordered_map<int, int> rmap = shift_map(1, p.m0(), k + 1);
    std::unordered_map<int, int> cmap = shift_map(1, p.n0() - 1, k + 2);
    return wedge(z, relabel(g, rmap, cmap));
}

// Difference factors of w_1 (k = 0) in order: the z_{1,2} factor followed by
// the shifted gamma factors. Each factor's two edges share exactly one
// vertex once embedded in K_{m+n}.
inline std::vector<std::pair<Edge, Edge>> w1_factors(int a, int b)
{
    WkParams p{0, a, b};
    validate_wk(p);
    std::vector<std::pair<Edge, Edge>> out;
    out.push_back({Edge{1, 1}, Edge{1, 2}});
    for (auto [e1, e2] : gamma_mn_factors(p.m0(), p.n0() - 1)) {
        out.push_back({Edge{e1.a + 1, e1.b + 2}, Edge{e2.a + 1, e2.b + 2}});
    }
    return out;
}

// Vertex relabeling of K_{m+n} carrying w_1 factor-by-factor onto
// gamma_{m0+n0+2}: factor j becomes ((3j-2)(3j-1) - (3j-1)(3j)).
inline std::unordered_map<int, int> w1_to_gamma_vertex_map(int a, int b)
{
    WkParams p{0, a, b};
    validate_wk(p);
    Embedding emb{p.m()};
    std::unordered_map<int, int> vmap;
    int j = 0;
    for (const auto& [e1, e2] : w1_factors(a, b)) {
        Face f1 = emb.apply(Face{{e1}});
        Face f2 = emb.apply(Face{{e2}});
        int u1 = f1.edges[0].a, v1 = f1.edges[0].b;
        int u2 = f2.edges[0].a, v2 = f2.edges[0].b;
        int shared = (u1 == u2 || u1 == v2) ? u1 : v1;
        int first = u1 == shared ? v1 : u1;
        int second = u2 == shared ? v2 : u2;
        vmap[first] = 3 * j + 1;
        vmap[shared] = 3 * j + 2;
        vmap[second] = 3 * j + 3;
        ++j;
    }
    return vmap;
}

// --- recipe addressing (CLI surface) -----------------------------------------

struct Recipe {
    std::string name;
    ZChain chain;
    std::optional<ComplexSpec> home;  // natural complex for order checks
};

// Formats: "rho", "z_top:3", "gamma_3r:2", "gamma_mn:4,5", "w_k:0,1,2",
// "z_uv:3,4", "gamma12:2,3,4,5", "w_uv:4,5", "e:4".
inline Recipe parse_recipe(const std::string& text)
{
    std::string name = text;
    std::vector<int> args;
    if (auto pos = text.find(':'); pos != std::string::npos) {
        name = text.substr(0, pos);
        std::string rest = text.substr(pos + 1);
        std::size_t start = 0;
        while (start <= rest.size()) {
            auto comma = rest.find(',', start);
            std::string tok = rest.substr(start, comma == std::string::npos ? std::string::npos
                                                                            : comma - start);
            if (!tok.empty()) args.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw DomainError("recipe " + name + ": expected " + std::to_string(n) +
                              " argument(s)");
    };
    if (name == "rho") {
        need(0);
        return {text, rho(), ComplexSpec::gamma(5, 5)};
    }
    if (name == "z_top") {
        need(1);
        return {text, z_top(args[0]), ComplexSpec::chessboard(args[0], args[0] + 1)};
    }
    if (name == "gamma_3r") {
        need(1);
        return {text, gamma_3r(args[0]), ComplexSpec::matching_complex(3 * args[0] + 1)};
    }
    if (name == "gamma_mn") {
        need(2);
        return {text, gamma_mn(args[0], args[1]), ComplexSpec::chessboard(args[0], args[1])};
    }
    if (name == "w_k") {
        need(3);
        WkParams p{args[0], args[1], args[2]};
        return {text, w_k(args[0], args[1], args[2]), ComplexSpec::chessboard(p.m(), p.n())};
    }
    if (name == "z_uv") {
        need(2);
        return {text, z_uv(args[0], args[1]), ComplexSpec::sub_board({3, 4, 5}, {2, 3, 4, 5})};
    }
    if (name == "gamma12") {
        need(4);
        return {text, gamma12(args[0], args[1], args[2], args[3]),
                ComplexSpec::sub_board({3, 4, 5}, {2, 3, 4, 5})};
    }
    if (name == "w_uv") {
        need(2);
        return {text, w_uv(args[0], args[1]), ComplexSpec::sub_board({3, 4, 5}, {2, 3, 4, 5})};
    }
    if (name == "e") {
        need(1);
        return {text, e_generator(args[0]), ComplexSpec::sub_board({3, 4, 5}, {2, 3, 4, 5})};
    }
    throw DomainError("unknown cycle recipe: " + name);
}

}  // namespace chesshom
