// Sparse chains over Z and Z_p, the simplicial boundary operator, wedge
// products and vertex relabelings. Generators are wedges of edges; the
// canonical generator of a face lists its edges in increasing lexicographic
// order, any other listing contributes the permutation sign.
#pragma once

#include "chesshom/complex.hpp"
#include "chesshom/errors.hpp"
#include "chesshom/ring.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace chesshom {

namespace detail {

inline bool edges_conflict(GraphKind kind, const Edge& x, const Edge& y)
{
    if (kind == GraphKind::Bipartite) return x.a == y.a || x.b == y.b;
    return x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b;
}

// Sorts the edge list in place, returning the sign of the sorting
// permutation; throws if two edges share a vertex.
inline int normalize_edges(GraphKind kind, std::vector<Edge>& edges)
{
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (edges_conflict(kind, edges[i], edges[j]))
                throw DisjointnessViolation("wedge monomial has edges sharing a vertex");
    int sign = 1;
    for (std::size_t i = 1; i < edges.size(); ++i) {  // insertion sort, counting swaps
        Edge e = edges[i];
        std::size_t j = i;
        while (j > 0 && e < edges[j - 1]) {
            edges[j] = edges[j - 1];
            --j;
            sign = -sign;
        }
        edges[j] = e;
    }
    return sign;
}

}  // namespace detail

template <class R>
class Chain {
public:
    using elem = typename R::elem;

    Chain(R ring, GraphKind kind, int dim) : ring_(ring), kind_(kind), dim_(dim) {}

    const R& ring() const { return ring_; }
    GraphKind kind() const { return kind_; }
    int dim() const { return dim_; }
    const std::map<Face, elem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // Adds c * (e_0 ^ ... ^ e_d) with the edges as listed; the monomial is
    // sign-normalized into the canonical generator of its face.
    void add_monomial(const elem& c, std::vector<Edge> edges)
    {
        if (ring_.is_zero(c)) return;
        if (static_cast<int>(edges.size()) != dim_ + 1)
            throw DomainError("monomial arity does not match chain dimension");
        int sign = detail::normalize_edges(kind_, edges);
        add_term(sign < 0 ? ring_.neg(c) : c, Face{std::move(edges)});
    }

    // Adds c * f where f is already a canonical face.
    void add_term(const elem& c, Face f)
    {
        if (ring_.is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(std::move(f), c);
        if (!inserted) {
            it->second = ring_.add(it->second, c);
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    elem coefficient(const Face& f) const
    {
        auto it = terms_.find(f);
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    Chain& operator+=(const Chain& o)
    {
        require_compatible(o);
        for (const auto& [f, c] : o.terms_) add_term(c, f);
        return *this;
    }
    Chain& operator-=(const Chain& o)
    {
        require_compatible(o);
        for (const auto& [f, c] : o.terms_) add_term(ring_.neg(c), f);
        return *this;
    }
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(const elem& s, const Chain& c)
    {
        Chain out(c.ring_, c.kind_, c.dim_);
        for (const auto& [f, v] : c.terms_) out.add_term(c.ring_.mul(s, v), f);
        return out;
    }
    friend Chain operator-(const Chain& c) { return c.ring_.neg(c.ring_.one()) * c; }

    friend bool operator==(const Chain& a, const Chain& b)
    {
        return a.kind_ == b.kind_ && a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    void require_compatible(const Chain& o) const
    {
        if (kind_ != o.kind_ || dim_ != o.dim_)
            throw DomainError("chain arithmetic on incompatible chains");
    }

    R ring_;
    GraphKind kind_;
    int dim_;
    std::map<Face, elem> terms_;
};

using ZChain = Chain<IntRing>;

inline ZChain z_chain(GraphKind kind, int dim) { return ZChain(IntRing{}, kind, dim); }

template <class R>
Chain<R> unit_chain(R ring, GraphKind kind, const Face& f)
{
    Chain<R> c(ring, kind, f.dim());
    c.add_term(ring.one(), f);
    return c;
}

// An ordered list of (coefficient, edge-sequence) monomials, not yet
// normalized; mirrors how the explicit chains are written down.
template <class R>
struct WedgeExpr {
    using elem = typename R::elem;

    R ring;
    GraphKind kind;
    std::vector<std::pair<elem, std::vector<Edge>>> monomials;

    WedgeExpr(R r, GraphKind k) : ring(r), kind(k) {}

    WedgeExpr& add(long c, std::vector<Edge> edges)
    {
        monomials.emplace_back(ring.from_int(c), std::move(edges));
        return *this;
    }

    Chain<R> normalize() const
    {
        int dim = monomials.empty() ? -1 : static_cast<int>(monomials.front().second.size()) - 1;
        Chain<R> out(ring, kind, dim);
        for (const auto& [c, edges] : monomials) out.add_monomial(c, edges);
        return out;
    }
};

// Simplicial boundary: for a face with edges g_0 < ... < g_d,
// d(g_0 ^ ... ^ g_d) = sum_i (-1)^i (face minus g_i).
template <class R>
Chain<R> boundary(const Chain<R>& c)
{
    Chain<R> out(c.ring(), c.kind(), c.dim() - 1);
    if (c.dim() < 0) return out;
    for (const auto& [face, coeff] : c.terms()) {
        typename R::elem s = coeff;
        for (std::size_t i = 0; i < face.edges.size(); ++i) {
            Face sub;
            sub.edges.reserve(face.edges.size() - 1);
            for (std::size_t j = 0; j < face.edges.size(); ++j)
                if (j != i) sub.edges.push_back(face.edges[j]);
            out.add_term(s, std::move(sub));
            s = c.ring().neg(s);
        }
    }
    return out;
}

template <class R>
bool is_cycle(const Chain<R>& c)
{
    return boundary(c).is_zero();
}

// Bilinear wedge; each face pair concatenates and sign-normalizes.
// dim = a.dim + b.dim + 1.
template <class R>
Chain<R> wedge(const Chain<R>& a, const Chain<R>& b)
{
    if (a.kind() != b.kind()) throw DomainError("wedge of chains over different graph kinds");
    Chain<R> out(a.ring(), a.kind(), a.dim() + b.dim() + 1);
    for (const auto& [fa, ca] : a.terms())
        for (const auto& [fb, cb] : b.terms()) {
            std::vector<Edge> edges = fa.edges;
            edges.insert(edges.end(), fb.edges.begin(), fb.edges.end());
            out.add_monomial(a.ring().mul(ca, cb), std::move(edges));
        }
    return out;
}

namespace detail {

inline int apply_label_map(const std::unordered_map<int, int>& m, int x)
{
    auto it = m.find(x);
    return it == m.end() ? x : it->second;
}

template <class Map>
void check_injective_on(const Map& m, const std::unordered_set<int>& support,
                        const char* what)
{
    std::unordered_set<int> seen;
    for (int x : support)
        if (!seen.insert(apply_label_map(m, x)).second)
            throw CollisionError(std::string("relabel merges two used ") + what + " labels");
}

}  // namespace detail

// Applies row/column label maps (labels absent from a map stay fixed) and
// renormalizes signs. Bipartite chains only.
template <class R>
Chain<R> relabel(const Chain<R>& c, const std::unordered_map<int, int>& rowmap,
                 const std::unordered_map<int, int>& colmap)
{
    if (c.kind() != GraphKind::Bipartite)
        throw DomainError("relabel(rowmap, colmap) needs a bipartite chain");
    std::unordered_set<int> rows, cols;
    for (const auto& [f, v] : c.terms())
        for (const Edge& e : f.edges) {
            rows.insert(e.a);
            cols.insert(e.b);
        }
    detail::check_injective_on(rowmap, rows, "row");
    detail::check_injective_on(colmap, cols, "column");

    Chain<R> out(c.ring(), c.kind(), c.dim());
    for (const auto& [f, v] : c.terms()) {
        std::vector<Edge> edges;
        edges.reserve(f.edges.size());
        for (const Edge& e : f.edges)
            edges.push_back(Edge{detail::apply_label_map(rowmap, e.a),
                                 detail::apply_label_map(colmap, e.b)});
        out.add_monomial(v, std::move(edges));
    }
    return out;
}

// Vertex relabeling for matching-complex chains (e.g. the shift i -> i+2k+1).
template <class R>
Chain<R> relabel_vertices(const Chain<R>& c, const std::unordered_map<int, int>& vmap)
{
    if (c.kind() != GraphKind::Complete)
        throw DomainError("relabel_vertices needs a matching-complex chain");
    std::unordered_set<int> verts;
    for (const auto& [f, v] : c.terms())
        for (const Edge& e : f.edges) {
            verts.insert(e.a);
            verts.insert(e.b);
        }
    detail::check_injective_on(vmap, verts, "vertex");

    Chain<R> out(c.ring(), c.kind(), c.dim());
    for (const auto& [f, v] : c.terms()) {
        std::vector<Edge> edges;
        edges.reserve(f.edges.size());
        for (const Edge& e : f.edges) {
            int u = detail::apply_label_map(vmap, e.a);
            int w = detail::apply_label_map(vmap, e.b);
            edges.push_back(u < w ? Edge{u, w} : Edge{w, u});
        }
        out.add_monomial(v, std::move(edges));
    }
    return out;
}

inline std::unordered_map<int, int> shift_map(int lo, int hi, int delta)
{
    std::unordered_map<int, int> m;
    for (int i = lo; i <= hi; ++i) m[i] = i + delta;
    return m;
}

// Converts a chain on a chessboard with rows in [1,m] into a chain of the
// matching complex M_{m+n} via j-bar -> m+j. Explicit, never implicit.
template <class R>
Chain<R> embed_chain(const Chain<R>& c, const Embedding& emb)
{
    if (c.kind() != GraphKind::Bipartite) throw DomainError("embed_chain needs a bipartite chain");
    Chain<R> out(c.ring(), GraphKind::Complete, c.dim());
    for (const auto& [f, v] : c.terms()) {
        std::vector<Edge> edges;
        edges.reserve(f.edges.size());
        for (const Edge& e : f.edges) {
            int u = emb.row_vertex(e.a), w = emb.col_vertex(e.b);
            edges.push_back(u < w ? Edge{u, w} : Edge{w, u});
        }
        out.add_monomial(v, std::move(edges));
    }
    return out;
}

namespace detail {

inline nlohmann::json coeff_to_json(const Int& c)
{
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

inline nlohmann::json coeff_to_json(std::int64_t c) { return c; }

}  // namespace detail

template <class R>
nlohmann::json chain_to_json(const Chain<R>& c, const std::string& ring_label)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [f, v] : c.terms())
        terms.push_back({{"c", detail::coeff_to_json(v)}, {"f", face_to_json(f)}});
    return {{"ring", ring_label}, {"dim", c.dim()}, {"terms", terms}};
}

inline nlohmann::json chain_to_json(const ZChain& c) { return chain_to_json(c, "Z"); }

}  // namespace chesshom
