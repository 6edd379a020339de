// Chessboard and matching complexes: face enumeration with a canonical
// (lexicographic) order, the Gamma subcomplex, the filtration stages used by
// the pair audits, and sub-boards on explicit label sets.
#pragma once

#include "chesshom/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

namespace chesshom {

// An edge of K_{m,n} as (row, col), or of K_N as (u, v) with u < v.
struct Edge {
    int a = 0;
    int b = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge& x, const Edge& y)
    {
        if (auto c = x.a <=> y.a; c != 0) return c;
        return x.b <=> y.b;
    }
};

// A face is a strictly increasing edge sequence satisfying the matching
// property of its ambient complex. dimension = #edges - 1; the empty face
// has dimension -1.
struct Face {
    std::vector<Edge> edges;

    int dim() const { return static_cast<int>(edges.size()) - 1; }

    friend bool operator==(const Face&, const Face&) = default;
    friend auto operator<=>(const Face& x, const Face& y)
    {
        return std::lexicographical_compare_three_way(x.edges.begin(), x.edges.end(),
                                                      y.edges.begin(), y.edges.end());
    }
};

struct FaceHash {
    std::size_t operator()(const Face& f) const
    {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (const Edge& e : f.edges) {
            h ^= (static_cast<std::size_t>(e.a) << 17) ^ static_cast<std::size_t>(e.b) ^ (h << 6) ^
                 (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return h;
    }
};

enum class GraphKind { Bipartite, Complete };

enum class Family { Board, Gamma, Delta0, Delta1, Delta2, Matching };

// Symbolic description of which complex to build. Bipartite families carry
// their row/col label sets (sorted, original labels preserved so wedges
// across disjoint boards stay valid).
class ComplexSpec {
public:
    Family family() const { return family_; }
    GraphKind kind() const
    {
        return family_ == Family::Matching ? GraphKind::Complete : GraphKind::Bipartite;
    }
    const std::vector<int>& rows() const { return rows_; }
    const std::vector<int>& cols() const { return cols_; }
    int n_vertices() const { return n_vertices_; }

    static ComplexSpec chessboard(int m, int n)
    {
        if (m < 1 || n < 1) throw DomainError("chessboard: need m,n >= 1");
        return board_on(iota_set(1, m), iota_set(1, n), Family::Board);
    }

    static ComplexSpec sub_board(std::vector<int> row_set, std::vector<int> col_set)
    {
        return board_on(std::move(row_set), std::move(col_set), Family::Board);
    }

    static ComplexSpec gamma(int m, int n)
    {
        if (m < 2) throw DomainError("gamma: need m >= 2");
        if (n < 1) throw DomainError("gamma: need n >= 1");
        return board_on(iota_set(1, m), iota_set(1, n), Family::Gamma);
    }

    static ComplexSpec gamma_on(std::vector<int> row_set, std::vector<int> col_set)
    {
        if (row_set.size() < 2) throw DomainError("gamma: need at least two rows");
        if (col_set.empty()) throw DomainError("gamma: need at least one column");
        return board_on(std::move(row_set), std::move(col_set), Family::Gamma);
    }

    static ComplexSpec filtration_stage(int m, int n, int i)
    {
        if (m < 2 || n < 3) throw DomainError("filtration_stage: need m >= 2, n >= 3");
        if (i < 0 || i > 2) throw DomainError("filtration_stage: stage must be 0, 1 or 2");
        Family f = i == 0 ? Family::Delta0 : (i == 1 ? Family::Delta1 : Family::Delta2);
        return board_on(iota_set(1, m), iota_set(1, n), f);
    }

    static ComplexSpec matching_complex(int n_vertices)
    {
        if (n_vertices < 0) throw DomainError("matching_complex: need N >= 0");
        ComplexSpec s;
        s.family_ = Family::Matching;
        s.n_vertices_ = n_vertices;
        return s;
    }

    // Stable textual key, also used for cache file names.
    std::string key() const
    {
        auto set_str = [](const std::vector<int>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) s += '.';
                s += std::to_string(v[i]);
            }
            return s;
        };
        switch (family_) {
            case Family::Matching: return "match_n" + std::to_string(n_vertices_);
            case Family::Board: return "board_r" + set_str(rows_) + "_c" + set_str(cols_);
            case Family::Gamma: return "gamma_r" + set_str(rows_) + "_c" + set_str(cols_);
            case Family::Delta0: return "delta0_r" + set_str(rows_) + "_c" + set_str(cols_);
            case Family::Delta1: return "delta1_r" + set_str(rows_) + "_c" + set_str(cols_);
            case Family::Delta2: return "delta2_r" + set_str(rows_) + "_c" + set_str(cols_);
        }
        return "?";
    }

    friend bool operator==(const ComplexSpec&, const ComplexSpec&) = default;

private:
    static std::vector<int> iota_set(int lo, int hi)
    {
        std::vector<int> v;
        for (int i = lo; i <= hi; ++i) v.push_back(i);
        return v;
    }

    static ComplexSpec board_on(std::vector<int> row_set, std::vector<int> col_set, Family f)
    {
        std::sort(row_set.begin(), row_set.end());
        std::sort(col_set.begin(), col_set.end());
        if (std::adjacent_find(row_set.begin(), row_set.end()) != row_set.end() ||
            std::adjacent_find(col_set.begin(), col_set.end()) != col_set.end())
            throw DomainError("board: duplicate labels in row/col set");
        ComplexSpec s;
        s.family_ = f;
        s.rows_ = std::move(row_set);
        s.cols_ = std::move(col_set);
        return s;
    }

    Family family_ = Family::Board;
    std::vector<int> rows_;
    std::vector<int> cols_;
    int n_vertices_ = 0;
};

// nu_{m,n} = min{m-1, ceil((m+n-4)/3)}: the bottom degree of (possibly)
// nonvanishing reduced homology of the chessboard complex.
inline int nu(int m, int n)
{
    if (m < 1) throw DomainError("nu: need m >= 1");
    if (m > n) throw DomainError("nu: need m <= n (pre-sort the arguments)");
    int ceil3 = (m + n - 2) / 3;  // = ceil((m+n-4)/3); m+n >= 2 here
    return std::min(m - 1, ceil3);
}

inline int complex_dimension(const ComplexSpec& spec)
{
    const int m = static_cast<int>(spec.rows().size());
    const int n = static_cast<int>(spec.cols().size());
    switch (spec.family()) {
        case Family::Matching: return spec.n_vertices() / 2 - 1;
        case Family::Board: return std::min(m, n) - 1;
        case Family::Gamma:
        case Family::Delta2:
        case Family::Delta1: return n == 0 ? -1 : std::min(m, n) - 1;
        case Family::Delta0: return std::min(m - 2, n - 1);
    }
    return -1;
}

namespace detail {

// Family-specific edge admissibility for bipartite boards. ri/ci are
// positions of the labels within the sorted row/col sets.
inline bool edge_allowed(Family f, int ri, int ci)
{
    switch (f) {
        case Family::Board: return true;
        case Family::Gamma:
        case Family::Delta2:
        case Family::Delta1: return ri < 2 || ci != 0;
        case Family::Delta0: return ri < 2 ? ci == 0 : ci != 0;
        default: return true;
    }
}

// Delta1 additionally forbids faces where both of the first two rows are
// matched away from the first column.
inline bool face_allowed(Family f, int off_col1_first_two)
{
    if (f == Family::Delta1) return off_col1_first_two < 2;
    return true;
}

template <class Fn>
void enumerate_bipartite(const ComplexSpec& spec, int want, Fn&& emit)
{
    const auto& rows = spec.rows();
    const auto& cols = spec.cols();
    const int m = static_cast<int>(rows.size());
    const int n = static_cast<int>(cols.size());
    if (want > std::min(m, n)) return;

    std::vector<Edge> cur;
    std::vector<char> col_used(static_cast<std::size_t>(n), 0);

    // Backtracking over rows in increasing label order, choosing an unused
    // column or skipping; emits faces directly in lexicographic order.
    std::function<void(int, int)> rec = [&](int ri, int off12) {
        int have = static_cast<int>(cur.size());
        if (have == want) {
            emit(Face{cur});
            return;
        }
        if (ri >= m || m - ri < want - have) return;
        for (int ci = 0; ci < n; ++ci) {
            if (col_used[ci] || !edge_allowed(spec.family(), ri, ci)) continue;
            int offid = (ri < 2 && ci != 0) ? off12 + 1 : off12;
            if (!face_allowed(spec.family(), offid)) continue;
            col_used[ci] = 1;
            cur.push_back(Edge{rows[ri], cols[ci]});
            rec(ri + 1, offid);
            cur.pop_back();
            col_used[ci] = 0;
        }
        rec(ri + 1, off12);
    };
    rec(0, 0);
}

template <class Fn>
void enumerate_matching(int n_vertices, int want, Fn&& emit)
{
    if (2 * want > n_vertices) return;
    std::vector<Edge> all;
    for (int u = 1; u <= n_vertices; ++u)
        for (int v = u + 1; v <= n_vertices; ++v) all.push_back(Edge{u, v});

    std::vector<Edge> cur;
    std::vector<char> used(static_cast<std::size_t>(n_vertices) + 1, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(cur.size()) == want) {
            emit(Face{cur});
            return;
        }
        for (std::size_t i = from; i < all.size(); ++i) {
            const Edge& e = all[i];
            if (used[e.a] || used[e.b]) continue;
            used[e.a] = used[e.b] = 1;
            cur.push_back(e);
            rec(i + 1);
            cur.pop_back();
            used[e.a] = used[e.b] = 0;
        }
    };
    rec(0);
}

}  // namespace detail

// All d-faces in canonical (lexicographic on edge sequences) order.
// d = -1 yields the single empty face; d beyond the dimension yields [].
inline std::vector<Face> enumerate_faces(const ComplexSpec& spec, int d)
{
    std::vector<Face> out;
    if (d < -1) return out;
    if (d == -1) {
        out.push_back(Face{});
        return out;
    }
    auto emit = [&out](Face f) { out.push_back(std::move(f)); };
    if (spec.kind() == GraphKind::Complete)
        detail::enumerate_matching(spec.n_vertices(), d + 1, emit);
    else
        detail::enumerate_bipartite(spec, d + 1, emit);
    return out;
}

// Validates a face against the spec; returns a reason string on failure.
inline bool face_violation(const ComplexSpec& spec, const Face& face, std::string* why = nullptr)
{
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return true;
    };
    for (std::size_t i = 0; i + 1 < face.edges.size(); ++i)
        if (!(face.edges[i] < face.edges[i + 1]))
            return fail("edges not strictly increasing");

    if (spec.kind() == GraphKind::Complete) {
        std::vector<char> used(static_cast<std::size_t>(spec.n_vertices()) + 1, 0);
        for (const Edge& e : face.edges) {
            if (e.a < 1 || e.b <= e.a || e.b > spec.n_vertices())
                return fail("edge outside K_N vertex range");
            if (used[e.a] || used[e.b]) return fail("edges share a vertex");
            used[e.a] = used[e.b] = 1;
        }
        return false;
    }

    const auto& rows = spec.rows();
    const auto& cols = spec.cols();
    int off12 = 0;
    std::vector<char> row_used(rows.size(), 0), col_used(cols.size(), 0);
    for (const Edge& e : face.edges) {
        auto rit = std::lower_bound(rows.begin(), rows.end(), e.a);
        auto cit = std::lower_bound(cols.begin(), cols.end(), e.b);
        if (rit == rows.end() || *rit != e.a) return fail("row label not in board");
        if (cit == cols.end() || *cit != e.b) return fail("col label not in board");
        int ri = static_cast<int>(rit - rows.begin());
        int ci = static_cast<int>(cit - cols.begin());
        if (row_used[ri]) return fail("edges share a row");
        if (col_used[ci]) return fail("edges share a column");
        row_used[ri] = col_used[ci] = 1;
        if (!detail::edge_allowed(spec.family(), ri, ci))
            return fail("edge forbidden by subcomplex");
        if (ri < 2 && ci != 0) ++off12;
    }
    if (!detail::face_allowed(spec.family(), off12))
        return fail("face forbidden by filtration stage");
    return false;
}

inline bool is_face(const ComplexSpec& spec, const Face& face)
{
    return !face_violation(spec, face);
}

// Canonical-order index of all d-faces with O(1) face -> ordinal lookup.
class FaceTable {
public:
    FaceTable(const ComplexSpec& spec, int d) : spec_(spec), d_(d), faces_(enumerate_faces(spec, d))
    {
        index_.reserve(faces_.size() * 2);
        for (std::size_t i = 0; i < faces_.size(); ++i) index_.emplace(faces_[i], i);
    }

    const ComplexSpec& spec() const { return spec_; }
    int dim() const { return d_; }
    const std::vector<Face>& faces() const { return faces_; }
    std::size_t size() const { return faces_.size(); }

    long index(const Face& f) const
    {
        auto it = index_.find(f);
        if (it == index_.end()) {
            std::string why;
            face_violation(spec_, f, &why);
            throw NotAFace("face not in complex" + (why.empty() ? "" : " (" + why + ")"));
        }
        return static_cast<long>(it->second);
    }

    bool contains(const Face& f) const { return index_.count(f) > 0; }

private:
    ComplexSpec spec_;
    int d_;
    std::vector<Face> faces_;
    std::unordered_map<Face, std::size_t, FaceHash> index_;
};

// Position of a d-face in the canonical order (inverse of enumerate_faces).
inline long face_index(const ComplexSpec& spec, int d, const Face& face)
{
    std::string why;
    if (face_violation(spec, face, &why)) throw NotAFace("face_index: " + why);
    if (face.dim() != d) throw NotAFace("face_index: dimension mismatch");
    return FaceTable(spec, d).index(face);
}

// View M_{m,n} inside the matching complex M_{m+n}: row i stays i, column
// label j becomes m + j.
struct Embedding {
    int m;

    int row_vertex(int i) const { return i; }
    int col_vertex(int j) const { return m + j; }

    Face apply(const Face& f) const
    {
        Face g;
        g.edges.reserve(f.edges.size());
        for (const Edge& e : f.edges) {
            int u = row_vertex(e.a), v = col_vertex(e.b);
            g.edges.push_back(u < v ? Edge{u, v} : Edge{v, u});
        }
        std::sort(g.edges.begin(), g.edges.end());
        return g;
    }
};

inline nlohmann::json face_to_json(const Face& f)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const Edge& e : f.edges) arr.push_back(nlohmann::json::array({e.a, e.b}));
    return arr;
}

inline Face face_from_json(const nlohmann::json& j)
{
    Face f;
    for (const auto& pair : j) f.edges.push_back(Edge{pair.at(0).get<int>(), pair.at(1).get<int>()});
    return f;
}

}  // namespace chesshom
