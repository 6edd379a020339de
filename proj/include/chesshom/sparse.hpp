// Sparse exact matrices with face-indexed rows/columns, boundary matrix
// assembly, and the triplet text format.
#pragma once

#include "chesshom/chain.hpp"
#include "chesshom/complex.hpp"
#include "chesshom/errors.hpp"
#include "chesshom/ring.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace chesshom {

template <class R>
struct SparseMat {
    using elem = typename R::elem;
    using entry = std::pair<long, elem>;  // (row, value), sorted by row

    R ring;
    long rows = 0;
    long cols = 0;
    std::vector<std::vector<entry>> col_entries;

    explicit SparseMat(R r, long nrows = 0, long ncols = 0)
        : ring(r), rows(nrows), cols(ncols), col_entries(static_cast<std::size_t>(ncols))
    {
    }

    void set(long r, long c, elem v)
    {
        if (ring.is_zero(v)) return;
        col_entries[static_cast<std::size_t>(c)].emplace_back(r, std::move(v));
    }

    void sort_columns()
    {
        for (auto& col : col_entries)
            std::sort(col.begin(), col.end(),
                      [](const entry& x, const entry& y) { return x.first < y.first; });
    }

    long nnz() const
    {
        long n = 0;
        for (const auto& col : col_entries) n += static_cast<long>(col.size());
        return n;
    }
};

using ZMat = SparseMat<IntRing>;
using ModMat = SparseMat<ModRing>;

// Matrix of the boundary operator C_d -> C_{d-1}: rows indexed by (d-1)-faces,
// columns by d-faces, both in canonical order. d = 0 produces the 1-row
// augmentation matrix onto the empty face.
template <class R>
SparseMat<R> boundary_matrix_from_tables(R ring, const FaceTable& rows_tab,
                                         const FaceTable& cols_tab)
{
    SparseMat<R> mat(ring, static_cast<long>(rows_tab.size()), static_cast<long>(cols_tab.size()));
    const auto& faces = cols_tab.faces();
    for (std::size_t c = 0; c < faces.size(); ++c) {
        const Face& face = faces[c];
        bool neg = false;
        for (std::size_t i = 0; i < face.edges.size(); ++i) {
            Face sub;
            sub.edges.reserve(face.edges.size() - 1);
            for (std::size_t j = 0; j < face.edges.size(); ++j)
                if (j != i) sub.edges.push_back(face.edges[j]);
            mat.set(rows_tab.index(sub), static_cast<long>(c),
                    neg ? ring.neg(ring.one()) : ring.one());
            neg = !neg;
        }
    }
    mat.sort_columns();
    return mat;
}

template <class R>
SparseMat<R> boundary_matrix(const ComplexSpec& spec, int d, R ring)
{
    if (d < 0) throw DomainError("boundary_matrix: need d >= 0");
    FaceTable rows_tab(spec, d - 1), cols_tab(spec, d);
    return boundary_matrix_from_tables(ring, rows_tab, cols_tab);
}

inline ZMat z_boundary_matrix(const ComplexSpec& spec, int d)
{
    return boundary_matrix(spec, d, IntRing{});
}

// Checks faces(small) is a subset of faces(big) in the given dimension.
inline void require_subcomplex(const ComplexSpec& big, const ComplexSpec& small, int d)
{
    for (const Face& f : enumerate_faces(small, d))
        if (!is_face(big, f))
            throw NotASubcomplex("pair: a face of the subcomplex is not a face of the big complex");
}

// Faces of big not in small, canonical order: the chain basis of the
// quotient complex C(big)/C(small) in dimension d.
inline std::vector<Face> relative_faces(const ComplexSpec& big, const ComplexSpec& small, int d)
{
    require_subcomplex(big, small, d);
    std::vector<Face> out;
    for (Face& f : enumerate_faces(big, d))
        if (!is_face(small, f)) out.push_back(std::move(f));
    return out;
}

// Boundary on the quotient chain complex: rows/columns indexed by faces of
// big not in small; boundary terms landing in small are dropped.
template <class R>
SparseMat<R> relative_boundary_matrix(const ComplexSpec& big, const ComplexSpec& small, int d,
                                      R ring)
{
    if (d < 0) throw DomainError("relative_boundary_matrix: need d >= 0");
    std::vector<Face> row_faces = relative_faces(big, small, d - 1);
    std::vector<Face> col_faces = relative_faces(big, small, d);

    std::unordered_map<Face, long, FaceHash> row_index;
    row_index.reserve(row_faces.size() * 2);
    for (std::size_t i = 0; i < row_faces.size(); ++i) row_index.emplace(row_faces[i], i);

    SparseMat<R> mat(ring, static_cast<long>(row_faces.size()),
                     static_cast<long>(col_faces.size()));
    for (std::size_t c = 0; c < col_faces.size(); ++c) {
        const Face& face = col_faces[c];
        bool neg = false;
        for (std::size_t i = 0; i < face.edges.size(); ++i) {
            Face sub;
            sub.edges.reserve(face.edges.size() - 1);
            for (std::size_t j = 0; j < face.edges.size(); ++j)
                if (j != i) sub.edges.push_back(face.edges[j]);
            if (auto it = row_index.find(sub); it != row_index.end())
                mat.set(it->second, static_cast<long>(c), neg ? ring.neg(ring.one()) : ring.one());
            neg = !neg;
        }
    }
    mat.sort_columns();
    return mat;
}

// Sparse column vector of a chain in the face basis of the given table.
template <class R>
std::vector<std::pair<long, typename R::elem>> chain_to_column(const Chain<R>& c,
                                                               const FaceTable& tab)
{
    std::vector<std::pair<long, typename R::elem>> out;
    out.reserve(c.terms().size());
    for (const auto& [f, v] : c.terms()) out.emplace_back(tab.index(f), v);
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

// Triplet text format: header "%dim rows cols nnz", one "row col value"
// line per entry, zero-based indices.
template <class R>
void write_triplets(std::ostream& os, const SparseMat<R>& m)
{
    os << "%dim " << m.rows << " " << m.cols << " " << m.nnz() << "\n";
    for (long c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.col_entries[static_cast<std::size_t>(c)])
            os << r << " " << c << " " << v << "\n";
}

template <class R>
SparseMat<R> read_triplets(std::istream& is, R ring)
{
    std::string tag;
    long rows = 0, cols = 0, nnz = 0;
    is >> tag >> rows >> cols >> nnz;
    if (tag != "%dim") throw DomainError("triplet format: missing %dim header");
    SparseMat<R> m(ring, rows, cols);
    for (long k = 0; k < nnz; ++k) {
        long r = 0, c = 0;
        std::string val;
        is >> r >> c >> val;
        if constexpr (R::is_field)
            m.set(r, c, ring.from_int(std::stol(val)));
        else
            m.set(r, c, Int(val));
    }
    m.sort_columns();
    return m;
}

}  // namespace chesshom
