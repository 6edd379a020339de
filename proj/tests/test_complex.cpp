#include "chesshom/complex.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace chesshom;

namespace {

long binom(long n, long r)
{
    if (r < 0 || r > n) return 0;
    long b = 1;
    for (long i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
    return b;
}

long board_count(int m, int n, int d)
{
    long k = d + 1, f = 1;
    for (long i = 2; i <= k; ++i) f *= i;
    return binom(m, k) * binom(n, k) * f;
}

}  // namespace

TEST_CASE("chessboard 2x2 one-faces in canonical order")
{
    auto faces = enumerate_faces(ComplexSpec::chessboard(2, 2), 1);
    REQUIRE(faces.size() == 2);
    CHECK(faces[0] == Face{{Edge{1, 1}, Edge{2, 2}}});
    CHECK(faces[1] == Face{{Edge{1, 2}, Edge{2, 1}}});
}

TEST_CASE("chessboard 5x5 has 600 two-faces")
{
    auto faces = enumerate_faces(ComplexSpec::chessboard(5, 5), 2);
    CHECK(faces.size() == 600);  // C(5,3)^2 * 3!
    CHECK(faces.size() == oracle::brute_force_faces(ComplexSpec::chessboard(5, 5), 2).size());
}

TEST_CASE("face count formula across boards")
{
    for (int m = 1; m <= 7; ++m)
        for (int n = 1; n <= 7; ++n) {
            ComplexSpec spec = ComplexSpec::chessboard(m, n);
            for (int d = 0; d <= std::min(m, n); ++d)
                CHECK(static_cast<long>(enumerate_faces(spec, d).size()) == board_count(m, n, d));
        }
}

TEST_CASE("enumeration matches brute force on mixed specs")
{
    std::vector<ComplexSpec> specs = {
        ComplexSpec::chessboard(3, 4),
        ComplexSpec::gamma(4, 4),
        ComplexSpec::filtration_stage(4, 4, 0),
        ComplexSpec::filtration_stage(4, 4, 1),
        ComplexSpec::filtration_stage(4, 4, 2),
        ComplexSpec::sub_board({2, 4, 5}, {1, 3, 6}),
        ComplexSpec::matching_complex(6),
    };
    for (const auto& spec : specs)
        for (int d = -1; d <= complex_dimension(spec) + 1; ++d)
            CHECK(enumerate_faces(spec, d) == oracle::brute_force_faces(spec, d));
}

TEST_CASE("every enumerated face satisfies the matching property")
{
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 1 + static_cast<int>(rng() % 6);
        int n = 1 + static_cast<int>(rng() % 6);
        if (m + n > 12) continue;
        ComplexSpec spec = ComplexSpec::chessboard(m, n);
        int d = static_cast<int>(rng() % 4);
        for (const Face& f : enumerate_faces(spec, d)) {
            CHECK(is_face(spec, f));
            std::set<int> rows, cols;
            for (const Edge& e : f.edges) {
                CHECK(rows.insert(e.a).second);
                CHECK(cols.insert(e.b).second);
            }
        }
    }
}

TEST_CASE("gamma keeps 22 of the 25 vertices at (5,5)")
{
    auto verts = enumerate_faces(ComplexSpec::gamma(5, 5), 0);
    CHECK(verts.size() == 22);  // forbidden: 3 1bar, 4 1bar, 5 1bar
    for (const Face& f : verts) {
        if (f.edges[0].b == 1) CHECK(f.edges[0].a <= 2);
    }
}

TEST_CASE("gamma faces are the chessboard faces avoiding s 1bar, s >= 3")
{
    for (auto [m, n] : {std::pair{4, 4}, std::pair{5, 5}, std::pair{3, 5}}) {
        ComplexSpec board = ComplexSpec::chessboard(m, n);
        ComplexSpec gam = ComplexSpec::gamma(m, n);
        for (int d = 0; d <= complex_dimension(board); ++d) {
            std::vector<Face> expected;
            for (const Face& f : enumerate_faces(board, d)) {
                bool bad = false;
                for (const Edge& e : f.edges)
                    if (e.b == 1 && e.a >= 3) bad = true;
                if (!bad) expected.push_back(f);
            }
            CHECK(enumerate_faces(gam, d) == expected);
        }
    }
}

TEST_CASE("filtration stages nest and their differences match the carving")
{
    for (auto [m, n] : {std::pair{4, 4}, std::pair{5, 5}, std::pair{3, 6}, std::pair{2, 4}}) {
        ComplexSpec d0 = ComplexSpec::filtration_stage(m, n, 0);
        ComplexSpec d1 = ComplexSpec::filtration_stage(m, n, 1);
        ComplexSpec d2 = ComplexSpec::filtration_stage(m, n, 2);
        ComplexSpec gam = ComplexSpec::gamma(m, n);
        for (int d = 0; d <= complex_dimension(d2); ++d) {
            auto f0 = enumerate_faces(d0, d);
            auto f1 = enumerate_faces(d1, d);
            auto f2 = enumerate_faces(d2, d);
            CHECK(f2 == enumerate_faces(gam, d));
            std::set<Face> s0(f0.begin(), f0.end()), s1(f1.begin(), f1.end()),
                s2(f2.begin(), f2.end());
            for (const Face& f : s0) CHECK(s1.count(f) == 1);
            for (const Face& f : s1) CHECK(s2.count(f) == 1);

            // stage 2 minus stage 1: faces with both first rows away from col 1
            for (const Face& f : s2) {
                bool row1_off = false, row2_off = false;
                for (const Edge& e : f.edges) {
                    if (e.a == 1 && e.b >= 2) row1_off = true;
                    if (e.a == 2 && e.b >= 2) row2_off = true;
                }
                CHECK((s1.count(f) == 0) == (row1_off && row2_off));
            }
            // stage 1 minus stage 0: exactly one of the first rows away from col 1
            for (const Face& f : s1) {
                bool off = false;
                for (const Edge& e : f.edges)
                    if (e.a <= 2 && e.b >= 2) off = true;
                CHECK((s0.count(f) == 0) == off);
            }
        }
    }
}

TEST_CASE("stage 0 is the join of the two-point column with the shifted board")
{
    // faces of M({1,2},{1}) * M([3,5],[2,5]) of dimension 1
    ComplexSpec d0 = ComplexSpec::filtration_stage(5, 5, 0);
    std::set<Face> got;
    for (const Face& f : enumerate_faces(d0, 1)) got.insert(f);

    ComplexSpec small = ComplexSpec::sub_board({1, 2}, {1});
    ComplexSpec rest = ComplexSpec::sub_board({3, 4, 5}, {2, 3, 4, 5});
    std::set<Face> expected;
    for (int da = -1; da <= 0; ++da) {
        int db = 0 - da;  // |a| + |b| = 2 edges
        for (const Face& fa : enumerate_faces(small, da))
            for (const Face& fb : enumerate_faces(rest, db)) {
                Face u;
                u.edges = fa.edges;
                u.edges.insert(u.edges.end(), fb.edges.begin(), fb.edges.end());
                std::sort(u.edges.begin(), u.edges.end());
                expected.insert(u);
            }
    }
    CHECK(got == expected);
}

TEST_CASE("face_index inverts enumeration and rejects non-faces")
{
    ComplexSpec spec = ComplexSpec::chessboard(2, 2);
    CHECK(face_index(spec, 1, Face{{Edge{1, 1}, Edge{2, 2}}}) == 0);
    CHECK(face_index(spec, 1, Face{{Edge{1, 2}, Edge{2, 1}}}) == 1);
    CHECK_THROWS_AS(face_index(spec, 1, Face{{Edge{1, 1}, Edge{2, 1}}}), NotAFace);
    CHECK_THROWS_AS(face_index(ComplexSpec::gamma(5, 5), 0, Face{{Edge{4, 1}}}), NotAFace);

    ComplexSpec m34 = ComplexSpec::chessboard(3, 4);
    for (int d = 0; d <= 2; ++d) {
        auto faces = enumerate_faces(m34, d);
        for (std::size_t i = 0; i < faces.size(); ++i)
            CHECK(face_index(m34, d, faces[i]) == static_cast<long>(i));
    }
}

TEST_CASE("complex dimensions")
{
    CHECK(complex_dimension(ComplexSpec::chessboard(5, 5)) == 4);
    CHECK(complex_dimension(ComplexSpec::matching_complex(7)) == 2);
    CHECK(complex_dimension(ComplexSpec::gamma(5, 5)) == 4);
    CHECK(complex_dimension(ComplexSpec::filtration_stage(5, 5, 0)) == 3);
    // oracle: largest nonempty enumeration
    for (const auto& spec :
         {ComplexSpec::gamma(3, 5), ComplexSpec::filtration_stage(4, 6, 0),
          ComplexSpec::filtration_stage(2, 3, 1), ComplexSpec::sub_board({1, 2}, {7})}) {
        int top = complex_dimension(spec);
        CHECK(!enumerate_faces(spec, top).empty());
        CHECK(enumerate_faces(spec, top + 1).empty());
    }
}

TEST_CASE("nu formula")
{
    CHECK(nu(5, 5) == 2);
    CHECK(nu(1, 1) == 0);
    CHECK(nu(3, 7) == 2);
    CHECK(nu(4, 7) == 3);  // m-1 when n >= 2m-1
    CHECK_THROWS_AS(nu(7, 3), DomainError);
}

TEST_CASE("embedding sends board faces to matchings of the big complete graph")
{
    for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 4}, std::pair{4, 4}}) {
        ComplexSpec board = ComplexSpec::chessboard(m, n);
        ComplexSpec target = ComplexSpec::matching_complex(m + n);
        Embedding emb{m};
        for (int d = 0; d <= complex_dimension(board); ++d)
            for (const Face& f : enumerate_faces(board, d)) CHECK(is_face(target, emb.apply(f)));
    }
}

TEST_CASE("faces serialize as arrays of pairs")
{
    Face f{{Edge{1, 1}, Edge{2, 2}}};
    CHECK(face_to_json(f).dump() == "[[1,1],[2,2]]");
    CHECK(face_from_json(face_to_json(f)) == f);
}

TEST_CASE("spec factories reject invalid parameters")
{
    CHECK_THROWS_AS(ComplexSpec::chessboard(0, 3), DomainError);
    CHECK_THROWS_AS(ComplexSpec::gamma(1, 3), DomainError);
    CHECK_THROWS_AS(ComplexSpec::filtration_stage(3, 2, 1), DomainError);
    CHECK_THROWS_AS(ComplexSpec::filtration_stage(3, 3, 5), DomainError);
    CHECK_THROWS_AS(ComplexSpec::sub_board({1, 1}, {2}), DomainError);
}
