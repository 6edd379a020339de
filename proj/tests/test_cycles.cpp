#include "chesshom/cycles.hpp"

#include "chesshom/homology.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace chesshom;

TEST_CASE("z_top base case and sizes")
{
    ZChain z1 = z_top(1);
    ZChain expected(IntRing{}, GraphKind::Bipartite, 0);
    expected.add_term(Int(1), Face{{Edge{1, 1}}});
    expected.add_term(Int(-1), Face{{Edge{1, 2}}});
    CHECK(z1 == expected);

    for (int k = 1; k <= 5; ++k) {
        ZChain z = z_top(k);
        long fact = 1;
        for (int i = 2; i <= k + 1; ++i) fact *= i;
        CHECK(static_cast<long>(z.size()) == fact);
        CHECK(is_cycle(z));
        for (const auto& [f, c] : z.terms()) CHECK((c == 1 || c == -1));
    }
}

TEST_CASE("z_top generates the free top homology")
{
    ComplexSpec m34 = ComplexSpec::chessboard(3, 4);
    CHECK(class_order(z_top(3), m34) == ClassOrder::infinite());
    CHECK(homology(m34, 2) == HomologyGroup{1, {}});
    CHECK(homology_quotient(m34, 2, {z_top(3)}) == HomologyGroup{});
}

TEST_CASE("gamma_3r shape and torsion class")
{
    ZChain g3 = gamma_3r(1);
    ZChain expected(IntRing{}, GraphKind::Complete, 0);
    expected.add_term(Int(1), Face{{Edge{1, 2}}});
    expected.add_term(Int(-1), Face{{Edge{2, 3}}});
    CHECK(g3 == expected);

    ZChain g6 = gamma_3r(2);
    CHECK(g6.size() == 4);
    CHECK(g6.dim() == 1);
    CHECK(is_cycle(g6));
    CHECK(class_order(g6, ComplexSpec::matching_complex(7)) == ClassOrder::finite(3));
}

TEST_CASE("gamma_mn recursion")
{
    ZChain base = gamma_mn(1, 2);
    CHECK(base.size() == 2);
    CHECK(base.dim() == 0);

    ZChain g33 = gamma_mn(3, 3);
    CHECK(g33.size() == 4);
    CHECK(g33.dim() == 1);
    CHECK(is_cycle(g33));
    // m = n branch appends ((m-1) nbar - m nbar)
    auto factors = gamma_mn_factors(3, 3);
    REQUIRE(factors.size() == 2);
    CHECK(factors[1] == std::pair{Edge{2, 3}, Edge{3, 3}});

    ZChain g45 = gamma_mn(4, 5);
    CHECK(g45.dim() == 2);
    CHECK(is_cycle(g45));
    auto f45 = gamma_mn_factors(4, 5);
    CHECK(f45.back() == std::pair{Edge{4, 4}, Edge{4, 5}});

    // transpose convention for m > n
    ZChain g54 = gamma_mn(5, 4);
    CHECK(is_cycle(g54));
    std::set<int> rows, cols;
    for (const auto& [f, c] : g54.terms())
        for (const Edge& e : f.edges) {
            rows.insert(e.a);
            cols.insert(e.b);
        }
    CHECK(*std::max_element(rows.begin(), rows.end()) == 5);
    CHECK(*std::max_element(cols.begin(), cols.end()) == 4);

    CHECK_THROWS_AS(gamma_mn(2, 3), DomainError);  // m+n not divisible by 3
    CHECK_THROWS_AS(gamma_mn(1, 5), DomainError);  // n > 2m
}

TEST_CASE("gamma_mn classes survive mod 3 in the sweep range")
{
    for (int m = 1; m <= 6; ++m)
        for (int n = m; m + n <= 12 && n <= 2 * m - 2; ++n) {
            if ((m + n) % 3 != 0) continue;
            CAPTURE(m, n);
            CHECK(class_nonzero_mod_p(gamma_mn(m, n), ComplexSpec::chessboard(m, n), 3));
        }
}

TEST_CASE("the twelve-term chain connects the hexagons")
{
    int lab[4] = {2, 3, 4, 5};
    do {
        int s = lab[0], t = lab[1], u = lab[2], v = lab[3];
        CHECK(boundary(gamma12(s, t, u, v)) == z_uv(s, t) - z_uv(u, v));
    } while (std::next_permutation(lab, lab + 4));
    CHECK_THROWS_AS(gamma12(2, 2, 4, 5), LabelError);
}

TEST_CASE("w_uv pairs express the hexagon through the row difference")
{
    for (int u = 3; u <= 5; ++u)
        for (int v = 3; v <= 5; ++v) {
            if (u == v) continue;
            int s = 2, t = 12 - u - v;
            ZChain rows(IntRing{}, GraphKind::Bipartite, 0);
            rows.add_term(Int(1), Face{{Edge{4, s}}});
            rows.add_term(Int(-1), Face{{Edge{3, s}}});
            ZChain cols(IntRing{}, GraphKind::Bipartite, 0);
            cols.add_term(Int(2), Face{{Edge{5, t}}});
            cols.add_term(Int(-1), Face{{Edge{5, u}}});
            cols.add_term(Int(-1), Face{{Edge{5, v}}});
            CHECK(boundary(w_uv(u, v) + w_uv(v, u)) == wedge(rows, cols) - z_uv(u, v));
        }
    CHECK_THROWS_AS(w_uv(2, 3), LabelError);
}

TEST_CASE("rho generates the Gamma group and flips sign under transpositions")
{
    ComplexSpec g55 = ComplexSpec::gamma(5, 5);
    ZChain r = rho();
    CHECK(is_cycle(r));
    CHECK(class_order(r, g55) == ClassOrder::finite(3));
    CHECK(homology_quotient(g55, 2, {r}) == HomologyGroup{});

    auto negates = [&](const ZChain& imaged) {
        // class(imaged) == -class(rho)  <=>  imaged + rho bounds
        return class_order(imaged + r, g55).kind == ClassOrder::Kind::Zero;
    };
    CHECK(negates(relabel(r, {{1, 2}, {2, 1}}, {})));          // swap rows 1,2
    CHECK(negates(relabel(r, {{3, 4}, {4, 3}}, {})));          // swap rows 3,4
    CHECK(negates(relabel(r, {{4, 5}, {5, 4}}, {})));          // swap rows 4,5
    CHECK(negates(relabel(r, {}, {{3, 4}, {4, 3}})));          // swap cols 3,4
    CHECK(negates(relabel(r, {}, {{2, 5}, {5, 2}})));          // swap cols 2,5
}

TEST_CASE("column swap negates the class of the hexagon generator")
{
    ComplexSpec m23 = ComplexSpec::chessboard(2, 3);
    ZChain z = z_top(2);
    ZChain swapped = relabel(z, {}, {{1, 2}, {2, 1}});
    CHECK(is_cycle(swapped));
    CHECK(class_order(swapped + z, m23).kind == ClassOrder::Kind::Zero);

    // a swap that changes the support leaves only the class-level relation
    ZChain r = rho();
    ZChain moved = relabel(r, {}, {{2, 5}, {5, 2}});
    CHECK(moved != -r);
    CHECK(class_order(moved + r, ComplexSpec::gamma(5, 5)).kind == ClassOrder::Kind::Zero);
}

TEST_CASE("e generators span the sub-board homology")
{
    ComplexSpec board = ComplexSpec::sub_board({3, 4, 5}, {2, 3, 4, 5});
    CHECK(is_cycle(e_generator(4)));
    CHECK(is_cycle(e_generator(5)));
    CHECK(homology_quotient(board, 1, {e_generator(4), e_generator(5)}) == HomologyGroup{});
    CHECK_THROWS_AS(e_generator(3), LabelError);
}

TEST_CASE("w_k support occupies the expected rows and columns")
{
    for (auto [k, a, b] : {std::tuple{0, 1, 2}, std::tuple{1, 1, 2}, std::tuple{0, 2, 2},
                           std::tuple{0, 0, 3}}) {
        WkParams p{k, a, b};
        ZChain w = w_k(k, a, b);
        CAPTURE(k, a, b);
        CHECK(w.dim() == p.d() + 0);
        CHECK(is_cycle(w));
        std::set<int> rows, cols;
        for (const auto& [f, c] : w.terms())
            for (const Edge& e : f.edges) {
                rows.insert(e.a);
                cols.insert(e.b);
            }
        // rows fill [1, m]; columns fill [1, n-1], the last column is spare
        CHECK(static_cast<int>(rows.size()) == p.m());
        CHECK(*rows.rbegin() == p.m());
        CHECK(static_cast<int>(cols.size()) == p.n() - 1);
        CHECK(*cols.rbegin() == p.n() - 1);
        for (const auto& [f, c] : w.terms()) CHECK(is_face(ComplexSpec::chessboard(p.m(), p.n()), f));
    }
    CHECK_THROWS_AS(w_k(-1, 1, 2), DomainError);
    CHECK_THROWS_AS(w_k(0, 1, 1), DomainError);
    CHECK_THROWS_AS(w_k(0, 0, 2), DomainError);
}

TEST_CASE("w_1 relabels onto the long gamma cycle")
{
    for (auto [a, b] : {std::pair{1, 2}, std::pair{0, 3}}) {
        WkParams p{0, a, b};
        ZChain w1 = w_k(0, a, b);
        ZChain embedded = embed_chain(w1, Embedding{p.m()});
        for (const auto& [f, c] : embedded.terms())
            CHECK(is_face(ComplexSpec::matching_complex(p.m() + p.n()), f));
        ZChain relabeled = relabel_vertices(embedded, w1_to_gamma_vertex_map(a, b));
        CHECK(relabeled == gamma_3r((p.m0() + p.n0() + 2) / 3));
    }
}

TEST_CASE("recipe parsing round trips the catalog")
{
    CHECK(parse_recipe("rho").chain == rho());
    CHECK(parse_recipe("z_top:3").chain == z_top(3));
    CHECK(parse_recipe("gamma_3r:2").chain == gamma_3r(2));
    CHECK(parse_recipe("gamma_mn:4,5").chain == gamma_mn(4, 5));
    CHECK(parse_recipe("w_k:0,1,2").chain == w_k(0, 1, 2));
    CHECK(parse_recipe("z_uv:3,4").chain == z_uv(3, 4));
    CHECK(parse_recipe("e:4").chain == e_generator(4));
    CHECK(parse_recipe("w_k:0,1,2").home ==
          std::optional<ComplexSpec>(ComplexSpec::chessboard(6, 7)));
    CHECK_THROWS_AS(parse_recipe("nope"), DomainError);
    CHECK_THROWS_AS(parse_recipe("z_top:1,2"), DomainError);
}

TEST_CASE("single faces of positive dimension are not cycles")
{
    auto faces = enumerate_faces(ComplexSpec::chessboard(3, 3), 1);
    CHECK(!is_cycle(unit_chain(IntRing{}, GraphKind::Bipartite, faces[0])));
    ZChain zero(IntRing{}, GraphKind::Bipartite, 2);
    CHECK(is_cycle(zero));
}

TEST_CASE("transposed gamma recipes live on the transposed board")
{
    Recipe r = parse_recipe("gamma_mn:5,4");
    REQUIRE(r.home.has_value());
    for (const auto& [f, c] : r.chain.terms()) CHECK(is_face(*r.home, f));
    CHECK(class_order(r.chain, *r.home).kind != ClassOrder::Kind::Zero);
}
