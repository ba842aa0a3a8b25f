#include "support.hpp"

#include "lietk/chevalley.hpp"
#include "lietk/classify.hpp"
#include "lietk/cli.hpp"
#include "lietk/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace lietk;
using namespace lietk::test;

namespace {

const std::vector<SimpleType> &small_catalogue() {
    static const std::vector<SimpleType> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3},
                                                  {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}};
    return types;
}

std::size_t expected_dim(SimpleType t) {
    const std::size_t l = t.rank;
    switch (t.family) {
    case 'A': return l * (l + 2);
    case 'B':
    case 'C': return l * (2 * l + 1);
    case 'D': return l * (2 * l - 1);
    case 'G': return 14;
    case 'F': return 52;
    case 'E': return l == 6 ? 78 : l == 7 ? 133 : 248;
    }
    return 0;
}

} // namespace

TEST_SUITE("cartan") {

TEST_CASE("named matrices follow the documented convention") {
    CHECK(named_cartan('G', 2) == CartanMatrix{{{2, -1}, {-3, 2}}});
    CHECK(named_cartan('B', 2) == CartanMatrix{{{2, -1}, {-2, 2}}});
    CHECK(named_cartan('C', 2) == CartanMatrix{{{2, -2}, {-1, 2}}});
    CHECK(named_cartan('F', 4) == CartanMatrix{{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}});
    CartanMatrix e6 = named_cartan('E', 6);
    CHECK(e6(1, 3) == -1);
    CHECK(e6(1, 2) == 0);
    CHECK_THROWS_AS(named_cartan('E', 5), LieError);
    CHECK_THROWS_AS(named_cartan('F', 3), LieError);
    CHECK(parse_type("E8") == SimpleType{'E', 8});
    CHECK(parse_type("B", 3) == SimpleType{'B', 3});
    CHECK_FALSE(parse_type("Q2").has_value());
}

TEST_CASE("validation flags") {
    CartanValidation ok = validate_cartan(named_cartan('G', 2));
    CHECK(ok.valid());
    CHECK(ok.finite_type);
    CHECK(ok.symmetrizer == std::vector<Rational>{Rational(3), Rational(1)});

    CartanMatrix affine{{{2, -2}, {-2, 2}}};
    auto v = validate_cartan(affine);
    CHECK(v.valid());
    CHECK_FALSE(v.finite_type);
    CHECK_THROWS_AS(roots_from_cartan(affine), LieError);

    CHECK_FALSE(validate_cartan(CartanMatrix{{{2, 1}, {-1, 2}}}).off_diagonal_nonpositive);
    CHECK_FALSE(validate_cartan(CartanMatrix{{{2, 0}, {-1, 2}}}).zero_pattern_symmetric);
    CHECK_FALSE(validate_cartan(CartanMatrix{{{1, -1}, {-1, 2}}}).diagonal_two);
    CHECK_FALSE(validate_cartan(CartanMatrix{{{2, -1}}}).square);
    CHECK_FALSE(validate_cartan(CartanMatrix{{{2, -1, 0}, {-1, 2, -1}, {-1, -1, 2}}}).finite_type);
}

TEST_CASE("root counts match reflection closure") {
    for (auto t : small_catalogue()) {
        CartanMatrix A = named_cartan(t);
        RootSystem R = roots_from_cartan(A);
        CHECK_MESSAGE(R.size() == reflection_closure_count(A), t.str());
        CHECK(R.size() + t.rank == expected_dim(t));
        for (const auto &r : R.all()) {
            CHECK(R.contains(r));
            Root neg = r;
            for (auto &c : neg)
                c = -c;
            CHECK(R.contains(neg));
            // the doubled root is never a root
            Root twice = r;
            for (auto &c : twice)
                c *= 2;
            CHECK_FALSE(R.contains(twice));
        }
    }
    RootSystem g2 = roots_from_cartan(named_cartan('G', 2));
    CHECK(g2.positive.back() == Root{2, 3}); // alpha_1 long
    CHECK(height(g2.positive.back()) == 5);
}

TEST_CASE("Chevalley algebras: dimension, integrality and Serre relations") {
    for (auto t : small_catalogue()) {
        ChevalleyAlgebra C = chevalley_algebra(named_cartan(t));
        CHECK_MESSAGE(C.algebra.dim() == expected_dim(t), t.str());
        CHECK(C.algebra.verified());
        CHECK_FALSE(C.sampled_check);
        SerreReport s = verify_serre(C);
        CHECK_MESSAGE(s.ok, t.str());
        CHECK(s.violations.empty());
        for (const auto &[key, vec] : C.algebra.constants())
            for (const auto &[k, c] : vec)
                CHECK(c.is_integer());
        for (const auto &r : C.roots.positive)
            for (const auto &s2 : C.roots.positive) {
                int n = structure_constant(C, r, s2);
                CHECK(std::abs(n) <= 3);
            }
    }
}

TEST_CASE("G2 Serre exponents are sharp") {
    ChevalleyAlgebra C = chevalley_algebra(named_cartan('G', 2));
    const std::size_t d = C.algebra.dim();
    Vector e1 = unit(d, C.E(0)), e2 = unit(d, C.E(1));
    // A_21 = -3: ad(E2)^4 E1 = 0, ad(E2)^3 E1 != 0
    CHECK(is_zero(ad_power(C.algebra, e2, 4, e1)));
    CHECK_FALSE(is_zero(ad_power(C.algebra, e2, 3, e1)));
    CHECK(is_zero(ad_power(C.algebra, e1, 2, e2)));
    CHECK_FALSE(is_zero(ad_power(C.algebra, e1, 1, e2)));
}

TEST_CASE("Chevalley brackets against the Cartan matrix") {
    ChevalleyAlgebra C = chevalley_algebra(named_cartan('B', 3));
    const std::size_t d = C.algebra.dim();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Vector hE = C.algebra.bracket(unit(d, C.H(i)), unit(d, C.E(j)));
            CHECK(hE == Rational(C.cartan()(i, j)) * unit(d, C.E(j)));
        }
    CHECK(is_semisimple(C.algebra));
    CHECK(is_simple(C.algebra));
}

TEST_CASE("Dynkin diagrams") {
    DynkinDiagram b3 = dynkin(named_cartan('B', 3));
    REQUIRE(b3.edges.size() == 2);
    CHECK(b3.edges[1].multiplicity == 2);
    CHECK(b3.edges[1].arrow_to == 2u);
    DynkinDiagram c3 = dynkin(named_cartan('C', 3));
    CHECK(c3.edges[1].arrow_to == 1u);
    CHECK(render_dynkin(b3, DynkinFormat::ascii) == "o---o=>=o\n");
    CHECK(render_dynkin(dynkin(named_cartan('A', 3)), DynkinFormat::ascii) == "o---o---o\n");
    std::string dot = render_dynkin(dynkin(named_cartan('G', 2)), DynkinFormat::dot);
    CHECK(dot.find("graph dynkin") == 0);
    CHECK(dot.find("label=\"3\"") != std::string::npos);
    CHECK_THROWS_AS(dynkin(CartanMatrix{{{2, 1}, {1, 2}}}), LieError);
    CHECK(render_dynkin(dynkin(named_cartan('G', 2)), DynkinFormat::ascii) == "o≡>≡o\n");
}

TEST_CASE("E8 DOT output has the expected shape") {
    std::string dot = render_dynkin(dynkin(named_cartan('E', 8)), DynkinFormat::dot);
    std::size_t nodes = 0, edges = 0;
    std::istringstream lines(dot);
    for (std::string line; std::getline(lines, line);) {
        if (line.find(" -- ") != std::string::npos) {
            ++edges;
            CHECK(line.find("label=\"1\"") != std::string::npos);
        } else if (line.find("[label=") != std::string::npos) {
            ++nodes;
        }
    }
    CHECK(nodes == 8);
    CHECK(edges == 7);
    CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));
    CHECK(dot.find("2 -- 4") != std::string::npos); // the branch node
}

TEST_CASE("recognition round trip and rejection") {
    std::vector<SimpleType> types = {{'A', 1}, {'A', 5}, {'B', 2}, {'B', 5}, {'C', 3}, {'C', 6}, {'D', 4},
                                     {'D', 7}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};
    for (auto t : types) {
        auto comps = recognize(dynkin(named_cartan(t)));
        REQUIRE(comps.size() == 1);
        CHECK_MESSAGE(comps[0].type == t, t.str());
    }
    // affine A2: a triangle
    auto bad = recognize(dynkin(CartanMatrix{{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}}));
    REQUIRE(bad.size() == 1);
    CHECK_FALSE(bad[0].type.has_value());
    // block diagonal: two components ordered by smallest node
    CartanMatrix two{{{2, 0, 0}, {0, 2, -1}, {0, -1, 2}}};
    auto comps = recognize(dynkin(two));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].type == SimpleType{'A', 1});
    CHECK(comps[1].type == SimpleType{'A', 2});
    CHECK(comps[1].nodes == std::vector<std::size_t>{1, 2});
}

TEST_CASE("split_decompose on Chevalley and matrix algebras") {
    for (auto t : small_catalogue()) {
        ChevalleyAlgebra C = chevalley_algebra(named_cartan(t));
        auto D = split_decompose(C.algebra, span_of_units(C.algebra, C.cartan_indices));
        REQUIRE(D.components.size() == 1);
        CHECK_MESSAGE(D.components[0].type == t, t.str());
        CHECK(D.components[0].ideal.space.is_full());
    }
    auto jd = classical(Family::so_jd, 3);
    LieAlgebra L = to_abstract(jd);
    auto D = split_decompose(L, span_of_units(L, diagonal_indices(jd)));
    REQUIRE(D.components.size() == 1);
    CHECK(D.components[0].type == SimpleType{'A', 3});
}

TEST_CASE("split_decompose errors") {
    LieAlgebra t2 = classical_abstract(Family::upper_triangular, 2);
    try {
        split_decompose(t2, top(t2));
        FAIL("no throw");
    } catch (const LieError &e) {
        CHECK(e.kind() == ErrorKind::NotSemisimple);
    }
    LieAlgebra so3 = classical_abstract(Family::so, 3);
    try {
        split_decompose(so3, span_of_units(so3, {0}));
        FAIL("no throw");
    } catch (const LieError &e) {
        CHECK(e.kind() == ErrorKind::NonSplit);
    }
    LieAlgebra sl2 = classical_abstract(Family::sl, 2);
    try {
        split_decompose(sl2, span_of_units(sl2, {0}));
        FAIL("no throw");
    } catch (const LieError &e) {
        CHECK(exit_code_for(e.kind()) == exit_precondition);
    }
}

}
