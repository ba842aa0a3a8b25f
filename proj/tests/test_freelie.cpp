#include "support.hpp"

#include "lietk/chevalley.hpp"
#include "lietk/error.hpp"

#include <doctest.h>

using namespace lietk;
using namespace lietk::test;

namespace {

Word w(std::string_view s) {
    Word out;
    for (char c : s)
        out.push_back(static_cast<unsigned>(c - 'a'));
    return out;
}

/// Random combination of Lyndon basis elements of degree <= max_degree.
FreeLieElement random_element(const FreeLieAlgebra &F, Rng &rng, std::size_t max_degree) {
    FreeLieElement x = F.zero();
    const int terms = 1 + static_cast<int>(rng.index(3));
    for (int t = 0; t < terms; ++t) {
        auto words = lyndon_words(F.alphabet_size(), 1 + rng.index(max_degree));
        x = F.add(x, F.scale(rng.scalar(3), F.basis(words[rng.index(words.size())])));
    }
    return x;
}

} // namespace

TEST_SUITE("freelie") {

TEST_CASE("Lyndon words") {
    CHECK(is_lyndon(w("aab")));
    CHECK(is_lyndon(w("ab")));
    CHECK_FALSE(is_lyndon(w("aba")));
    CHECK_FALSE(is_lyndon(w("abab")));
    CHECK_FALSE(is_lyndon(w("")));
    CHECK(lyndon_words(2, 3) == std::vector<Word>{w("aab"), w("abb")});
    CHECK(bracketing_string(w("aab")) == "[a,[a,b]]");
    CHECK(bracketing_string(w("abb")) == "[[a,b],b]");
    CHECK(bracketing_string(w("aabab")) == "[[a,[a,b]],[a,b]]");
    CHECK(standard_split(w("aabab")) == 3);
    CHECK(word_string(w("abc")) == "abc");
}

TEST_CASE("Lyndon enumeration matches brute force and Witt numbers") {
    for (std::size_t k = 1; k <= 3; ++k) {
        auto W = witt_by_recursion(k, 7);
        for (std::size_t n = 1; n <= 7; ++n) {
            auto words = lyndon_words(k, n);
            CHECK(words == brute_lyndon(k, n));
            CHECK(mpz_class(static_cast<unsigned long>(words.size())) == W[n]);
            CHECK(graded_dimension(k, n) == W[n]);
            for (const auto &x : words)
                CHECK(is_lyndon(x));
        }
    }
    CHECK(graded_dimension(2, 6) == 9);
    CHECK(graded_dimension(3, 4) == 18);
}

TEST_CASE("expansions are Lie polynomials with leading word") {
    FreeLieAlgebra F(2, 5);
    CHECK(F.expansion(w("ab")) == AssocPoly{{w("ab"), Rational(1)}, {w("ba"), Rational(-1)}});
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto &x : lyndon_words(2, n)) {
            const AssocPoly &p = F.expansion(x);
            REQUIRE_FALSE(p.empty());
            CHECK(p.begin()->first == x);
            CHECK(p.begin()->second == Rational(1));
        }
}

TEST_CASE("bracket expands to the associative commutator") {
    FreeLieAlgebra F(3, 6);
    Rng rng(31);
    for (int t = 0; t < 60; ++t) {
        FreeLieElement x = random_element(F, rng, 3), y = random_element(F, rng, 3);
        CHECK(F.expand(F.bracket(x, y)) == commutator_poly(F.expand(x), F.expand(y)));
        CHECK(F.bracket(x, x).is_zero());
        CHECK(F.bracket(x, y) == F.scale(Rational(-1), F.bracket(y, x)));
        CHECK(F.rewrite(F.expand(x)) == x);
    }
}

TEST_CASE("Jacobi in the truncated free algebra") {
    FreeLieAlgebra F(2, 6);
    Rng rng(32);
    for (int t = 0; t < 30; ++t) {
        auto x = random_element(F, rng, 2), y = random_element(F, rng, 2), z = random_element(F, rng, 2);
        auto s = F.add(F.add(F.bracket(x, F.bracket(y, z)), F.bracket(y, F.bracket(z, x))), F.bracket(z, F.bracket(x, y)));
        CHECK(s.is_zero());
    }
}

TEST_CASE("brackets beyond the truncation vanish") {
    FreeLieAlgebra F(2, 2);
    auto ab = F.bracket(F.letter(0), F.letter(1));
    CHECK(F.bracket(F.letter(0), ab).is_zero());
}

TEST_CASE("parse and format round trip") {
    FreeLieAlgebra F(2, 4);
    auto x = F.parse("[b,a]");
    CHECK(F.format(x) == "-[a,b]");
    auto y = F.parse("2*[a,[a,b]] - 1/2*a + [[a,b],b]");
    CHECK(F.format(y) == "-1/2*a + 2*[a,[a,b]] + [[a,b],b]");
    CHECK(F.parse(F.format(y)) == y);
    CHECK(F.format(F.zero()) == "0");
    CHECK(F.parse("[a,a]").is_zero());
    CHECK_THROWS_AS(F.parse("[a,c]"), LieError);
    CHECK_THROWS_AS(F.parse("[a,b"), LieError);
    CHECK_THROWS_AS(F.bracket(F.letter(0), FreeLieAlgebra(3, 4).letter(0)), LieError);
}

TEST_CASE("lift into sl(2) respects brackets") {
    LieAlgebra L = classical_abstract(Family::sl, 2);
    FreeLieAlgebra F(2, 6);
    std::vector<Vector> assign = {unit(3, 0), unit(3, 2)};
    CHECK(lift(assign, L, F.parse("[a,b]")) == unit(3, 1));
    CHECK(lift(assign, L, F.parse("[a,[a,b]]")) == Rational(-2) * unit(3, 0));
    Rng rng(33);
    for (int t = 0; t < 40; ++t) {
        auto x = random_element(F, rng, 3), y = random_element(F, rng, 3);
        CHECK(lift(assign, L, F.bracket(x, y)) == L.bracket(lift(assign, L, x), lift(assign, L, y)));
    }
    CHECK_THROWS_AS(lift({unit(3, 0)}, L, F.letter(0)), LieError);
    CHECK_THROWS_AS(lift(assign, LieAlgebra(L.basis_names(), L.constants()), F.letter(0)), LieError);
}

}
