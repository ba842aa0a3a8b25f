#include "support.hpp"

#include "lietk/error.hpp"
#include "lietk/matrix.hpp"
#include "lietk/rational.hpp"
#include "lietk/subspace.hpp"

#include <doctest.h>

#include <climits>
#include <sstream>

using namespace lietk;
using lietk::test::Rng;

TEST_SUITE("exactlin") {

TEST_CASE("rational arithmetic and normal form") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(4, -6).str() == "-2/3");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(0, -5).str() == "0");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational(1, 0), LieError);
    CHECK_THROWS_AS(Rational::parse("1/"), LieError);
    CHECK_THROWS_AS(Rational::parse("abc"), LieError);
    CHECK_THROWS_AS(Rational(3) / Rational(0), LieError);
    CHECK(Rational(-3, 4).inverse() == Rational(-4, 3));
    CHECK(Rational(-3, 4) < Rational(-1, 2));
}

TEST_CASE("division by zero reports its kind") {
    try {
        (void)(Rational(1) / Rational(0));
        FAIL("no throw");
    } catch (const LieError &e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("overflow spills to big rationals and comes back") {
    Rational big(LONG_MAX);
    Rational sq = big * big;
    CHECK(sq.numerator() == mpz_class(LONG_MAX) * mpz_class(LONG_MAX));
    CHECK(sq / big == big);
    CHECK((sq / big).str() == std::to_string(LONG_MAX));
    Rational tiny(1, LONG_MAX);
    CHECK(tiny * tiny * big * big == Rational(1));
    CHECK(Rational(LONG_MIN) == -Rational(LONG_MAX) - Rational(1));
    CHECK(-Rational(LONG_MIN) == Rational(LONG_MAX) + Rational(1));
}

TEST_CASE("field laws on seeded samples agree with mpq") {
    Rng rng(11);
    for (int t = 0; t < 500; ++t) {
        Rational a = rng.scalar(1000), b = rng.scalar(1000), c = rng.scalar(1000);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        mpq_class qa = a.to_mpq(), qb = b.to_mpq();
        CHECK(Rational(mpq_class(qa * qb)) == a * b);
        CHECK(Rational(mpq_class(qa - qb)) == a - b);
        if (!b.is_zero())
            CHECK((a / b) * b == a);
        std::ostringstream os;
        os << a;
        CHECK(Rational::parse(os.str()) == a);
    }
}

TEST_CASE("rref, rank and kernel") {
    auto r = rref(Matrix{{2, 4}, {1, 2}});
    CHECK(r.reduced == Matrix{{1, 2}, {0, 0}});
    CHECK(r.rank == 1);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0});

    Subspace k = kernel(Matrix{{1, 1}});
    CHECK(k.dim() == 1);
    CHECK(k.contains(Vector{1, -1}));
    CHECK(kernel(Matrix::identity(3)).is_zero());
    CHECK(rank(Matrix(3, 3)) == 0);
}

TEST_CASE("rref is canonical under row operations") {
    Rng rng(3);
    for (int t = 0; t < 40; ++t) {
        Matrix m = rng.matrix(4, 5);
        Matrix p = rng.invertible(4);
        CHECK(rref(p * m).reduced == rref(m).reduced);
        CHECK(rank(m) + kernel(m).dim() == 5);
        for (auto held = kernel(m); const auto &v : held.basis())
            CHECK(is_zero(m.apply(v)));
    }
}

TEST_CASE("solve, inverse and determinant") {
    Matrix m{{2, 1}, {1, 1}};
    CHECK(determinant(m) == Rational(1));
    CHECK(inverse(m) == Matrix{{1, -1}, {-1, 2}});
    CHECK(*solve(m, Vector{3, 2}) == Vector{1, 1});
    CHECK_FALSE(solve(Matrix{{1, 1}, {1, 1}}, Vector{1, 2}).has_value());
    CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), LieError);

    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        Matrix a = rng.invertible(4);
        CHECK(a * inverse(a) == Matrix::identity(4));
        Matrix b = rng.matrix(4, 4);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
        Vector x = rng.vector(4);
        CHECK(*solve(a, a.apply(x)) == x);
    }
}

TEST_CASE("subspace lattice") {
    Subspace a = Subspace::span(3, {Vector{1, 0, 0}, Vector{0, 1, 0}});
    Subspace b = Subspace::span(3, {Vector{0, 1, 0}, Vector{0, 0, 1}});
    CHECK((a + b).is_full());
    CHECK(intersect(a, b) == Subspace::span(3, {Vector{0, 1, 0}}));
    CHECK(Subspace::span(3, {Vector{2, 2, 0}, Vector{1, 1, 0}}).dim() == 1);
    CHECK(a.annihilator() == Subspace::span(3, {Vector{0, 0, 1}}));
    CHECK(a.coordinates(Vector{3, -1, 0}) == Vector{3, -1});
}

TEST_CASE("lattice laws on random subspaces") {
    Rng rng(17);
    auto random_space = [&](std::size_t n) {
        std::vector<Vector> v;
        const std::size_t k = rng.index(n + 1);
        for (std::size_t i = 0; i < k; ++i)
            v.push_back(rng.vector(n, 2));
        return Subspace::span(n, v);
    };
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + rng.index(4);
        Subspace a = random_space(n), b = random_space(n), c = random_space(n);
        CHECK((a + b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
        CHECK(a + b == b + a);
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(intersect(a, a + b) == a);
        CHECK(intersect(a, b) + a == a);
        CHECK((a + b).contains(a));
        CHECK(a.annihilator().dim() == n - a.dim());
        Subspace ac = a + c; // a <= ac: modular law
        CHECK(intersect(a + b, ac) == a + intersect(b, ac));
    }
}

}
