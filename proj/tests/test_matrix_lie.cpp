#include "support.hpp"

#include "lietk/error.hpp"
#include "lietk/representation.hpp"

#include <doctest.h>

using namespace lietk;
using namespace lietk::test;

namespace {

/// A^T J + J A = 0, checked entrywise.
bool skew_for(const Matrix &J, const Matrix &A) { return (A.transpose() * J + J * A).is_zero(); }

} // namespace

TEST_SUITE("matrix_lie") {

TEST_CASE("certify rejects dependent and non-closed bases") {
    Matrix e = Matrix::unit(2, 0, 1), f = Matrix::unit(2, 1, 0);
    try {
        MatrixLieAlgebra::certify("ef", 2, {e, f});
        FAIL("no throw");
    } catch (const LieError &err) {
        CHECK(err.kind() == ErrorKind::NotClosed);
    }
    try {
        MatrixLieAlgebra::certify("dup", 2, {e, Rational(2) * e});
        FAIL("no throw");
    } catch (const LieError &err) {
        CHECK(err.kind() == ErrorKind::InvalidArgument);
    }
    auto M = MatrixLieAlgebra::certify("ehf", 2, {e, e * f - f * e, f});
    CHECK(M.dim() == 3);
    CHECK(M.contains(Matrix{{1, 2}, {3, -1}}));
    CHECK_FALSE(M.contains(Matrix::identity(2)));
    CHECK(*M.coordinates(Matrix{{1, 2}, {3, -1}}) == Vector{2, 1, 3});
    CHECK_FALSE(M.coordinates(Matrix::identity(2)).has_value());
}

TEST_CASE("small classical dimensions") {
    CHECK(classical(Family::so, 3).dim() == 3);
    CHECK(classical(Family::sp, 1).dim() == 3);
    CHECK(classical(Family::sl, 3).dim() == 8);
    CHECK(classical(Family::sp, 2).dim() == 10);
    CHECK(classical(Family::gl, 3).dim() == 9);
    CHECK(classical(Family::upper_triangular, 3).dim() == 6);
    CHECK(classical(Family::strictly_upper, 3).dim() == 3);
    CHECK(classical(Family::so_prime, 2, 1).dim() == 3);
    auto jd = classical(Family::so_jd, 2);
    CHECK(jd.dim() == 6);
    CHECK(diagonal_indices(jd).size() == 2);
    CHECK(skew_adjoint_algebra(Matrix(3, 3)).dim() == 9);
}

TEST_CASE("family parsing and labels") {
    CHECK(parse_family("so-jd") == Family::so_jd);
    CHECK(parse_family("t") == Family::upper_triangular);
    CHECK_FALSE(parse_family("su").has_value());
    CHECK(family_label(Family::sp, 2, 0) == "sp(4)");
}

TEST_CASE("every classical basis satisfies its defining condition") {
    for (std::size_t n = 1; n <= 3; ++n) {
        Matrix Js = symplectic_form(n), Jd = split_orthogonal_form(n);
        for (auto held = classical(Family::sp, n); const auto &A : held.basis())
            CHECK(skew_for(Js, A));
        for (auto held = classical(Family::so_jd, n); const auto &A : held.basis())
            CHECK(skew_for(Jd, A));
    }
    for (std::size_t n = 2; n <= 4; ++n) {
        for (auto held = classical(Family::sl, n); const auto &A : held.basis())
            CHECK(A.trace() == Rational(0));
        for (auto held = classical(Family::so, n); const auto &A : held.basis())
            CHECK((A + A.transpose()).is_zero());
    }
    Matrix Jpq = diagonal_orthogonal_form(2, 1);
    for (auto held = classical(Family::so_prime, 2, 1); const auto &A : held.basis())
        CHECK(skew_for(Jpq, A));
}

TEST_CASE("to_abstract agrees with independently solved constants") {
    for (auto [f, n] : {std::pair{Family::sl, 2}, {Family::so, 3}, {Family::sp, 1}, {Family::upper_triangular, 3},
                        {Family::so_jd, 2}}) {
        auto M = classical(f, n);
        LieAlgebra L = to_abstract(M);
        LieAlgebra oracle = algebra_from_matrices(M.basis(), M.basis_names());
        CHECK(L.constants() == oracle.constants());
        CHECK(L.verified());
        CHECK(brute_jacobi(L));
    }
}

TEST_CASE("so(3) is the cross product") {
    LieAlgebra L = classical_abstract(Family::so, 3);
    REQUIRE(L.dim() == 3);
    // Every bracket of two distinct basis vectors is +-1 times the third.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            Vector b = L.bracket(unit(3, i), unit(3, j));
            std::size_t k = 3 - i - j;
            CHECK((b == unit(3, k) || b == Rational(-1) * unit(3, k)));
        }
    CHECK(is_simple(L));
}

TEST_CASE("trace of a commutator vanishes and element is linear") {
    Rng rng(9);
    auto M = classical(Family::gl, 3);
    for (int t = 0; t < 30; ++t) {
        Vector x = rng.vector(9), y = rng.vector(9);
        Matrix a = M.element(x), b = M.element(y);
        CHECK(matrix_bracket(a, b).trace() == Rational(0));
        CHECK(M.element(x + y) == a + b);
        CHECK(*M.coordinates(a) == x);
    }
}

TEST_CASE("congruence transport") {
    Matrix P{{1, 1}, {1, -1}};
    Matrix J = split_orthogonal_form(1);
    CongruenceTransport c = congruence_transport(P, J);
    CHECK(c.target_form == Matrix{{2, 0}, {0, -2}});
    CHECK(c.source.dim() == c.target.dim());
    for (const auto &A : c.source.basis())
        CHECK(c.target.contains(c.apply(A)));
    CHECK_THROWS_AS(congruence_transport(Matrix{{1, 1}, {1, 1}}, J), LieError);

    Rng rng(12);
    for (int t = 0; t < 5; ++t) {
        Matrix Q = rng.invertible(4);
        auto ct = congruence_transport(Q, symplectic_form(2));
        CHECK(ct.target.dim() == 10);
        CHECK(ct.target_form == Q.transpose() * symplectic_form(2) * Q);
        for (const auto &A : ct.source.basis())
            CHECK(skew_for(ct.target_form, ct.apply(A)));
    }
}

TEST_CASE("adjoint pairs") {
    Matrix J = symplectic_form(1);
    Matrix A{{1, 2}, {0, -1}};
    CHECK(is_adjoint_pair_matrix(J, J, A, Rational(-1) * A));
    CHECK_FALSE(is_adjoint_pair_matrix(J, J, A, A));
}

TEST_CASE("natural representation") {
    auto M = classical(Family::sl, 3);
    Representation rep = natural_representation(M);
    CHECK(rep.module_dim() == 3);
    CHECK(rep.action() == M.basis());
}

}
