#include "support.hpp"

#include "lietk/error.hpp"
#include "lietk/representation.hpp"

#include <doctest.h>

using namespace lietk;
using namespace lietk::test;

namespace {

LieAlgebra sl2() { return classical_abstract(Family::sl, 2); }

Vector basis_vec(const LieAlgebra &L, std::size_t i) { return unit_vector(L.dim(), i); }

ErrorKind kind_of(auto &&f) {
    try {
        f();
    } catch (const LieError &e) {
        return e.kind();
    }
    FAIL("expected a LieError");
    return ErrorKind::InternalDefect;
}

} // namespace

TEST_SUITE("lie_core") {

TEST_CASE("constructor rejects malformed tables") {
    BracketTable unordered;
    unordered[{1, 0}] = {{0, Rational(1)}};
    CHECK(kind_of([&] { LieAlgebra({"a", "b"}, unordered); }) == ErrorKind::InvalidArgument);
    BracketTable range;
    range[{0, 1}] = {{5, Rational(1)}};
    CHECK(kind_of([&] { LieAlgebra({"a", "b"}, range); }) == ErrorKind::InvalidArgument);
    BracketTable zero;
    zero[{0, 1}] = {{0, Rational(0)}};
    CHECK(kind_of([&] { LieAlgebra({"a", "b"}, zero); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("sl(2) brackets, ad and Killing form") {
    LieAlgebra L = sl2();
    const Vector E = basis_vec(L, 0), H = basis_vec(L, 1), F = basis_vec(L, 2);
    CHECK(L.bracket(E, F) == H);
    CHECK(L.bracket(H, E) == Rational(2) * E);
    CHECK(L.bracket(H, F) == Rational(-2) * F);
    CHECK(L.bracket(F, E) == Rational(-1) * H);
    CHECK(ad(L, H) == Matrix{{2, 0, 0}, {0, 0, 0}, {0, 0, -2}});
    Matrix K = killing_form(L);
    CHECK(K(1, 1) == Rational(8));
    CHECK(K(0, 2) == Rational(4));
    CHECK(K(0, 0) == Rational(0));
    CHECK(classify_subspace(L, Subspace::span(3, {H})) == SubspaceKind::Subalgebra);
    CHECK(classify_subspace(L, Subspace::span(3, {E, F})) == SubspaceKind::Subspace);
    CHECK(is_simple(L));
    CHECK(is_semisimple(L));
    CHECK(center(L).space.is_zero());
}

TEST_CASE("bracket matches the raw constant table on random vectors") {
    Rng rng(21);
    for (auto f : {Family::sl, Family::gl, Family::upper_triangular}) {
        LieAlgebra L = classical_abstract(f, 3);
        for (int t = 0; t < 30; ++t) {
            Vector x = rng.vector(L.dim()), y = rng.vector(L.dim());
            CHECK(L.bracket(x, y) == raw_bracket(L, x, y));
            CHECK(L.bracket(x, x) == zero_vector(L.dim()));
            CHECK(L.bracket(x, y) == Rational(-1) * L.bracket(y, x));
            CHECK(ad(L, x).apply(y) == L.bracket(x, y));
            auto sx = to_sparse(x), sy = to_sparse(y);
            CHECK(to_dense(L.bracket(sx, sy), L.dim()) == L.bracket(x, y));
        }
    }
}

TEST_CASE("axiom check agrees with brute-force Jacobi") {
    BracketTable t;
    t[{0, 1}] = {{0, Rational(1)}};
    t[{0, 2}] = {{2, Rational(1)}};
    LieAlgebra bad({"b0", "b1", "b2"}, t);
    AxiomReport r = check_axioms(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.forms_agree);
    CHECK_FALSE(brute_jacobi(bad));
    CHECK(kind_of([&] { verify(bad); }) == ErrorKind::NotClosed);

    for (const auto &L : {sl2(), heisenberg(), classical_abstract(Family::gl, 2)}) {
        CHECK(check_axioms(L).ok);
        CHECK(brute_jacobi(L));
        CHECK(check_axioms(L).triples_checked == L.dim() * L.dim() * L.dim());
        CHECK(verify(L).verified());
    }
}

TEST_CASE("sampled mode draws the requested number of triples") {
    LieAlgebra L = classical_abstract(Family::gl, 3);
    AxiomReport r = check_axioms(L, CheckMode::Sampled, 7, 50);
    CHECK(r.sampled);
    CHECK(r.triples_checked == 50);
    CHECK(r.ok);
}

TEST_CASE("series of t(2), Heisenberg and sl(2)") {
    LieAlgebra t2 = classical_abstract(Family::upper_triangular, 2);
    SeriesReport d = derived_series(t2);
    CHECK(d.reaches_bottom);
    CHECK(d.dims() == std::vector<std::size_t>{3, 1, 0});
    CHECK(is_solvable(t2).k == 2);
    SeriesReport lc = lower_central_series(t2);
    CHECK_FALSE(lc.reaches_bottom);
    CHECK(lc.dims().back() == 1);
    CHECK_FALSE(is_nilpotent(t2));

    LieAlgebra h = heisenberg();
    CHECK(lower_central_series(h).dims() == std::vector<std::size_t>{3, 1, 0});
    CHECK(is_nilpotent(h).k == 2);
    CHECK(center(h).dim() == 1);

    CHECK(derived_series(sl2()).dims() == std::vector<std::size_t>{3});
    CHECK_FALSE(is_solvable(sl2()));
}

TEST_CASE("gl(2): centre, radical and quotient") {
    LieAlgebra g = classical_abstract(Family::gl, 2);
    LieSubspace z = center(g);
    CHECK(z.dim() == 1);
    CHECK(radical(g) == z);
    Quotient q = quotient(g, z);
    CHECK(q.algebra.dim() == 3);
    CHECK(is_simple(q.algebra));
    CHECK(q.projection.rows() == 3);
    CHECK_FALSE(is_simple(g));
    // every basis vector mixes the centre with sl(2): still not simple
    std::vector<Matrix> mixed = {Matrix{{1, 1}, {0, 0}}, Matrix{{1, 0}, {1, 0}}, Matrix{{2, 0}, {0, 0}},
                                 Matrix{{1, 0}, {0, 2}}};
    std::vector<std::string> names = {"m0", "m1", "m2", "m3"};
    LieAlgebra mixed_gl2 = algebra_from_matrices(mixed, names);
    CHECK(mixed_gl2.dim() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(ideal_closure(mixed_gl2, Subspace::span(4, {unit(4, i)})).space.is_full());
    CHECK_FALSE(is_simple(mixed_gl2));
    // projection is a homomorphism
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        Vector x = rng.vector(4), y = rng.vector(4);
        CHECK(q.projection.apply(g.bracket(x, y)) ==
              q.algebra.bracket(q.projection.apply(x), q.projection.apply(y)));
    }
}

TEST_CASE("restrict and ideal operations") {
    LieAlgebra t2 = classical_abstract(Family::upper_triangular, 2);
    // basis E[1,1], E[1,2], E[2,2]; strictly upper part is span{E[1,2]}
    std::size_t upper = 0;
    for (std::size_t i = 0; i < t2.dim(); ++i)
        if (t2.basis_names()[i] == "E[1,2]")
            upper = i;
    LieSubspace n = span_of_units(t2, {upper});
    CHECK(n.is_ideal());
    LieAlgebra r = restrict(t2, n);
    CHECK(r.dim() == 1);
    CHECK(is_abelian(r));

    LieAlgebra s = sl2();
    LieSubspace h = span_of_units(s, {1});
    CHECK(kind_of([&] { ideal_bracket(s, h, top(s)); }) == ErrorKind::NotIdeal);
    CHECK(ideal_closure(s, h.space) == top(s));
    CHECK(subalgebra_closure(s, Subspace::span(3, {unit(3, 0), unit(3, 2)})) == top(s));
    CHECK(normalizer(s, h.space) == h.space);
    CHECK(centralizer(s, h.space) == h.space);
}

TEST_CASE("direct sums") {
    LieAlgebra s = direct_sum(sl2(), heisenberg());
    CHECK(s.dim() == 6);
    CHECK(brute_jacobi(s));
    CHECK(center(s).dim() == 1);
    CHECK(radical(s).dim() == 3);
    CHECK_FALSE(is_simple(direct_sum(sl2(), sl2())));
    CHECK(is_semisimple(direct_sum(sl2(), sl2())));
}

TEST_CASE("series terms are ideals and radical properties hold on random sums") {
    std::vector<LieAlgebra> pieces = {sl2(), heisenberg(), classical_abstract(Family::upper_triangular, 2),
                                      LieAlgebra::abelian(1), classical_abstract(Family::gl, 2)};
    Rng rng(8);
    for (int t = 0; t < 12; ++t) {
        LieAlgebra L = direct_sum(pieces[rng.index(pieces.size())], pieces[rng.index(pieces.size())]);
        for (auto held = derived_series(L); const auto &term : held.terms)
            CHECK(classify_subspace(L, term) == SubspaceKind::Ideal);
        for (auto held = lower_central_series(L); const auto &term : held.terms)
            CHECK(classify_subspace(L, term) == SubspaceKind::Ideal);
        LieSubspace R = radical(L);
        CHECK(R.is_ideal());
        CHECK(derived_series(L, R, L.dim() + 1).reaches_bottom);
        CHECK(is_semisimple(quotient(L, R).algebra));
        CHECK(R.space.contains(center(L).space));
    }
}

TEST_CASE("adjoint and trivial representations") {
    LieAlgebra L = classical_abstract(Family::sl, 3);
    Representation a = Representation::adjoint(L);
    CHECK(a.module_dim() == 8);
    Rng rng(2);
    Vector x = rng.vector(8), y = rng.vector(8);
    CHECK(a.act(L.bracket(x, y)) == a.act(x) * a.act(y) - a.act(y) * a.act(x));
    Representation t = Representation::trivial(L, 2);
    CHECK(t.act(x).is_zero());
    std::vector<Matrix> wrong(8, Matrix::identity(2));
    CHECK(kind_of([&] { Representation(L, wrong); }) == ErrorKind::InvalidArgument);
}

}
