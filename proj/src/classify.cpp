#include "lietk/classify.hpp"

#include "lietk/error.hpp"

#include <algorithm>
#include <set>

namespace lietk {

namespace {

bool lex_positive(const WeightFunction &chi) {
    for (const auto &c : chi)
        if (!c.is_zero())
            return c.sign() > 0;
    return false;
}

} // namespace

SplitDecomposition split_decompose(const LieAlgebra &L, const LieSubspace &H) {
    const std::size_t n = L.dim();
    if (H.space.ambient_dim() != n)
        fail(ErrorKind::DimensionMismatch, "Cartan subalgebra lives in a space of the wrong dimension");
    if (!is_semisimple(L))
        fail(ErrorKind::NotSemisimple, "the algebra has a nonzero radical");
    const auto &Hb = H.space.basis();
    restrict(L, H); // closure
    for (std::size_t a = 0; a < Hb.size(); ++a)
        for (std::size_t b = a + 1; b < Hb.size(); ++b)
            if (!is_zero(L.bracket(Hb[a], Hb[b])))
                fail(ErrorKind::NotNilpotent, "the proposed Cartan subalgebra is not abelian");
    if (!(normalizer(L, H.space) == H.space))
        fail(ErrorKind::NotNilpotent, "the proposed Cartan subalgebra is not self-normalising");
    for (std::size_t k = 0; k < Hb.size(); ++k) {
        Matrix a = ad(L, Hb[k]);
        RationalSpectrum spec = rational_spectrum(a);
        std::size_t total = 0;
        for (const auto &lambda : spec.eigenvalues) {
            Matrix g = a;
            for (std::size_t i = 0; i < n; ++i)
                g(i, i) -= lambda;
            total += kernel(g).dim();
        }
        if (!spec.split || total != n)
            fail(ErrorKind::NonSplit, "ad of basis vector " + std::to_string(k + 1) +
                                          " of H is not diagonalisable over the rationals");
    }

    SplitDecomposition out;
    out.root_spaces = root_spaces(L, H);
    std::map<WeightFunction, const WeightSpaceResult *> by_chi;
    for (const auto &w : out.root_spaces) {
        by_chi.emplace(w.chi, &w);
        const bool zero = std::all_of(w.chi.begin(), w.chi.end(), [](const Rational &c) { return c.is_zero(); });
        if (zero ? !(w.space == H.space) : w.space.dim() != 1)
            fail(ErrorKind::InternalDefect, "root space decomposition is not that of a split semisimple algebra");
    }
    std::vector<WeightFunction> positive;
    for (const auto &w : out.root_spaces)
        if (lex_positive(w.chi))
            positive.push_back(w.chi);
    std::set<WeightFunction> pos_set(positive.begin(), positive.end());
    for (const auto &a : positive) {
        bool decomposable = std::any_of(positive.begin(), positive.end(),
                                        [&](const WeightFunction &b) { return pos_set.count(a - b) > 0; });
        if (!decomposable)
            out.simple_roots.push_back(a);
    }

    const std::size_t l = out.simple_roots.size();
    std::vector<Vector> coroots; // in coordinates of H's basis
    for (const auto &alpha : out.simple_roots) {
        auto neg = by_chi.find(Rational(-1) * alpha);
        if (neg == by_chi.end())
            fail(ErrorKind::InternalDefect, "root without its negative");
        Vector t = L.bracket(by_chi.at(alpha)->space.basis()[0], neg->second->space.basis()[0]);
        if (!H.space.contains(t))
            fail(ErrorKind::InternalDefect, "[x_alpha, x_-alpha] is not in H");
        Vector tc = H.space.coordinates(t);
        Rational at;
        for (std::size_t k = 0; k < tc.size(); ++k)
            at += alpha[k] * tc[k];
        if (at.is_zero())
            fail(ErrorKind::InternalDefect, "root vanishes on [x_alpha, x_-alpha]");
        coroots.push_back((Rational(2) / at) * tc);
    }
    out.cartan.entries.assign(l, std::vector<int>(l, 0));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            Rational v;
            for (std::size_t k = 0; k < coroots[i].size(); ++k)
                v += out.simple_roots[j][k] * coroots[i][k];
            if (!v.is_integer())
                fail(ErrorKind::InternalDefect, "non-integral Cartan entry " + v.str());
            out.cartan.entries[i][j] = static_cast<int>(v.numerator().get_si());
        }
    if (!validate_cartan(out.cartan).finite_type)
        fail(ErrorKind::InternalDefect, "recovered Cartan matrix is not of finite type");

    Subspace sum(n);
    for (const auto &comp : recognize(dynkin(out.cartan))) {
        if (!comp.type)
            fail(ErrorKind::InternalDefect, "Dynkin component outside the catalogue");
        std::vector<Vector> gens;
        for (auto i : comp.nodes) {
            gens.push_back(by_chi.at(out.simple_roots[i])->space.basis()[0]);
            gens.push_back(by_chi.at(Rational(-1) * out.simple_roots[i])->space.basis()[0]);
        }
        LieSubspace I = ideal_closure(L, Subspace::span(n, gens));
        if (!is_simple(restrict(L, I)))
            fail(ErrorKind::InternalDefect, "component ideal of type " + comp.type->str() + " is not simple");
        for (const auto &prev : out.components)
            if (!ideal_bracket(L, prev.ideal, I).space.is_zero())
                fail(ErrorKind::InternalDefect, "component ideals do not commute");
        sum = sum + I.space;
        out.components.push_back({std::move(I), *comp.type, comp.nodes});
    }
    if (!sum.is_full())
        fail(ErrorKind::InternalDefect, "component ideals do not span the algebra");
    return out;
}

} // namespace lietk
