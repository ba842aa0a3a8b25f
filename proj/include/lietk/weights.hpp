#pragma once

#include "lietk/representation.hpp"
#include "lietk/structure.hpp"

#include <string>
#include <vector>

namespace lietk {

/// Polynomial coefficients, constant term first.
using Poly = std::vector<Rational>;

/// det(x I - m), monic, via reduction to Hessenberg form.
Poly charpoly(const Matrix &m);

struct RationalSpectrum {
    std::vector<Rational> eigenvalues; // distinct, ascending
    bool split = true;                 // false if some root is not rational
};

/// Distinct rational roots of p (rational root theorem on the squarefree part).
RationalSpectrum rational_roots(const Poly &p);
RationalSpectrum rational_spectrum(const Matrix &m);

/// The maximal generalised eigenspace ker (f - lambda)^m, computed as the
/// stable term of K_0 = 0, K_(j+1) = {v : (f - lambda) v in K_j}.
Subspace generalized_eigenspace(const Matrix &f, const Rational &lambda);

/// Values on the chosen basis of H.
using WeightFunction = Vector;

/// Intersection over H_basis of the generalised eigenspaces of act(h) for chi(h).
Subspace pre_weight_space(const Representation &rep, const std::vector<Vector> &H_basis,
                          const WeightFunction &chi);

struct WeightSpaceResult {
    WeightFunction chi;
    Subspace space;
    bool is_weight = false;
};

/// Throws NotClosed / NotNilpotent unless H is a nilpotent subalgebra.
void require_nilpotent_subalgebra(const LieAlgebra &L, const LieSubspace &H);

/// chi is indexed by H.space.basis(). The result is re-checked to be H-stable.
WeightSpaceResult weight_space(const Representation &rep, const LieSubspace &H, const WeightFunction &chi);

/// Every weight of the module, sorted by chi; throws NonSplit naming the
/// offending basis vector of H when a spectrum is not rational.
std::vector<WeightSpaceResult> weight_decomposition(const Representation &rep, const LieSubspace &H);

/// Weights of the adjoint action, including the zero weight.
std::vector<WeightSpaceResult> root_spaces(const LieAlgebra &L, const LieSubspace &H);

struct RootProductReport {
    bool ok = true;
    std::size_t pairs_checked = 0;
    std::vector<std::string> failures;
};

/// [L_chi1, L_chi2] inside L_(chi1 + chi2), checked on basis pairs.
RootProductReport root_product_check(const LieAlgebra &L, const LieSubspace &H, const WeightFunction &chi1,
                                     const WeightFunction &chi2);

} // namespace lietk
