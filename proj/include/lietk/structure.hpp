#pragma once

#include "lietk/lie_algebra.hpp"
#include "lietk/subspace.hpp"

#include <cstddef>
#include <vector>

namespace lietk {

/// Strongest closure property a subspace of an algebra has been certified with.
enum class SubspaceKind { Subspace, Subalgebra, Ideal };

const char *to_string(SubspaceKind kind);

/// A subspace of a Lie algebra together with its certified kind. The parent
/// algebra is passed alongside at every call site; the ambient dimension of
/// `space` must match it.
struct LieSubspace {
    Subspace space;
    SubspaceKind kind = SubspaceKind::Subspace;

    std::size_t dim() const { return space.dim(); }
    bool is_ideal() const { return kind == SubspaceKind::Ideal; }
    bool is_subalgebra() const { return kind != SubspaceKind::Subspace; }
    friend bool operator==(const LieSubspace &a, const LieSubspace &b) { return a.space == b.space; }
};

SubspaceKind classify_subspace(const LieAlgebra &L, const Subspace &s);
LieSubspace lie_subspace(const LieAlgebra &L, Subspace s);
LieSubspace top(const LieAlgebra &L);
LieSubspace bottom(const LieAlgebra &L);

/// Linear span of [x, n] over basis vectors x of I and n of N. I must be an
/// ideal; N an ideal or at least a subspace stable under ad L.
LieSubspace ideal_bracket(const LieAlgebra &L, const LieSubspace &I, const LieSubspace &N);
/// Smallest ideal containing s.
LieSubspace ideal_closure(const LieAlgebra &L, const Subspace &s);
/// Smallest subalgebra containing s.
LieSubspace subalgebra_closure(const LieAlgebra &L, const Subspace &s);

struct SeriesReport {
    std::vector<Subspace> terms;
    /// First k with term k == term k+1 (or the last computed index when cut off).
    std::size_t stabilised_at = 0;
    bool reaches_bottom = false;

    std::vector<std::size_t> dims() const;
};

/// term 0 = I, term k+1 = [term k, term k]; at most max_k brackets are taken.
SeriesReport derived_series(const LieAlgebra &L, const LieSubspace &I, std::size_t max_k);
SeriesReport derived_series(const LieAlgebra &L);
/// term 0 = L, term k+1 = [L, term k].
SeriesReport lower_central_series(const LieAlgebra &L, std::size_t max_k);
SeriesReport lower_central_series(const LieAlgebra &L);

struct Witness {
    bool holds = false;
    /// Index at which the series first reaches zero; meaningful when holds.
    std::size_t k = 0;
    explicit operator bool() const { return holds; }
};

Witness is_solvable(const LieAlgebra &L);
Witness is_nilpotent(const LieAlgebra &L);
bool is_abelian(const LieAlgebra &L);

LieSubspace center(const LieAlgebra &L);
/// {x : [x, s] in s for all s in S}
Subspace normalizer(const LieAlgebra &L, const Subspace &S);
/// {x : [x, s] = 0 for all s in S}
Subspace centralizer(const LieAlgebra &L, const Subspace &S);

/// kappa(b_i, b_j) = trace(ad b_i . ad b_j)
Matrix killing_form(const LieAlgebra &L);

/// Killing-orthogonal of [L, L]; re-checked to be a solvable ideal before it is
/// returned (InternalDefect otherwise).
LieSubspace radical(const LieAlgebra &L);
bool is_semisimple(const LieAlgebra &L);
/// Non-abelian, semisimple, and every basis vector generates the whole algebra
/// as an ideal. The last test is not exhaustive; see the README.
bool is_simple(const LieAlgebra &L);

LieAlgebra direct_sum(const LieAlgebra &L1, const LieAlgebra &L2);

struct Quotient {
    LieAlgebra algebra;
    /// (dim L - dim I) x dim L matrix of the canonical surjection.
    Matrix projection;
};

/// L / I on the complement spanned by the non-pivot basis vectors of I.
Quotient quotient(const LieAlgebra &L, const LieSubspace &I);
/// Structure constants of L restricted to the canonical basis of S.
LieAlgebra restrict(const LieAlgebra &L, const LieSubspace &S);

} // namespace lietk
