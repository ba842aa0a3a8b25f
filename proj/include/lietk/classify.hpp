#pragma once

#include "lietk/cartan.hpp"
#include "lietk/structure.hpp"
#include "lietk/weights.hpp"

#include <vector>

namespace lietk {

struct SimpleComponent {
    LieSubspace ideal;
    SimpleType type;
    /// Positions in SplitDecomposition::simple_roots.
    std::vector<std::size_t> nodes;
};

struct SplitDecomposition {
    /// Root spaces of L for H, zero weight included, sorted by chi.
    std::vector<WeightSpaceResult> root_spaces;
    /// Simple roots for the lexicographic positive system, as values on H's basis.
    std::vector<WeightFunction> simple_roots;
    CartanMatrix cartan;
    std::vector<SimpleComponent> components;
};

/// Decomposes a semisimple L with splitting Cartan subalgebra H into simple
/// ideals, one per connected component of the Dynkin diagram read off from
/// the roots. Throws NotSemisimple, NonSplit (naming the element of H whose
/// action is not diagonalisable over Q), NotClosed / NotNilpotent when H is
/// not a Cartan subalgebra, and InternalDefect if the result fails its checks.
SplitDecomposition split_decompose(const LieAlgebra &L, const LieSubspace &H);

} // namespace lietk
