#pragma once

#include "lietk/cartan.hpp"
#include "lietk/lie_algebra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lietk {

/// Split semisimple algebra in a Chevalley basis. Basis order: e_alpha for
/// positive roots (root order), then h_1..h_l, then e_-alpha in the same order.
struct ChevalleyAlgebra {
    RootSystem roots;
    LieAlgebra algebra;
    std::vector<std::size_t> cartan_indices;
    /// Root (positive or negative) to the basis index of e_root.
    std::map<Root, std::size_t> root_index;
    /// Jacobi check that certified the constants.
    bool sampled_check = false;

    const CartanMatrix &cartan() const { return roots.cartan; }
    std::size_t rank() const { return roots.rank(); }
    std::size_t E(std::size_t i) const;
    std::size_t F(std::size_t i) const;
    std::size_t H(std::size_t i) const { return cartan_indices.at(i); }
};

/// Throws NotFiniteType for bad input and InternalDefect if the constants
/// fail the Jacobi check (full for dim <= 60 under Automatic, else sampled).
ChevalleyAlgebra chevalley_algebra(const CartanMatrix &A, CheckMode mode = CheckMode::Automatic,
                                   std::uint64_t seed = 0);

/// N_{r,s} for roots r, s with r + s a root (0 otherwise), as used in the construction.
int structure_constant(const ChevalleyAlgebra &C, const Root &r, const Root &s);

struct SerreReport {
    bool ok = true;
    std::size_t relations_checked = 0;
    std::vector<std::string> violations;
};

/// [H_i,H_j] = 0, [E_i,F_i] = H_i, [E_i,F_j] = 0 (i != j), [H_i,E_j] = A_ij E_j,
/// [H_i,F_j] = -A_ij F_j, ad(E_i)^(1-A_ij) E_j = 0 and ad(F_i)^(1-A_ij) F_j = 0 (i != j).
SerreReport verify_serre(const ChevalleyAlgebra &C);

/// ad(x)^k y
Vector ad_power(const LieAlgebra &L, const Vector &x, std::size_t k, Vector y);

} // namespace lietk
