#pragma once

#include "lietk/lie_algebra.hpp"

#include <vector>

namespace lietk {

/// A Lie module: one square matrix per basis vector of the algebra, with
/// action([x, y]) = action(x) action(y) - action(y) action(x) on basis pairs.
class Representation {
  public:
    /// Throws InvalidArgument if sizes disagree or the module axiom fails.
    Representation(LieAlgebra algebra, std::vector<Matrix> action);

    static Representation adjoint(const LieAlgebra &L);
    /// The zero action on Q^module_dim.
    static Representation trivial(const LieAlgebra &L, std::size_t module_dim);

    const LieAlgebra &algebra() const { return algebra_; }
    std::size_t module_dim() const { return module_dim_; }
    const std::vector<Matrix> &action() const { return action_; }

    /// Action of an arbitrary algebra element, linear in x.
    Matrix act(const Vector &x) const;

  private:
    struct Unchecked {};
    Representation(LieAlgebra algebra, std::vector<Matrix> action, Unchecked);

    LieAlgebra algebra_;
    std::size_t module_dim_ = 0;
    std::vector<Matrix> action_;
};

} // namespace lietk
