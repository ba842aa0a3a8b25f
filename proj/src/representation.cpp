#include "lietk/representation.hpp"

#include "lietk/error.hpp"

#include <string>

namespace lietk {

Representation::Representation(LieAlgebra algebra, std::vector<Matrix> action, Unchecked)
    : algebra_(std::move(algebra)), action_(std::move(action)) {
    module_dim_ = action_.empty() ? 0 : action_.front().rows();
}

Representation::Representation(LieAlgebra algebra, std::vector<Matrix> action)
    : Representation(std::move(algebra), std::move(action), Unchecked{}) {
    const std::size_t n = algebra_.dim();
    if (action_.size() != n)
        fail(ErrorKind::InvalidArgument, "representation needs " + std::to_string(n) +
                                             " action matrices, got " +
                                             std::to_string(action_.size()));
    for (const auto &m : action_)
        if (m.rows() != module_dim_ || m.cols() != module_dim_)
            fail(ErrorKind::InvalidArgument, "action matrices must all be square of the same size");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix lhs = act(to_dense(algebra_.bracket_basis(i, j), n));
            Matrix rhs = action_[i] * action_[j] - action_[j] * action_[i];
            if (!(lhs == rhs))
                fail(ErrorKind::InvalidArgument, "module axiom fails on basis pair (" +
                                                     algebra_.basis_names()[i] + ", " +
                                                     algebra_.basis_names()[j] + ")");
        }
}

Representation Representation::adjoint(const LieAlgebra &L) {
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < L.dim(); ++i)
        action.push_back(ad_basis(L, i));
    // ad is a representation exactly when L satisfies Jacobi; trust verified inputs
    if (L.verified())
        return Representation(L, std::move(action), Unchecked{});
    return Representation(L, std::move(action));
}

Representation Representation::trivial(const LieAlgebra &L, std::size_t module_dim) {
    Representation r(L, std::vector<Matrix>(L.dim(), Matrix(module_dim, module_dim)), Unchecked{});
    r.module_dim_ = module_dim;
    return r;
}

Matrix Representation::act(const Vector &x) const {
    if (x.size() != algebra_.dim())
        fail(ErrorKind::DimensionMismatch, "element length " + std::to_string(x.size()) +
                                               " for an algebra of dimension " +
                                               std::to_string(algebra_.dim()));
    Matrix m(module_dim_, module_dim_);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero())
            m = m + x[i] * action_[i];
    return m;
}

} // namespace lietk
