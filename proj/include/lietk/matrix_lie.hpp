#pragma once

#include "lietk/lie_algebra.hpp"
#include "lietk/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lietk {

/// A Lie subalgebra of gl(n, Q) given by an explicit basis of matrices.
/// Instances only come out of certify(), which checks linear independence and
/// closure under the commutator, so every value carries that certificate.
class MatrixLieAlgebra {
  public:
    /// Throws InvalidArgument for dependent or wrongly sized bases and
    /// NotClosed (naming the pair) when a commutator leaves the span.
    static MatrixLieAlgebra certify(std::string name, std::size_t n, std::vector<Matrix> basis,
                                    std::vector<std::string> basis_names = {});

    const std::string &name() const { return name_; }
    std::size_t size() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Matrix> &basis() const { return basis_; }
    const std::vector<std::string> &basis_names() const { return names_; }
    /// Span of the flattened basis inside Q^(n*n).
    const Subspace &span() const { return span_; }

    bool contains(const Matrix &m) const;
    /// Coordinates in basis(), or nullopt when m is outside the span.
    std::optional<Vector> coordinates(const Matrix &m) const;
    Matrix element(const Vector &coords) const;

  private:
    MatrixLieAlgebra() = default;

    std::string name_;
    std::size_t n_ = 0;
    std::vector<Matrix> basis_;
    std::vector<std::string> names_;
    Subspace span_;
    // Columns of the flattened basis that pin down coordinates, and the
    // inverse of the basis restricted to them.
    std::vector<std::size_t> coord_cols_;
    Matrix coord_inverse_;
};

/// AB - BA
Matrix matrix_bracket(const Matrix &a, const Matrix &b);

/// A^T J2 = J B
bool is_adjoint_pair_matrix(const Matrix &J, const Matrix &J2, const Matrix &A, const Matrix &B);

/// {A : A^T J = -J A}, basis in canonical (row-reduced, row-major flattened) order.
MatrixLieAlgebra skew_adjoint_algebra(const Matrix &J, std::string name = "skew_adjoint");

/// [[0, -I], [I, 0]] of size 2n.
Matrix symplectic_form(std::size_t n);
/// [[0, I], [I, 0]] of size 2n.
Matrix split_orthogonal_form(std::size_t n);
/// diag(1_p, -1_q).
Matrix diagonal_orthogonal_form(std::size_t p, std::size_t q);

enum class Family {
    gl,
    sl,
    so,
    so_prime,
    so_jd,
    sp,
    upper_triangular,
    strictly_upper,
};

/// Parses "gl", "sl", "so", "so-prime", "so-jd", "sp", "t", "n".
std::optional<Family> parse_family(const std::string &s);
std::string family_label(Family f, std::size_t n, std::size_t q);

/// Classical matrix algebras. `n` is the matrix size for gl, sl, so, t and n,
/// the block size for sp and so_jd (matrices of size 2n), and p for so_prime
/// (with q defaulting to p).
MatrixLieAlgebra classical(Family family, std::size_t n, std::optional<std::size_t> q = std::nullopt);

/// Indices of basis matrices that are diagonal.
std::vector<std::size_t> diagonal_indices(const MatrixLieAlgebra &M);

/// Transport along the congruence J -> P^T J P: A -> P^-1 A P maps the
/// skew-adjoint algebra of J onto that of P^T J P.
struct CongruenceTransport {
    Matrix P;
    Matrix P_inverse;
    Matrix form;        // J
    Matrix target_form; // P^T J P
    MatrixLieAlgebra source;
    MatrixLieAlgebra target;

    Matrix apply(const Matrix &A) const { return P_inverse * A * P; }
};

/// Throws DivisionByZero for singular P and InternalDefect if the transported
/// basis fails to land bijectively and bracket-compatibly in the target.
CongruenceTransport congruence_transport(const Matrix &P, const Matrix &J);

/// Structure constants in the matrix basis; the result is verified.
LieAlgebra to_abstract(const MatrixLieAlgebra &M);

/// The defining representation of M's abstract algebra.
class Representation;
Representation natural_representation(const MatrixLieAlgebra &M);

} // namespace lietk
