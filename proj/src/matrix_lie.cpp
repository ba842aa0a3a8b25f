#include "lietk/matrix_lie.hpp"

#include "lietk/error.hpp"
#include "lietk/representation.hpp"

#include <string>

namespace lietk {

namespace {

std::string pos_name(char prefix, std::size_t i, std::size_t j) {
    return std::string(1, prefix) + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

} // namespace

MatrixLieAlgebra MatrixLieAlgebra::certify(std::string name, std::size_t n, std::vector<Matrix> basis,
                                           std::vector<std::string> basis_names) {
    MatrixLieAlgebra M;
    M.name_ = std::move(name);
    M.n_ = n;
    for (const auto &b : basis)
        if (b.rows() != n || b.cols() != n)
            fail(ErrorKind::InvalidArgument, "basis matrices of " + M.name_ + " must be " +
                                                 std::to_string(n) + "x" + std::to_string(n));
    if (basis_names.empty())
        for (std::size_t i = 0; i < basis.size(); ++i)
            basis_names.push_back("X" + std::to_string(i + 1));
    if (basis_names.size() != basis.size())
        fail(ErrorKind::InvalidArgument, "one name per basis matrix required");
    M.basis_ = std::move(basis);
    M.names_ = std::move(basis_names);

    std::vector<Vector> flat;
    for (const auto &b : M.basis_)
        flat.push_back(b.entries());
    Matrix F = Matrix::from_rows(flat, n * n);
    auto red = rref(F);
    if (red.rank != M.basis_.size())
        fail(ErrorKind::InvalidArgument, "basis of " + M.name_ + " is linearly dependent");
    M.span_ = Subspace::row_space(F);
    M.coord_cols_ = red.pivot_cols;
    Matrix sub(M.basis_.size(), M.basis_.size());
    for (std::size_t r = 0; r < M.basis_.size(); ++r)
        for (std::size_t c = 0; c < M.coord_cols_.size(); ++c)
            sub(r, c) = F(r, M.coord_cols_[c]);
    M.coord_inverse_ = M.basis_.empty() ? Matrix() : inverse(sub);

    for (std::size_t a = 0; a < M.basis_.size(); ++a)
        for (std::size_t b = a + 1; b < M.basis_.size(); ++b)
            if (!M.contains(matrix_bracket(M.basis_[a], M.basis_[b])))
                fail(ErrorKind::NotClosed, "commutator [" + M.names_[a] + ", " + M.names_[b] +
                                               "] leaves " + M.name_);
    return M;
}

bool MatrixLieAlgebra::contains(const Matrix &m) const {
    if (m.rows() != n_ || m.cols() != n_)
        return false;
    return span_.contains(m.entries());
}

std::optional<Vector> MatrixLieAlgebra::coordinates(const Matrix &m) const {
    if (!contains(m))
        return std::nullopt;
    const std::size_t d = basis_.size();
    Vector picked(d);
    for (std::size_t c = 0; c < d; ++c)
        picked[c] = m.entries()[coord_cols_[c]];
    // row vector times inverse
    Vector coords(d);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t k = 0; k < d; ++k)
            if (!picked[k].is_zero() && !coord_inverse_(k, c).is_zero())
                coords[c] += picked[k] * coord_inverse_(k, c);
    return coords;
}

Matrix MatrixLieAlgebra::element(const Vector &coords) const {
    if (coords.size() != basis_.size())
        fail(ErrorKind::DimensionMismatch, "coordinate vector length mismatch for " + name_);
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero())
            m = m + coords[i] * basis_[i];
    return m;
}

Matrix matrix_bracket(const Matrix &a, const Matrix &b) {
    if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
        fail(ErrorKind::DimensionMismatch, "commutator needs square matrices of equal size");
    return a * b - b * a;
}

bool is_adjoint_pair_matrix(const Matrix &J, const Matrix &J2, const Matrix &A, const Matrix &B) {
    return A.transpose() * J2 == J * B;
}

MatrixLieAlgebra skew_adjoint_algebra(const Matrix &J, std::string name) {
    if (!J.is_square())
        fail(ErrorKind::DimensionMismatch, "bilinear form matrix must be square");
    const std::size_t n = J.rows();
    // Row (r, c) of the system encodes (A^T J + J A)_{rc} = 0 in the entries of A.
    Matrix sys(n * n, n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t row = r * n + c;
            for (std::size_t k = 0; k < n; ++k) {
                sys(row, k * n + r) += J(k, c);
                sys(row, k * n + c) += J(r, k);
            }
        }
    Subspace sol = kernel(sys);
    std::vector<Matrix> basis;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < sol.dim(); ++i) {
        basis.push_back(Matrix::unflatten(sol.basis()[i], n, n));
        auto p = sol.pivots()[i];
        names.push_back(pos_name('X', p / n, p % n));
    }
    return MatrixLieAlgebra::certify(std::move(name), n, std::move(basis), std::move(names));
}

Matrix symplectic_form(std::size_t n) {
    Matrix z(n, n);
    return Matrix::from_blocks(z, Rational(-1) * Matrix::identity(n), Matrix::identity(n), z);
}

Matrix split_orthogonal_form(std::size_t n) {
    Matrix z(n, n);
    return Matrix::from_blocks(z, Matrix::identity(n), Matrix::identity(n), z);
}

Matrix diagonal_orthogonal_form(std::size_t p, std::size_t q) {
    Matrix J(p + q, p + q);
    for (std::size_t i = 0; i < p + q; ++i)
        J(i, i) = i < p ? 1 : -1;
    return J;
}

std::optional<Family> parse_family(const std::string &s) {
    if (s == "gl") return Family::gl;
    if (s == "sl") return Family::sl;
    if (s == "so") return Family::so;
    if (s == "so-prime" || s == "so_prime") return Family::so_prime;
    if (s == "so-jd" || s == "so_jd") return Family::so_jd;
    if (s == "sp") return Family::sp;
    if (s == "t") return Family::upper_triangular;
    if (s == "n") return Family::strictly_upper;
    return std::nullopt;
}

std::string family_label(Family f, std::size_t n, std::size_t q) {
    auto s = std::to_string(n);
    switch (f) {
    case Family::gl: return "gl(" + s + ")";
    case Family::sl: return "sl(" + s + ")";
    case Family::so: return "so(" + s + ")";
    case Family::so_prime: return "so'(" + s + "," + std::to_string(q) + ")";
    case Family::so_jd: return "so_JD(" + s + ")";
    case Family::sp: return "sp(" + std::to_string(2 * n) + ")";
    case Family::upper_triangular: return "t(" + s + ")";
    case Family::strictly_upper: return "n(" + s + ")";
    }
    return "?";
}

MatrixLieAlgebra classical(Family family, std::size_t n, std::optional<std::size_t> q) {
    if (n < 1)
        fail(ErrorKind::InvalidArgument, "classical algebras need size >= 1");
    const std::size_t qq = q.value_or(n);
    const std::string label = family_label(family, n, qq);
    std::vector<Matrix> basis;
    std::vector<std::string> names;
    switch (family) {
    case Family::gl:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                basis.push_back(Matrix::unit(n, i, j));
                names.push_back(pos_name('E', i, j));
            }
        break;
    case Family::sl:
        // positive root vectors, then the H_i, then negative root vectors
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                basis.push_back(Matrix::unit(n, i, j));
                names.push_back(pos_name('E', i, j));
            }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            basis.push_back(Matrix::unit(n, i, i) - Matrix::unit(n, i + 1, i + 1));
            names.push_back("H[" + std::to_string(i + 1) + "]");
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                basis.push_back(Matrix::unit(n, i, j));
                names.push_back(pos_name('E', i, j));
            }
        break;
    case Family::so:
        return skew_adjoint_algebra(Matrix::identity(n), label);
    case Family::so_prime:
        return skew_adjoint_algebra(diagonal_orthogonal_form(n, qq), label);
    case Family::so_jd:
        return skew_adjoint_algebra(split_orthogonal_form(n), label);
    case Family::sp:
        return skew_adjoint_algebra(symplectic_form(n), label);
    case Family::upper_triangular:
    case Family::strictly_upper:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                if (family == Family::strictly_upper && i == j)
                    continue;
                basis.push_back(Matrix::unit(n, i, j));
                names.push_back(pos_name('E', i, j));
            }
        break;
    }
    return MatrixLieAlgebra::certify(label, n, std::move(basis), std::move(names));
}

std::vector<std::size_t> diagonal_indices(const MatrixLieAlgebra &M) {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < M.dim(); ++b) {
        const Matrix &m = M.basis()[b];
        bool diag = true;
        for (std::size_t i = 0; i < m.rows() && diag; ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (i != j && !m(i, j).is_zero()) {
                    diag = false;
                    break;
                }
        if (diag)
            out.push_back(b);
    }
    return out;
}

CongruenceTransport congruence_transport(const Matrix &P, const Matrix &J) {
    if (!P.is_square() || !J.is_square() || P.rows() != J.rows())
        fail(ErrorKind::DimensionMismatch, "congruence needs square P and J of equal size");
    Matrix P_inv = inverse(P);
    Matrix J2 = P.transpose() * J * P;
    CongruenceTransport t{P,
                          P_inv,
                          J,
                          J2,
                          skew_adjoint_algebra(J, "skew_adjoint(J)"),
                          skew_adjoint_algebra(J2, "skew_adjoint(P^T J P)")};
    if (t.source.dim() != t.target.dim())
        fail(ErrorKind::InternalDefect, "congruent forms gave skew-adjoint algebras of different dimension");
    std::vector<Vector> images;
    for (const auto &A : t.source.basis()) {
        Matrix B = t.apply(A);
        if (!t.target.contains(B))
            fail(ErrorKind::InternalDefect, "transported matrix is not skew-adjoint for P^T J P");
        images.push_back(B.entries());
    }
    if (Subspace::span(J.rows() * J.rows(), images).dim() != t.target.dim())
        fail(ErrorKind::InternalDefect, "transport is not onto the target algebra");
    const auto &src = t.source.basis();
    for (std::size_t a = 0; a < src.size(); ++a)
        for (std::size_t b = a + 1; b < src.size(); ++b)
            if (!(t.apply(matrix_bracket(src[a], src[b])) ==
                  matrix_bracket(t.apply(src[a]), t.apply(src[b]))))
                fail(ErrorKind::InternalDefect, "transport does not preserve a bracket");
    return t;
}

LieAlgebra to_abstract(const MatrixLieAlgebra &M) {
    const std::size_t d = M.dim();
    BracketTable table;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            auto c = M.coordinates(matrix_bracket(M.basis()[a], M.basis()[b]));
            if (!c)
                fail(ErrorKind::NotClosed, "commutator [" + M.basis_names()[a] + ", " +
                                               M.basis_names()[b] + "] leaves " + M.name());
            SparseVec s = to_sparse(*c);
            if (!s.empty())
                table.emplace(std::make_pair(a, b), std::move(s));
        }
    // commutators of matrices satisfy Jacobi identically
    return assume_verified(LieAlgebra(M.basis_names(), std::move(table)));
}

Representation natural_representation(const MatrixLieAlgebra &M) {
    return Representation(to_abstract(M), M.basis());
}

} // namespace lietk
