#pragma once

#include "lietk/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace lietk {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
Vector operator+(const Vector &a, const Vector &b);
Vector operator-(const Vector &a, const Vector &b);
Vector operator*(const Rational &s, const Vector &v);
/// a += s * b
void axpy(Vector &a, const Rational &s, const Vector &b);

/// Dense row-major rational matrix.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector> &rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector> &cols, std::size_t rows);
    /// Block matrix [[a, b], [c, d]].
    static Matrix from_blocks(const Matrix &a, const Matrix &b, const Matrix &c, const Matrix &d);
    /// Matrix unit with a single 1 at (i, j).
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const;
    Vector column(std::size_t c) const;
    /// Row-major flattening, used to treat n x n matrices as vectors of length n^2.
    const std::vector<Rational> &entries() const { return data_; }
    static Matrix unflatten(const Vector &v, std::size_t rows, std::size_t cols);

    Matrix transpose() const;
    Rational trace() const;
    bool is_zero() const;

    Vector apply(const Vector &v) const;

    friend Matrix operator+(const Matrix &a, const Matrix &b);
    friend Matrix operator-(const Matrix &a, const Matrix &b);
    friend Matrix operator*(const Matrix &a, const Matrix &b);
    friend Matrix operator*(const Rational &s, const Matrix &m);
    friend bool operator==(const Matrix &a, const Matrix &b) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix power(const Matrix &m, unsigned exponent);

class Subspace;

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Unique reduced row-echelon form by Gauss-Jordan elimination.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix &m);
/// Right kernel {v : m v = 0}, canonicalised.
Subspace kernel(const Matrix &m);
/// One exact solution of m x = rhs, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix &m, const Vector &rhs);
Rational determinant(const Matrix &m);
/// Throws DivisionByZero when m is singular.
Matrix inverse(const Matrix &m);

} // namespace lietk
