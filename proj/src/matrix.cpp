#include "lietk/matrix.hpp"

#include "lietk/error.hpp"
#include "lietk/subspace.hpp"

#include <string>
#include <utility>

namespace lietk {

namespace {

void require(bool ok, const std::string &what) {
    if (!ok)
        fail(ErrorKind::DimensionMismatch, what);
}

} // namespace

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(std::span<const Rational> v) {
    for (const auto &x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vector operator+(const Vector &a, const Vector &b) {
    require(a.size() == b.size(), "vector sum of lengths " + std::to_string(a.size()) + " and " +
                                      std::to_string(b.size()));
    Vector r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Vector operator-(const Vector &a, const Vector &b) {
    require(a.size() == b.size(), "vector difference of lengths " + std::to_string(a.size()) +
                                      " and " + std::to_string(b.size()));
    Vector r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

Vector operator*(const Rational &s, const Vector &v) {
    Vector r(v.size());
    if (s.is_zero())
        return r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            r[i] = s * v[i];
    return r;
}

void axpy(Vector &a, const Rational &s, const Vector &b) {
    require(a.size() == b.size(), "axpy length mismatch");
    if (s.is_zero())
        return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero())
            a[i] += s * b[i];
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        require(r.size() == cols_, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector> &rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, "row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector> &cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        require(cols[c].size() == rows, "column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::from_blocks(const Matrix &a, const Matrix &b, const Matrix &c, const Matrix &d) {
    require(a.rows_ == b.rows_ && c.rows_ == d.rows_ && a.cols_ == c.cols_ && b.cols_ == d.cols_,
            "incompatible block sizes");
    Matrix m(a.rows_ + c.rows_, a.cols_ + b.cols_);
    auto place = [&m](const Matrix &blk, std::size_t r0, std::size_t c0) {
        for (std::size_t r = 0; r < blk.rows_; ++r)
            for (std::size_t col = 0; col < blk.cols_; ++col)
                m(r0 + r, c0 + col) = blk(r, col);
    };
    place(a, 0, 0);
    place(b, 0, a.cols_);
    place(c, a.rows_, 0);
    place(d, a.rows_, a.cols_);
    return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
}

Vector Matrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::unflatten(const Vector &v, std::size_t rows, std::size_t cols) {
    require(v.size() == rows * cols, "cannot unflatten vector of length " + std::to_string(v.size()));
    Matrix m(rows, cols);
    m.data_ = v;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Rational Matrix::trace() const {
    require(is_square(), "trace of non-square matrix");
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

bool Matrix::is_zero() const { return lietk::is_zero(data_); }

Vector Matrix::apply(const Vector &v) const {
    require(v.size() == cols_, "matrix-vector size mismatch");
    Vector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero())
            continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const auto &x = (*this)(r, c);
            if (!x.is_zero())
                out[r] += x * v[c];
        }
    }
    return out;
}

Matrix operator+(const Matrix &a, const Matrix &b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum size mismatch");
    Matrix m(a);
    for (std::size_t i = 0; i < m.data_.size(); ++i)
        m.data_[i] += b.data_[i];
    return m;
}

Matrix operator-(const Matrix &a, const Matrix &b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference size mismatch");
    Matrix m(a);
    for (std::size_t i = 0; i < m.data_.size(); ++i)
        m.data_[i] -= b.data_[i];
    return m;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    require(a.cols_ == b.rows_, "matrix product size mismatch: " + std::to_string(a.rows_) + "x" +
                                    std::to_string(a.cols_) + " by " + std::to_string(b.rows_) +
                                    "x" + std::to_string(b.cols_));
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto &x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const auto &y = b(k, j);
                if (!y.is_zero())
                    m(i, j) += x * y;
            }
        }
    return m;
}

Matrix operator*(const Rational &s, const Matrix &m) {
    Matrix r(m.rows_, m.cols_);
    if (s.is_zero())
        return r;
    for (std::size_t i = 0; i < m.data_.size(); ++i)
        if (!m.data_[i].is_zero())
            r.data_[i] = s * m.data_[i];
    return r;
}

Matrix power(const Matrix &m, unsigned exponent) {
    require(m.is_square(), "power of non-square matrix");
    Matrix result = Matrix::identity(m.rows());
    Matrix base = m;
    while (exponent > 0) {
        if (exponent & 1u)
            result = result * base;
        exponent >>= 1;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

RrefResult rref(Matrix m) {
    RrefResult out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero())
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t k = 0; k < cols; ++k)
                std::swap(m(p, k), m(r, k));
        Rational inv = m(r, c).inverse();
        nz.clear();
        for (std::size_t k = c; k < cols; ++k) {
            if (m(r, k).is_zero())
                continue;
            m(r, k) *= inv;
            nz.push_back(k);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            Rational f = m(i, c);
            for (std::size_t k : nz)
                m(i, k) -= f * m(r, k);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix &m) { return rref(m).rank; }

Subspace kernel(const Matrix &m) {
    auto red = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : red.pivot_cols)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        Vector v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < red.rank; ++i)
            v[red.pivot_cols[i]] = -red.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span(n, basis);
}

std::optional<Vector> solve(const Matrix &m, const Vector &rhs) {
    require(rhs.size() == m.rows(), "right-hand side length " + std::to_string(rhs.size()) +
                                        " for " + std::to_string(m.rows()) + " equations");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    auto red = rref(std::move(aug));
    Vector x(m.cols());
    for (std::size_t i = 0; i < red.rank; ++i) {
        auto p = red.pivot_cols[i];
        if (p == m.cols())
            return std::nullopt;
        x[p] = red.reduced(i, m.cols());
    }
    return x;
}

Rational determinant(const Matrix &m) {
    require(m.is_square(), "determinant of non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero())
            ++p;
        if (p == n)
            return Rational();
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k)
                std::swap(a(p, k), a(c, k));
            det = -det;
        }
        det *= a(c, c);
        Rational inv = a(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero())
                continue;
            Rational f = a(i, c) * inv;
            for (std::size_t k = c; k < n; ++k)
                if (!a(c, k).is_zero())
                    a(i, k) -= f * a(c, k);
        }
    }
    return det;
}

Matrix inverse(const Matrix &m) {
    require(m.is_square(), "inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto red = rref(std::move(aug));
    if (red.rank < n || red.pivot_cols[n - 1] != n - 1)
        fail(ErrorKind::DivisionByZero, "matrix is singular");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = red.reduced(r, n + c);
    return inv;
}

} // namespace lietk
