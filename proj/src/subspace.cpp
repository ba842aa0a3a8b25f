#include "lietk/subspace.hpp"

#include "lietk/error.hpp"

#include <algorithm>
#include <string>

namespace lietk {

namespace {

void require_ambient(std::size_t a, std::size_t b) {
    if (a != b)
        fail(ErrorKind::DimensionMismatch,
             "subspaces of Q^" + std::to_string(a) + " and Q^" + std::to_string(b));
}

} // namespace

Subspace Subspace::full(std::size_t n) {
    Subspace s(n);
    for (std::size_t i = 0; i < n; ++i) {
        s.rows_.push_back(unit_vector(n, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector> &vectors) {
    if (vectors.empty())
        return Subspace(ambient_dim);
    return row_space(Matrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::row_space(const Matrix &m) {
    auto red = rref(m);
    Subspace s(m.cols());
    for (std::size_t i = 0; i < red.rank; ++i) {
        s.rows_.push_back(red.reduced.row_vector(i));
        s.pivots_.push_back(red.pivot_cols[i]);
    }
    return s;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(rows_, ambient_); }

Vector Subspace::reduce(const Vector &v) const {
    require_ambient(ambient_, v.size());
    Vector r = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Rational f = r[pivots_[k]];
        if (!f.is_zero())
            axpy(r, -f, rows_[k]);
    }
    return r;
}

bool Subspace::contains(const Vector &v) const { return lietk::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace &other) const {
    require_ambient(ambient_, other.ambient_);
    if (other.dim() > dim())
        return false;
    return std::all_of(other.rows_.begin(), other.rows_.end(),
                       [this](const Vector &v) { return contains(v); });
}

Vector Subspace::coordinates(const Vector &v) const {
    require_ambient(ambient_, v.size());
    Vector c(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k)
        c[k] = v[pivots_[k]];
    return c;
}

bool Subspace::absorb(Vector v) {
    v = reduce(v);
    auto it = std::find_if(v.begin(), v.end(), [](const Rational &x) { return !x.is_zero(); });
    if (it == v.end())
        return false;
    std::size_t p = static_cast<std::size_t>(it - v.begin());
    Rational inv = v[p].inverse();
    for (auto &x : v)
        if (!x.is_zero())
            x *= inv;
    for (auto &row : rows_) {
        Rational f = row[p];
        if (!f.is_zero())
            axpy(row, -f, v);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    auto idx = pos - pivots_.begin();
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

Subspace Subspace::annihilator() const {
    if (rows_.empty())
        return full(ambient_);
    return kernel(basis_matrix());
}

Subspace operator+(const Subspace &a, const Subspace &b) {
    require_ambient(a.ambient_, b.ambient_);
    Subspace s = a.dim() >= b.dim() ? a : b;
    const Subspace &other = a.dim() >= b.dim() ? b : a;
    for (const auto &v : other.rows_)
        s.absorb(v);
    return s;
}

Subspace intersect(const Subspace &a, const Subspace &b) {
    require_ambient(a.ambient_, b.ambient_);
    if (a.is_zero() || b.is_full())
        return a;
    if (b.is_zero() || a.is_full())
        return b;
    return (a.annihilator() + b.annihilator()).annihilator();
}

} // namespace lietk
