#pragma once

#include "lietk/matrix.hpp"

#include <cstddef>
#include <vector>

namespace lietk {

/// A linear subspace of Q^n held as the reduced row-echelon basis of its row
/// space. The basis is canonical, so equality is a plain comparison of rows.
class Subspace {
  public:
    explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

    static Subspace full(std::size_t n);
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector> &vectors);
    static Subspace row_space(const Matrix &m);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    bool is_zero() const { return rows_.empty(); }
    bool is_full() const { return rows_.size() == ambient_; }

    const std::vector<Vector> &basis() const { return rows_; }
    const std::vector<std::size_t> &pivots() const { return pivots_; }
    Matrix basis_matrix() const;

    /// Remainder of v after eliminating every pivot coordinate; zero iff v is in the space.
    Vector reduce(const Vector &v) const;
    bool contains(const Vector &v) const;
    bool contains(const Subspace &other) const;
    /// Coordinates of a member vector with respect to basis(); read off the pivot entries.
    Vector coordinates(const Vector &v) const;

    /// Adds v to the space in place, keeping the canonical form. Returns false if v was already a member.
    bool absorb(Vector v);

    /// Vectors orthogonal to every basis row under the standard dot product.
    Subspace annihilator() const;

    friend Subspace operator+(const Subspace &a, const Subspace &b);
    friend Subspace intersect(const Subspace &a, const Subspace &b);
    friend bool operator==(const Subspace &a, const Subspace &b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }

  private:
    std::size_t ambient_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace lietk
