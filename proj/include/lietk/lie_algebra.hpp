#pragma once

#include "lietk/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace lietk {

/// Sparse coordinate vector: (index, coefficient) pairs, indices strictly
/// increasing, no zero coefficients.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

SparseVec to_sparse(const Vector &v);
Vector to_dense(const SparseVec &v, std::size_t n);

/// Structure constants keyed by (i, j) with i < j.
using BracketTable = std::map<std::pair<std::size_t, std::size_t>, SparseVec>;

/// A finite-dimensional Lie algebra over Q given by structure constants on a
/// named basis. Only brackets with i < j are stored; [b_i, b_i] = 0 and
/// [b_j, b_i] = -[b_i, b_j] are implied, so the alternating law holds by
/// construction. Values are immutable and cheap to copy.
class LieAlgebra {
  public:
    LieAlgebra() : LieAlgebra(std::vector<std::string>{}, BracketTable{}) {}
    /// Throws InvalidArgument on out-of-range or unordered keys, zero or
    /// duplicate coefficients.
    LieAlgebra(std::vector<std::string> basis_names, BracketTable constants);

    static LieAlgebra abelian(std::size_t n);

    std::size_t dim() const { return data_->names.size(); }
    const std::vector<std::string> &basis_names() const { return data_->names; }
    const BracketTable &constants() const { return data_->table; }

    /// True when the value was produced by verify() (all basis triples checked).
    bool verified() const { return verified_; }

    /// [b_i, b_j] as a signed lookup; the returned pointer is null for zero brackets.
    const SparseVec *basis_bracket(std::size_t i, std::size_t j, bool &negate) const;

    /// acc += coeff * [b_i, b_j]
    void accumulate(std::size_t i, std::size_t j, const Rational &coeff, Vector &acc) const;

    Vector bracket(const Vector &x, const Vector &y) const;
    SparseVec bracket(const SparseVec &x, const SparseVec &y) const;
    SparseVec bracket_basis(std::size_t i, std::size_t j) const;

    friend LieAlgebra verify(const LieAlgebra &L);
    friend LieAlgebra assume_verified(const LieAlgebra &L);

  private:
    struct Data {
        std::vector<std::string> names;
        BracketTable table;
        std::vector<const SparseVec *> lookup; // dim*dim, row i col j for i < j
    };
    std::shared_ptr<const Data> data_;
    bool verified_ = false;
};

enum class CheckMode { Automatic, Full, Sampled };

/// Per-triple verdicts of the three equivalent forms of the Lie axiom.
struct TripleVerdict {
    std::size_t i = 0, j = 0, k = 0;
    bool leibniz = true;     // [x,[y,z]] = [[x,y],z] + [y,[x,z]]
    bool jacobi = true;      // [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0
    bool normal_form = true; // [[x,y],z] = [x,[y,z]] - [y,[x,z]]
};

struct AxiomReport {
    bool ok = true;
    bool sampled = false;
    std::size_t triples_checked = 0;
    /// True when the three verdicts coincided on every triple examined.
    bool forms_agree = true;
    std::vector<TripleVerdict> failures;
};

/// Leibniz, Jacobi and normal-form checks on basis triples. Automatic mode is
/// exhaustive up to dimension 64 and draws `samples` seeded triples above.
AxiomReport check_axioms(const LieAlgebra &L, CheckMode mode = CheckMode::Automatic,
                         std::uint64_t seed = 0, std::size_t samples = 200);

/// Exhaustive check; returns a copy marked verified or throws NotClosed naming
/// the first failing triple.
LieAlgebra verify(const LieAlgebra &L);
/// Marks a copy verified without re-running the check. For constructions whose
/// own certification already covered the axioms.
LieAlgebra assume_verified(const LieAlgebra &L);

/// Matrix of y -> [x, y] in the algebra basis.
Matrix ad(const LieAlgebra &L, const Vector &x);
Matrix ad_basis(const LieAlgebra &L, std::size_t i);

} // namespace lietk
