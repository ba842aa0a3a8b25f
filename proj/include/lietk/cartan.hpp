#pragma once

#include "lietk/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lietk {

/// Square integer matrix. The convention is A_ij = <alpha_j, alpha_i^vee>,
/// so [H_i, E_j] = A_ij E_j and ad(E_i)^(1 - A_ij) E_j = 0.
struct CartanMatrix {
    std::vector<std::vector<int>> entries;

    std::size_t rank() const { return entries.size(); }
    int operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
    bool operator==(const CartanMatrix &) const = default;
};

/// A catalogue label such as A3, E8 or G2.
struct SimpleType {
    char family = 'A';
    std::size_t rank = 1;

    std::string str() const { return std::string(1, family) + std::to_string(rank); }
    auto operator<=>(const SimpleType &) const = default;
};

/// Accepts "A", "B", ... with a separate rank, or "E6"-style labels with rank 0.
std::optional<SimpleType> parse_type(const std::string &label, std::size_t rank = 0);

/// Bourbaki numbering. B_l has its short simple root last, C_l its long simple
/// root last; D_l has l-2 branching to l-1 and l; E_l has 2 attached to 4.
/// F4 is [[2,-1,0,0],[-1,2,-2,0],[0,-1,2,-1],[0,0,-1,2]], G2 is [[2,-1],[-3,2]].
/// Throws InvalidArgument for ranks outside A>=1, B,C>=2, D>=3, E 6..8, F4, G2.
CartanMatrix named_cartan(SimpleType t);
CartanMatrix named_cartan(char family, std::size_t rank);

struct CartanValidation {
    bool square = false;
    bool diagonal_two = false;
    bool off_diagonal_nonpositive = false;
    bool zero_pattern_symmetric = false;
    bool symmetrizable = false;
    bool finite_type = false;
    /// d_i with d_i A_ij = d_j A_ji, smallest value 1 per component.
    std::vector<Rational> symmetrizer;
    std::vector<std::string> problems;

    bool valid() const { return square && diagonal_two && off_diagonal_nonpositive && zero_pattern_symmetric; }
};

CartanValidation validate_cartan(const CartanMatrix &A);

using Root = std::vector<int>;

/// Roots in simple-root coordinates. Positive roots are sorted by height; the
/// simple roots come first in index order, each higher level in ascending
/// lexicographic order. The negatives are their negations in the same order.
struct RootSystem {
    CartanMatrix cartan;
    std::vector<Rational> symmetrizer;
    std::vector<Root> positive;

    std::size_t rank() const { return cartan.rank(); }
    std::size_t size() const { return 2 * positive.size(); }
    /// Positive roots followed by negative roots.
    std::vector<Root> all() const;
    bool contains(const Root &r) const;
    /// Position in `positive` of r or -r.
    std::optional<std::size_t> positive_index(const Root &r) const;
    /// <r, alpha_i^vee> = sum_j r_j A_ij
    int pairing(const Root &r, std::size_t i) const;
    /// Invariant form with (alpha_i, alpha_j) = d_i A_ij.
    Rational inner(const Root &r, const Root &s) const;

    std::map<Root, std::size_t> index;
};

/// Height induction with root strings. Throws NotFiniteType.
RootSystem roots_from_cartan(const CartanMatrix &A);

int height(const Root &r);

struct DynkinEdge {
    std::size_t i = 0, j = 0; // i < j
    int multiplicity = 1;     // A_ij * A_ji
    /// For multiplicity > 1, the node on the short-root side.
    std::optional<std::size_t> arrow_to;
    bool operator==(const DynkinEdge &) const = default;
};

struct DynkinDiagram {
    std::size_t nodes = 0;
    std::vector<DynkinEdge> edges;
};

/// Requires a valid generalised Cartan matrix (throws NotFiniteType otherwise).
DynkinDiagram dynkin(const CartanMatrix &A);

struct RecognizedComponent {
    std::vector<std::size_t> nodes;
    std::optional<SimpleType> type; // nullopt: not of finite type
};

/// Connected components ordered by smallest node.
std::vector<RecognizedComponent> recognize(const DynkinDiagram &D);

enum class DynkinFormat { ascii, dot };
std::string render_dynkin(const DynkinDiagram &D, DynkinFormat f);

} // namespace lietk
