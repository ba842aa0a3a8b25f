#pragma once

#include "lietk/cartan.hpp"
#include "lietk/lie_algebra.hpp"
#include "lietk/weights.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lietk {

/// Algebra file: {"basis": [names], "bracket": {"i,j": [[k, "p/q"], ...]}, "dim": n}
/// with optional "cartan_indices", "matrix_basis" and "roots". Indices are
/// 0-based; coefficients are canonical rational strings; keys are sorted.
struct AlgebraDocument {
    LieAlgebra algebra;
    std::optional<std::vector<std::size_t>> cartan_indices;
    std::optional<std::vector<Matrix>> matrix_basis;
    /// (basis index, root coordinates)
    std::vector<std::pair<std::size_t, Root>> roots;
};

/// Throws Parse with a line/column for malformed JSON and InvalidArgument for
/// well-formed JSON that does not describe an algebra.
AlgebraDocument parse_algebra_json(std::string_view text);
std::string write_algebra_json(const AlgebraDocument &doc);

/// {"entries": [[...]], "rank": l}
CartanMatrix parse_cartan_json(std::string_view text);
std::string write_cartan_json(const CartanMatrix &A);

/// {"weights": [{"chi": ["p/q", ...], "dim": d}, ...]}
std::string write_weights_json(const std::vector<WeightSpaceResult> &weights);

} // namespace lietk
