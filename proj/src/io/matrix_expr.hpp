#pragma once

#include <string_view>

#include "core/graph.hpp"

namespace pistr {

/// Builds a matrix from text such as "A4+B9", "~A5+~B5+~C5 @ 12:3:3:3, 23:3:3:2",
/// "M7:1:2:3", "L6", "Lp6" or "T5+T5_TILDE". Throws InvalidArgument.
WeightedAdjacencyMatrix build_matrix_expression(std::string_view expression);

}  // namespace pistr
