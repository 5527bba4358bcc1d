#pragma once

#include <istream>
#include <string>

#include "ergo/graph.hpp"
#include "ergo/matrix.hpp"

namespace ergo {

/// Matrix text format: optional first line `n`, then n rows of n decimal
/// numbers separated by whitespace. `#` starts a comment line.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);

/// Edge-list format: lines `u v`, `#` comments, optional header `n <count>`
/// declaring the vertex count (needed for isolated vertices).
Graph read_edge_list(std::istream& in, bool one_based);
Graph read_edge_list_file(const std::string& path, bool one_based);

}  // namespace ergo
