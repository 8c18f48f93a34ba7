#pragma once

#include <optional>
#include <vector>

#include "trackcube/bits.hpp"

namespace trackcube {

// GF(2) row space utilities. Matrices are given as rows of BitVec of a fixed
// column width.
int gf2_rank(std::vector<BitVec> rows);

// Solve M x = b over GF(2), where M has `cols` columns and rows[i] is the
// i-th equation's coefficient vector. Returns one solution or nullopt.
std::optional<BitVec> gf2_solve(std::vector<BitVec> rows, BitVec rhs, int cols);

} // namespace trackcube
