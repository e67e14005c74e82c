#pragma once

// Exact determinant of an integer matrix by multi-modular computation
// (fixed 62-bit primes, CRT against a Hadamard bound).  Internal helper.

#include "picard/rat.hpp"

#include <vector>

namespace picard::detail {

Int det_integer_matrix(const std::vector<std::vector<Int>>& M);

}  // namespace picard::detail
