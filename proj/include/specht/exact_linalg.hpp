#pragma once

#include <vector>

namespace specht {

// Exact rank of an integer matrix over the rationals, by fraction-free
// (Bareiss) elimination with full pivoting and checked machine arithmetic.
int matrix_rank(std::vector<std::vector<long long>> m);

// Exact determinant of a square integer matrix, same elimination.
long long matrix_det(std::vector<std::vector<long long>> m);

}  // namespace specht
