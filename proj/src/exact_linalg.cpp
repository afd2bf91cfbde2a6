#include "specht/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

#include "specht/cyclo.hpp"

namespace specht {

namespace {

// One fraction-free elimination pass.  Returns the number of pivots; if
// `det_out` is given, column pivoting is disabled so the determinant can be
// read off (zero column means determinant 0).
int bareiss(std::vector<std::vector<long long>>& m, long long* det_out) {
    int rows = static_cast<int>(m.size());
    int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    long long prev = 1;
    int sign = 1;
    int k = 0;
    for (; k < rows && k < cols; ++k) {
        int pi = -1, pj = -1;
        for (int i = k; i < rows && pi < 0; ++i)
            for (int j = k; j < cols; ++j)
                if (m[i][j] != 0 && (det_out == nullptr || j == k)) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != k) {
            std::swap(m[pi], m[k]);
            sign = -sign;
        }
        if (pj != k) {
            for (int i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][k]);
            sign = -sign;
        }
        for (int i = k + 1; i < rows; ++i) {
            for (int j = k + 1; j < cols; ++j) {
                long long num = checked_add(checked_mul(m[i][j], m[k][k]),
                                            -checked_mul(m[i][k], m[k][j]));
                if (num % prev != 0)
                    throw std::logic_error("fraction-free elimination: inexact division");
                m[i][j] = num / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    if (det_out != nullptr) {
        if (k < rows) {
            *det_out = 0;
        } else {
            *det_out = sign > 0 ? m[rows - 1][rows - 1] : -m[rows - 1][rows - 1];
        }
    }
    return k;
}

}  // namespace

int matrix_rank(std::vector<std::vector<long long>> m) {
    return bareiss(m, nullptr);
}

long long matrix_det(std::vector<std::vector<long long>> m) {
    for (const auto& row : m)
        if (row.size() != m.size())
            throw std::invalid_argument("determinant needs a square matrix");
    if (m.empty()) return 1;
    long long det = 0;
    bareiss(m, &det);
    return det;
}

}  // namespace specht
