#include <random>
#include <stdexcept>

#include "doctest.h"
#include "specht/exact_linalg.hpp"

using namespace specht;

namespace {

using Mat = std::vector<std::vector<long long>>;

// Cofactor expansion, the slow independent route.
long long det_oracle(const Mat& m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    long long acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        Mat minor(n - 1, std::vector<long long>(n - 1));
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k)
                if (k != j) minor[i - 1][c++] = m[i][k];
        acc += (j % 2 == 0 ? 1 : -1) * m[0][j] * det_oracle(minor);
    }
    return acc;
}

// Rank as the largest size of a nonvanishing minor.
int rank_oracle(const Mat& m) {
    int rows = static_cast<int>(m.size());
    int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    for (int k = std::min(rows, cols); k >= 1; --k) {
        std::vector<int> ri(k), ci(k);
        auto next_comb = [](std::vector<int>& idx, int total) {
            int k2 = static_cast<int>(idx.size());
            int t = k2 - 1;
            while (t >= 0 && idx[t] == total - k2 + t) --t;
            if (t < 0) return false;
            ++idx[t];
            for (int u = t + 1; u < k2; ++u) idx[u] = idx[u - 1] + 1;
            return true;
        };
        for (int i = 0; i < k; ++i) ri[i] = i;
        do {
            for (int i = 0; i < k; ++i) ci[i] = i;
            do {
                Mat sub(k, std::vector<long long>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub[i][j] = m[ri[i]][ci[j]];
                if (det_oracle(sub) != 0) return k;
            } while (next_comb(ci, cols));
        } while (next_comb(ri, rows));
    }
    return 0;
}

}  // namespace

TEST_CASE("determinant against cofactor expansion") {
    std::mt19937_64 rng(17);
    for (int n = 0; n <= 5; ++n)
        for (int t = 0; t < 40; ++t) {
            Mat m(n, std::vector<long long>(n));
            for (auto& row : m)
                for (auto& v : row) v = static_cast<long long>(rng() % 9) - 4;
            CHECK(matrix_det(m) == det_oracle(m));
        }
    CHECK_THROWS_AS(matrix_det(Mat{{1, 2}}), std::invalid_argument);
}

TEST_CASE("rank against minor enumeration") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 60; ++t) {
        int rows = 1 + static_cast<int>(rng() % 4);
        int cols = 1 + static_cast<int>(rng() % 5);
        Mat m(rows, std::vector<long long>(cols));
        for (auto& row : m)
            for (auto& v : row) v = static_cast<long long>(rng() % 5) - 2;
        CHECK(matrix_rank(m) == rank_oracle(m));
    }

    // rank-deficient by construction: duplicate and scaled rows
    Mat m = {{1, 2, 3}, {2, 4, 6}, {1, 2, 3}, {0, 1, 1}};
    CHECK(matrix_rank(m) == 2);
    CHECK(matrix_rank(Mat{}) == 0);
}
