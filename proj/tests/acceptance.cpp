// Acceptance suite: every check the library promises, run end to end at
// desk scale with exact arithmetic.  One line per criterion.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "specht/repmod.hpp"

using namespace specht;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

int failures = 0;

void report(int criterion, const std::string& what, bool pass, double seconds,
            const std::string& detail = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what
              << "  (" << seconds << " s)";
    if (!pass && !detail.empty()) std::cout << "  -- " << detail;
    std::cout << "\n";
    if (!pass) ++failures;
}

template <typename F>
void timed(int criterion, const std::string& what, F&& f) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        pass = f(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(criterion, what, pass, secs, detail);
}

bool run_verify(WordSystem flavor, int n, int r, const std::string& suite,
                std::string& detail) {
    VerifyReport rep = verify(flavor, n, r, suite);
    for (const auto& c : rep.checks)
        if (!c.pass) {
            detail = "flavor=" + to_string(flavor) + " n=" + std::to_string(n) +
                     " r=" + std::to_string(r) + " " + c.name + ": " + c.witness;
            return false;
        }
    return true;
}

template <typename T>
bool expect(const T& got, const T& want, const std::string& what, std::string& detail) {
    if (got == want) return true;
    detail = what;
    return false;
}

// ----- criterion 1: golden tables from worked examples -----

bool golden_lambda5(std::string& detail) {
    std::vector<Partition> want = {P({1, 1, 1, 1, 1}), P({2, 1, 1, 1}), P({2, 2, 1}),
                                   P({3, 1, 1}),       P({3, 2}),       P({4, 1}),
                                   P({5})};
    return expect(partitions_of(5), want, "Lambda_5 listing", detail);
}

bool golden_specht_table(std::string& detail) {
    SpechtMatrix m = specht_matrix(P({2, 1, 1}));
    std::vector<std::string> want_cols = {"1123", "1132", "1213", "1231", "1312", "1321",
                                          "2113", "2131", "2311", "3112", "3121", "3211"};
    std::vector<std::string> want_rows = {"1112", "1121", "1211", "2111"};
    std::vector<std::string> cols, rows;
    for (const auto& w : m.col_labels()) cols.push_back(to_string(w));
    for (const auto& w : m.row_labels()) rows.push_back(to_string(w));
    if (!expect(cols, want_cols, "column label order", detail)) return false;
    if (!expect(rows, want_rows, "row label order", detail)) return false;
    int want[4][12] = {{0, 0, 0, 1, 0, -1, 0, -1, 1, 0, 1, -1},
                       {0, 0, -1, 0, 1, 0, 1, 0, -1, -1, 0, 1},
                       {1, -1, 0, 0, 0, 0, -1, 1, 0, 1, -1, 0},
                       {-1, 1, 1, -1, -1, 1, 0, 0, 0, 0, 0, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 12; ++j)
            if (m.entry(i, j) != want[i][j]) {
                detail = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
                return false;
            }
    return true;
}

bool golden_syt_list(std::string& detail) {
    auto sp = standard_pairs(P({3, 2}));
    std::vector<std::pair<std::string, std::string>> got;
    for (const auto& p : sp) got.emplace_back(to_string(p.x), to_string(p.y));
    std::vector<std::pair<std::string, std::string>> want = {{"11122", "12312"},
                                                             {"11212", "12132"},
                                                             {"11221", "12123"},
                                                             {"12112", "11232"},
                                                             {"12121", "11223"}};
    return expect(got, want, "ordered standard pairs of (3,2)", detail);
}

bool golden_heart(std::string& detail) {
    HeartData h = heart_submatrix(P({3, 2}));
    std::vector<std::vector<int>> want = {{1, 0, 0, 0, -1},
                                          {0, -1, 0, 0, 0},
                                          {0, 0, 1, 0, 0},
                                          {0, 0, 0, 1, 0},
                                          {0, 0, 0, 0, -1}};
    return expect(h.entries, want, "heart of (3,2)", detail);
}

std::vector<std::vector<long long>> ints_of(const RepMatrix& m) {
    std::vector<std::vector<long long>> out(m.dimension(),
                                            std::vector<long long>(m.dimension()));
    for (int i = 0; i < m.dimension(); ++i)
        for (int j = 0; j < m.dimension(); ++j) out[i][j] = m.entry(i, j).integer_value();
    return out;
}

const std::vector<std::vector<long long>> kSwapMatrix = {{1, 0, 0, -1, -1},
                                                         {0, 1, 0, 1, 0},
                                                         {0, 0, 1, 0, 1},
                                                         {0, 0, 0, -1, 0},
                                                         {0, 0, 0, 0, -1}};
const std::vector<std::vector<long long>> kCycleMatrix = {{0, 1, 0, 0, 0},
                                                          {0, 0, 1, 0, 0},
                                                          {1, 0, -1, -1, -1},
                                                          {0, 0, -1, 0, -1},
                                                          {0, 1, 1, 1, 1}};

bool golden_plain_reps(std::string& detail) {
    auto lam = P({3, 2});
    if (!expect(ints_of(rep_matrix(lam, Permutation::from_cycles(5, {{1, 2}}))), kSwapMatrix,
                "[(1,2)] for (3,2)", detail))
        return false;
    return expect(ints_of(rep_matrix(lam, Permutation::from_cycles(5, {{1, 2, 3, 4, 5}}))),
                  kCycleMatrix, "[(1,2,3,4,5)] for (3,2)", detail);
}

bool golden_mono_reps(std::string& detail) {
    auto lam = MultiPartition({Partition(), P({3, 2}), Partition()});
    auto t1 = MonomialElement::diagonal_generator(5, 3, 1);
    auto c5 = MonomialElement::from_permutation(3, Permutation::from_cycles(5, {{1, 2, 3, 4, 5}}));
    auto w = CycloInt::root_power(3, 1);

    RepMatrix m1 = rep_matrix(lam, t1);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (m1.entry(i, j) != (i == j ? w : CycloInt(3, 0))) {
                detail = "[t1] is not w*I at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                return false;
            }
    RepMatrix m2 = rep_matrix(lam, t1.compose(c5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (m2.entry(i, j) != CycloInt(3, kCycleMatrix[i][j]) * w) {
                detail = "[t1 (1..5)] mismatch at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")";
                return false;
            }
    return true;
}

bool golden_hypo_reps(std::string& detail) {
    auto lam = BiPartition(Partition(), P({3, 2}));
    auto t1 = SignedPermutation::sign_change(5, 1);
    auto c5 = to_signed(
        MonomialElement::from_permutation(2, Permutation::from_cycles(5, {{1, 2, 3, 4, 5}})));

    auto m1 = ints_of(rep_matrix(lam, t1));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (m1[i][j] != (i == j ? -1 : 0)) {
                detail = "[t1] is not -I";
                return false;
            }
    std::vector<std::vector<long long>> want(5, std::vector<long long>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) want[i][j] = -kCycleMatrix[i][j];
    return expect(ints_of(rep_matrix(lam, t1.compose(c5))), want, "[t1 (1..5)] biword", detail);
}

bool golden_bipartition_chain(std::string& detail) {
    std::vector<BiPartition> want = {
        {Partition(), P({1, 1, 1})}, {Partition(), P({2, 1})},      {Partition(), P({3})},
        {P({1}), P({1, 1})},         {P({1}), P({2})},              {P({1, 1}), P({1})},
        {P({2}), P({1})},            {P({1, 1, 1}), Partition()},   {P({2, 1}), Partition()},
        {P({3}), Partition()}};
    return expect(bipartitions_of(3), want, "bipartition order chain at n=3", detail);
}

}  // namespace

int main() {
    timed(1, "golden tables, bit-exact", [](std::string& detail) {
        return golden_lambda5(detail) && golden_specht_table(detail) && golden_syt_list(detail) &&
               golden_heart(detail) && golden_plain_reps(detail) && golden_mono_reps(detail) &&
               golden_hypo_reps(detail) && golden_bipartition_chain(detail);
    });

    timed(2, "dimension identities sum f^2 = group order", [](std::string& detail) {
        for (int n = 1; n <= 6; ++n)
            if (!run_verify(WordSystem::plain, n, 1, "dimension", detail)) return false;
        for (int n = 1; n <= 4; ++n)
            if (!run_verify(WordSystem::rword, n, 2, "dimension", detail)) return false;
        for (int n = 1; n <= 3; ++n)
            if (!run_verify(WordSystem::rword, n, 3, "dimension", detail)) return false;
        for (int n = 1; n <= 2; ++n)
            if (!run_verify(WordSystem::rword, n, 4, "dimension", detail)) return false;
        for (int n = 1; n <= 4; ++n)
            if (!run_verify(WordSystem::biword, n, 2, "dimension", detail)) return false;
        return true;
    });

    timed(3, "homomorphism on generator pairs and 100 seeded random pairs",
          [](std::string& detail) {
              for (int n = 1; n <= 4; ++n)
                  if (!run_verify(WordSystem::plain, n, 1, "homomorphism", detail)) return false;
              for (int n = 1; n <= 3; ++n)
                  for (int r = 1; r <= 3; ++r)
                      if (!run_verify(WordSystem::rword, n, r, "homomorphism", detail))
                          return false;
              for (int n = 1; n <= 3; ++n)
                  if (!run_verify(WordSystem::biword, n, 2, "homomorphism", detail)) return false;
              return true;
          });

    timed(4, "first and second orthogonality by full-group summation",
          [](std::string& detail) {
              return run_verify(WordSystem::plain, 4, 1, "orthogonality", detail) &&
                     run_verify(WordSystem::plain, 5, 1, "orthogonality", detail) &&
                     run_verify(WordSystem::rword, 3, 2, "orthogonality", detail) &&
                     run_verify(WordSystem::rword, 3, 3, "orthogonality", detail) &&
                     run_verify(WordSystem::biword, 3, 2, "orthogonality", detail);
          });

    timed(5, "free components: one free orbit iff eta is the transpose",
          [](std::string& detail) {
              for (int n = 1; n <= 4; ++n) {
                  if (!run_verify(WordSystem::plain, n, 1, "free-orbit", detail)) return false;
                  if (!run_verify(WordSystem::rword, n, 2, "free-orbit", detail)) return false;
                  if (!run_verify(WordSystem::biword, n, 2, "free-orbit", detail)) return false;
              }
              return true;
          });

    timed(6, "rank of the Specht matrix equals f, heart determinant +-1",
          [](std::string& detail) {
              for (int n = 1; n <= 5; ++n)
                  if (!run_verify(WordSystem::plain, n, 1, "rank", detail)) return false;
              for (int n = 1; n <= 3; ++n)
                  for (int r = 2; r <= 3; ++r)
                      if (!run_verify(WordSystem::rword, n, r, "rank", detail)) return false;
              for (int n = 1; n <= 3; ++n)
                  if (!run_verify(WordSystem::biword, n, 2, "rank", detail)) return false;
              return true;
          });

    timed(7, "r = 2 constructions agree as class-function multisets",
          [](std::string& detail) {
              for (int n = 1; n <= 3; ++n)
                  if (!run_verify(WordSystem::rword, n, 2, "cross-r2", detail)) return false;
              return true;
          });

    std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (" << failures
              << " failing criteria)\n";
    return failures == 0 ? 0 : 1;
}
