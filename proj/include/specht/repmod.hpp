#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "specht/cyclo.hpp"
#include "specht/errors.hpp"
#include "specht/perms.hpp"
#include "specht/shapes.hpp"
#include "specht/specht.hpp"
#include "specht/words.hpp"

namespace specht {

// The action of a group element on a permutation-module basis word:
// x.sigma = w^omega_exponent * target.
struct ColumnAction {
    Word target;
    int omega_exponent = 0;
};
ColumnAction column_action(const Word& x, const Permutation& sigma);
ColumnAction column_action(const Word& x, const MonomialElement& sigma);
ColumnAction column_action(const Word& x, const SignedPermutation& sigma);

// A representing matrix in the standard-pair basis; entries are cyclotomic
// integers (rational integers for the plain and biword systems).
class RepMatrix {
public:
    RepMatrix(int scalar_order, std::vector<std::vector<CycloInt>> entries);
    static RepMatrix identity(int scalar_order, int dim);

    int dimension() const { return static_cast<int>(entries_.size()); }
    int scalar_order() const { return r_; }
    const CycloInt& entry(int i, int j) const { return entries_[i][j]; }  // 0-based
    const std::vector<std::vector<CycloInt>>& entries() const { return entries_; }

    CycloInt trace() const;
    bool is_identity() const;
    RepMatrix multiply(const RepMatrix& o) const;

    friend bool operator==(const RepMatrix&, const RepMatrix&) = default;

private:
    int r_;
    std::vector<std::vector<CycloInt>> entries_;
};

// Evaluates [sigma]_B = (M_lambda [sigma]_X)^heart (M^heart)^{-1} without
// materializing M_lambda: each heart column is pulled back through
// sigma^{-1} and resolved by single Specht entries; the solve is a
// back-substitution against the up-to-sign unitriangular heart.
class RepBuilder {
public:
    explicit RepBuilder(const Partition& shape);
    explicit RepBuilder(const MultiPartition& shape);
    explicit RepBuilder(const BiPartition& shape);

    WordSystem system() const { return sys_; }
    int scalar_order() const { return entry_r_; }
    int dimension() const { return heart_.dimension(); }
    int word_length() const { return n_; }
    const HeartData& heart() const { return heart_; }

    RepMatrix matrix(const Permutation& sigma) const;
    RepMatrix matrix(const MonomialElement& sigma) const;
    RepMatrix matrix(const SignedPermutation& sigma) const;

private:
    WordSystem sys_;
    int n_;
    int entry_r_;
    HeartData heart_;

    RepMatrix solve(const std::vector<std::vector<CycloInt>>& numerator) const;
};

RepMatrix rep_matrix(const Partition& shape, const Permutation& sigma);
RepMatrix rep_matrix(const MultiPartition& shape, const MonomialElement& sigma);
RepMatrix rep_matrix(const BiPartition& shape, const SignedPermutation& sigma);

CycloInt character(const Partition& shape, const Permutation& sigma);
CycloInt character(const MultiPartition& shape, const MonomialElement& sigma);
CycloInt character(const BiPartition& shape, const SignedPermutation& sigma);

struct CharacterTable {
    WordSystem flavor = WordSystem::plain;
    int n = 0;
    int r = 1;
    std::vector<std::string> shapes;            // text labels in the documented order
    std::vector<ConjugacyClass> classes;
    std::vector<std::vector<CycloInt>> values;  // [shape][class]
};
CharacterTable character_table(int n, int r, WordSystem flavor, const Caps& caps = {});

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string witness;  // minimal failure context, empty on pass
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    int failures() const;
};

// Suites: homomorphism | dimension | orthogonality | triangular |
// free-orbit | rank | cross-r2 | all.
VerifyReport verify(WordSystem flavor, int n, int r, const std::string& suite,
                    std::uint64_t seed = 1, const Caps& caps = {});

const std::vector<std::string>& verify_suite_names();

}  // namespace specht
