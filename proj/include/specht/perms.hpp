#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "specht/errors.hpp"
#include "specht/shapes.hpp"

namespace specht {

// A permutation of [n] in one-line notation; images are 1-based and act on
// the right, composed left to right: i.(ab) = (i.a).b.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(images_.size()); }
    int apply(int i) const { return images_[i - 1]; }  // i.sigma
    const std::vector<int>& images() const { return images_; }

    Permutation compose(const Permutation& o) const;
    Permutation inverse() const;
    int sign() const;
    bool is_identity() const;
    // Nontrivial cycles, each starting at its minimum, sorted by that minimum.
    std::vector<std::vector<int>> cycles() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

// An element of the monomial group: a diagonal of r-th roots of unity
// (stored as exponents) followed by a permutation.  Row i of the matrix has
// entry w^(phases[i]) in column i.perm.
class MonomialElement {
public:
    MonomialElement() = default;
    MonomialElement(int r, std::vector<int> phases, Permutation perm);
    static MonomialElement identity(int n, int r);
    static MonomialElement diagonal_generator(int n, int r, int j);  // t_j
    static MonomialElement from_permutation(int r, Permutation perm);

    int size() const { return perm_.size(); }
    int order() const { return r_; }  // r
    int phase(int i) const { return phases_[i - 1]; }
    const std::vector<int>& phases() const { return phases_; }
    const Permutation& permutation() const { return perm_; }

    MonomialElement compose(const MonomialElement& o) const;
    MonomialElement inverse() const;
    bool is_identity() const;

    friend bool operator==(const MonomialElement&, const MonomialElement&) = default;
    friend std::strong_ordering operator<=>(const MonomialElement&,
                                            const MonomialElement&) = default;

private:
    int r_ = 1;
    std::vector<int> phases_;
    Permutation perm_;
};

// A signed permutation: a permutation sigma of +-[n] with (-i).sigma =
// -(i.sigma), stored as the images of [n].
class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> images);
    static SignedPermutation identity(int n);
    static SignedPermutation sign_change(int n, int j);  // t_j

    int size() const { return static_cast<int>(images_.size()); }
    int apply(int i) const {  // i in +-[n]
        return i > 0 ? images_[i - 1] : -images_[-i - 1];
    }
    const std::vector<int>& images() const { return images_; }

    SignedPermutation compose(const SignedPermutation& o) const;
    SignedPermutation inverse() const;
    // Determinant of the corresponding monomial matrix.
    int sign() const;
    bool is_identity() const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend std::strong_ordering operator<=>(const SignedPermutation&,
                                            const SignedPermutation&) = default;

private:
    std::vector<int> images_;
};

MonomialElement to_monomial(const SignedPermutation& s);
SignedPermutation to_signed(const MonomialElement& m);  // requires r == 2

// Cycle type of a monomial element: component k collects the lengths of the
// cycles of the underlying permutation whose phase sum along the cycle is k.
MultiPartition cycle_type(const MonomialElement& m);

unsigned long long group_order(int n, int r);  // r^n * n!

// Visit every element of the group exactly once: permutations in
// lexicographic one-line order, and within each permutation the phase
// vectors in odometer order (rightmost position fastest).
void for_each_element(int n, int r, const std::function<void(const MonomialElement&)>& f,
                      unsigned long long cap = Caps{}.group_cap);
std::vector<MonomialElement> enumerate_group(int n, int r,
                                             unsigned long long cap = Caps{}.group_cap);

struct ConjugacyClass {
    MultiPartition type;
    MonomialElement representative;
    unsigned long long size = 0;
};

// One class per r-partition of n, in the order of multipartitions_of(n, r).
// Representatives are canonical fresh cycles; sizes come from bucketing the
// full enumeration by cycle type.
std::vector<ConjugacyClass> class_representatives(int n, int r,
                                                  unsigned long long cap = Caps{}.group_cap);

// t_1 (when r > 1), the transposition (1,2) and the n-cycle (1,...,n) (when
// n > 1), duplicates removed; the identity for n == 1, r == 1.
std::vector<MonomialElement> standard_generators(int n, int r);

MonomialElement random_element(int n, int r, std::mt19937_64& rng);

// Text form: optional "t<j>^<k>" factors, then cycle notation, e.g.
// "t1^2 (1,2,3)".  Identity permutation part renders as "()".
std::string to_string(const Permutation& p);
std::string to_string(const MonomialElement& m);
std::string to_string(const SignedPermutation& s);

// Accepts t-factors followed by cycle notation "(1,2)(3,4)" or one-line
// notation "[2,1,4,3]"; one-line entries may be negative when r == 2 (signed
// permutation form).
MonomialElement parse_element(const std::string& text, int n, int r);

}  // namespace specht
