#pragma once

#include <compare>
#include <string>
#include <vector>

#include "specht/errors.hpp"
#include "specht/perms.hpp"
#include "specht/shapes.hpp"

namespace specht {

enum class WordSystem { plain, rword, biword };

std::string to_string(WordSystem sys);
WordSystem parse_word_system(const std::string& text);

// A letter: a radius in [n] and a phase.  Plain letters have phase 0,
// r-word letters an exponent in [0, r), biword letters a value in
// {-1, 0, +1}.
struct Letter {
    int radius = 0;
    int phase = 0;
    friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter bar(Letter a) { return {a.radius, -a.phase}; }

// The letter orders the constructions depend on: plain by radius; r-words
// first by phase then by radius; biwords by radius with 0 < +1 < -1.
int letter_compare(WordSystem sys, const Letter& a, const Letter& b);

class Word {
public:
    Word() = default;
    Word(WordSystem sys, int r, std::vector<Letter> letters);

    WordSystem system() const { return sys_; }
    int order() const { return r_; }  // r (plain: 1, biword: 2)
    int size() const { return static_cast<int>(letters_.size()); }
    const Letter& letter(int i) const { return letters_[i - 1]; }  // 1-based
    // Letter seen from a signed position (biword view of +-[n]).
    Letter letter_signed(int i) const {
        return i > 0 ? letters_[i - 1] : bar(letters_[-i - 1]);
    }
    const std::vector<Letter>& letters() const { return letters_; }

    friend bool operator==(const Word&, const Word&) = default;

private:
    WordSystem sys_ = WordSystem::plain;
    int r_ = 1;
    std::vector<Letter> letters_;
};

int word_compare(const Word& a, const Word& b);
inline bool operator<(const Word& a, const Word& b) { return word_compare(a, b) < 0; }

Word canonical_word(const Partition& p);
Word canonical_word(const MultiPartition& m);
Word canonical_word(const BiPartition& b);

unsigned long long orbit_size(const Partition& p);
unsigned long long orbit_size(const MultiPartition& m);
unsigned long long orbit_size(const BiPartition& b);

// All distinct words in the orbit of the canonical word, sorted ascending
// by the system's letter order.
std::vector<Word> orbit(const Partition& p, unsigned long long cap = Caps{}.orbit_cap);
std::vector<Word> orbit(const MultiPartition& m, unsigned long long cap = Caps{}.orbit_cap);
std::vector<Word> orbit(const BiPartition& b, unsigned long long cap = Caps{}.orbit_cap);

// Right actions by place permutation: the letter at position i of the
// result is the letter at i.sigma^{-1} of the input.
Word act(const Word& w, const Permutation& sigma);        // plain / rword
Word act(const Word& w, const SignedPermutation& sigma);  // biword

Partition shape_of_plain(const Word& w);
MultiPartition shape_of_rword(const Word& w);
BiPartition shape_of_biword(const Word& w);

// A fiber of the inverse image map: the positions carrying a letter.
// Positions are in [n]; for biwords they are signed, phase-0 fibers closed
// under negation and phase-(+1) fibers carrying the sign that maps the
// position to the letter.  Phase-(-1) fibers are bars of phase-(+1) ones
// and are not listed.
struct Fiber {
    Letter letter;
    std::vector<int> positions;
};
std::vector<Fiber> inverse_image(const Word& w);

unsigned long long stabilizer_order(const Word& w);

// Generators of the stabilizer of w in the acting group: adjacent
// transpositions inside each fiber, plus (for biwords) a sign change per
// phase-0 fiber and sign-twisted swaps inside phase-+- fibers.
std::vector<Permutation> stabilizer_generators(const Word& w);
std::vector<SignedPermutation> stabilizer_generators_signed(const Word& w);

// Text forms: plain "1123" (comma-separated beyond 9 letters); r-words
// "1,2w1,w2" with a "w<k>" suffix for nonzero phase and the radius omitted
// when it is 1; biwords "1,2°,-3" with ° marking phase 0 and a sign marking
// phase +-1.
std::string to_string(const Word& w);
Word parse_word(WordSystem sys, int r, const std::string& text);

}  // namespace specht
