#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specht/errors.hpp"
#include "specht/shapes.hpp"
#include "specht/words.hpp"

namespace specht {

// A pair of words of the same length, read as a word of column pairs
// <x_i, y_i>.  The r-word pairs require equal phases on corresponding
// letters and biword pairs unlike phases (one 0, the other not).
struct WordPair {
    Word x, y;
};

// Lexicographic order on pairs-as-words over the column alphabet, columns
// compared by x-letter then y-letter in the system's letter order.
int pair_compare(const WordPair& a, const WordPair& b);
inline bool operator<(const WordPair& a, const WordPair& b) {
    return pair_compare(a, b) < 0;
}
inline bool operator==(const WordPair& a, const WordPair& b) {
    return a.x == b.x && a.y == b.y;
}

// Columnwise pair constraint of the word system.
bool columns_valid(const Word& x, const Word& y);

// A pair is free when every joint fiber has at most one element.  For
// biwords the fibers live in +-[n], per block (01) and (10), so a column
// colliding with the bar of another column also breaks freeness.
bool is_free(const Word& x, const Word& y);

// The set of letter-pair columns that occur, as diagram cells, one block
// per phase class: plain 1 block, r-words r blocks, biwords the (01) and
// (10) blocks.
struct PairDiagram {
    std::vector<std::vector<Cell>> blocks;
    friend bool operator==(const PairDiagram&, const PairDiagram&) = default;
};
PairDiagram pair_diagram(const Word& x, const Word& y);
PairDiagram young_pair_diagram(const Partition& p);
PairDiagram young_pair_diagram(const MultiPartition& m);
PairDiagram young_pair_diagram(const BiPartition& b);

// The flattening of the tableau of a free pair: rows read left to right,
// top to bottom, components in order (phase k ascending; block (01) before
// (10) for biwords).  Images are in +-[n]; plain and r-word pairs give a
// plain permutation.
struct Flattened {
    std::vector<int> images;
    int sign = 1;
};
std::optional<Flattened> try_flatten(const Word& x, const Word& y);
Flattened flatten(const Word& x, const Word& y);  // throws on invalid pairs

// The Specht matrix entry m_{yx}: the flatten sign on free pairs, else 0.
int specht_entry(const Word& y, const Word& x);

// All standard pairs of shape lambda in ascending pair order.  Their
// tableaux are exactly the standard (multi/bi)tableaux of the shape.
std::vector<WordPair> standard_pairs(const Partition& p);
std::vector<WordPair> standard_pairs(const MultiPartition& m);
std::vector<WordPair> standard_pairs(const BiPartition& b);

// The heart submatrix: rows and columns restricted to the projections of
// the standard pairs, each inheriting the standard-pair order.  Up to
// signs upper unitriangular; construction asserts that.
struct HeartData {
    std::vector<Word> row_labels;               // y projections
    std::vector<Word> col_labels;               // x projections
    std::vector<std::vector<int>> entries;      // f x f over {0, +-1}
    int dimension() const { return static_cast<int>(entries.size()); }
};
HeartData heart_submatrix(const Partition& p);
HeartData heart_submatrix(const MultiPartition& m);
HeartData heart_submatrix(const BiPartition& b);

// Dense Specht matrix rows for a chosen subset of row labels, over the
// ordered orbit of the shape as columns.
std::vector<std::vector<int>> specht_rows(const std::vector<Word>& row_labels,
                                          const std::vector<Word>& col_labels);
std::vector<std::vector<int>> specht_rows(const Partition& p,
                                          const std::vector<Word>& row_labels,
                                          unsigned long long cap = Caps{}.orbit_cap);
std::vector<std::vector<int>> specht_rows(const MultiPartition& m,
                                          const std::vector<Word>& row_labels,
                                          unsigned long long cap = Caps{}.orbit_cap);
std::vector<std::vector<int>> specht_rows(const BiPartition& b,
                                          const std::vector<Word>& row_labels,
                                          unsigned long long cap = Caps{}.orbit_cap);

// The full Specht matrix, rows X_{lambda^t} by columns X_lambda, entries
// packed two bits each.
class SpechtMatrix {
public:
    SpechtMatrix(std::vector<Word> row_labels, std::vector<Word> col_labels,
                 unsigned long long matrix_cap = Caps{}.matrix_cap);

    int rows() const { return static_cast<int>(row_labels_.size()); }
    int cols() const { return static_cast<int>(col_labels_.size()); }
    int entry(int i, int j) const {  // 0-based
        auto code = (packed_[static_cast<std::size_t>(i) * stride_ + j / 4] >> (2 * (j % 4))) & 3u;
        return code == 0 ? 0 : (code == 1 ? 1 : -1);
    }
    const std::vector<Word>& row_labels() const { return row_labels_; }
    const std::vector<Word>& col_labels() const { return col_labels_; }

private:
    std::vector<Word> row_labels_, col_labels_;
    std::size_t stride_;
    std::vector<std::uint8_t> packed_;
};

SpechtMatrix specht_matrix(const Partition& p, const Caps& caps = {});
SpechtMatrix specht_matrix(const MultiPartition& m, const Caps& caps = {});
SpechtMatrix specht_matrix(const BiPartition& b, const Caps& caps = {});

}  // namespace specht
