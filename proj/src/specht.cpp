#include "specht/specht.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace specht {

namespace {

void check_pair_shape(const Word& x, const Word& y) {
    if (x.system() != y.system() || x.order() != y.order())
        throw std::invalid_argument("pair of words must share a word system");
    if (x.size() != y.size())
        throw std::invalid_argument("pair of words must have equal length");
}

}  // namespace

int pair_compare(const WordPair& a, const WordPair& b) {
    check_pair_shape(a.x, a.y);
    check_pair_shape(b.x, b.y);
    if (a.x.size() != b.x.size()) return a.x.size() < b.x.size() ? -1 : 1;
    for (int i = 1; i <= a.x.size(); ++i) {
        if (int c = letter_compare(a.x.system(), a.x.letter(i), b.x.letter(i))) return c;
        if (int c = letter_compare(a.y.system(), a.y.letter(i), b.y.letter(i))) return c;
    }
    return 0;
}

bool columns_valid(const Word& x, const Word& y) {
    check_pair_shape(x, y);
    switch (x.system()) {
        case WordSystem::plain:
            return true;
        case WordSystem::rword:
            for (int i = 1; i <= x.size(); ++i)
                if (x.letter(i).phase != y.letter(i).phase) return false;
            return true;
        case WordSystem::biword:
            for (int i = 1; i <= x.size(); ++i)
                if ((x.letter(i).phase == 0) == (y.letter(i).phase == 0)) return false;
            return true;
    }
    return false;
}

namespace {

// Joint fiber keys: (phase class, x radius, y radius).  For biwords the
// phase class is the block, 0 for (01) and 1 for (10); signs are dropped,
// which is exactly the +-[n] fiber collision condition.
struct ColumnKey {
    int block, a, b;
    friend auto operator<=>(const ColumnKey&, const ColumnKey&) = default;
};

ColumnKey column_key(const Word& x, const Word& y, int i) {
    const Letter& xa = x.letter(i);
    const Letter& ya = y.letter(i);
    if (x.system() == WordSystem::biword)
        return {xa.phase == 0 ? 0 : 1, xa.radius, ya.radius};
    return {xa.phase, xa.radius, ya.radius};
}

}  // namespace

bool is_free(const Word& x, const Word& y) {
    if (!columns_valid(x, y)) return false;
    std::vector<ColumnKey> keys;
    keys.reserve(x.size());
    for (int i = 1; i <= x.size(); ++i) keys.push_back(column_key(x, y, i));
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

PairDiagram pair_diagram(const Word& x, const Word& y) {
    check_pair_shape(x, y);
    int nblocks = x.system() == WordSystem::plain ? 1
                  : x.system() == WordSystem::biword ? 2
                                                     : x.order();
    PairDiagram d;
    d.blocks.assign(nblocks, {});
    for (int i = 1; i <= x.size(); ++i) {
        ColumnKey k = column_key(x, y, i);
        d.blocks.at(k.block).emplace_back(k.a, k.b);
    }
    for (auto& blk : d.blocks) {
        std::sort(blk.begin(), blk.end());
        blk.erase(std::unique(blk.begin(), blk.end()), blk.end());
    }
    return d;
}

PairDiagram young_pair_diagram(const Partition& p) {
    return PairDiagram{{young_diagram(p)}};
}
PairDiagram young_pair_diagram(const MultiPartition& m) {
    PairDiagram d;
    for (const auto& c : m.components()) d.blocks.push_back(young_diagram(c));
    return d;
}
PairDiagram young_pair_diagram(const BiPartition& b) {
    return PairDiagram{{young_diagram(b.component(0)), young_diagram(b.component(1))}};
}

std::optional<Flattened> try_flatten(const Word& x, const Word& y) {
    if (!columns_valid(x, y)) return std::nullopt;
    int n = x.size();

    // cell -> signed position, one dense grid per block
    int nblocks = x.system() == WordSystem::plain ? 1
                  : x.system() == WordSystem::biword ? 2
                                                     : x.order();
    std::vector<std::vector<int>> grid(nblocks,
                                       std::vector<int>((n + 1) * (n + 1), 0));
    for (int i = 1; i <= n; ++i) {
        ColumnKey k = column_key(x, y, i);
        int& slot = grid[k.block][k.a * (n + 1) + k.b];
        if (slot != 0) return std::nullopt;  // repeated column: stabilizer nontrivial
        int entry = i;
        if (x.system() == WordSystem::biword)
            entry = (k.block == 0 ? y.letter(i).phase : x.letter(i).phase) * i;
        slot = entry;
    }

    // Row shapes of the blocks come from the radius frequencies of x.
    std::vector<std::vector<int>> freq(nblocks, std::vector<int>(n + 1, 0));
    for (int i = 1; i <= n; ++i) {
        const Letter& a = x.letter(i);
        int blk = x.system() == WordSystem::biword ? (a.phase == 0 ? 0 : 1)
                  : x.system() == WordSystem::plain ? 0
                                                    : a.phase;
        freq[blk][a.radius]++;
    }

    Flattened out;
    out.images.reserve(n);
    for (int blk = 0; blk < nblocks; ++blk)
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= freq[blk][a]; ++b) {
                int v = grid[blk][a * (n + 1) + b];
                if (v == 0) return std::nullopt;  // cells do not form the Young diagram
                out.images.push_back(v);
            }

    bool has_negative = std::any_of(out.images.begin(), out.images.end(),
                                    [](int v) { return v < 0; });
    if (x.system() == WordSystem::biword) {
        out.sign = SignedPermutation(out.images).sign();
    } else {
        if (has_negative) throw std::logic_error("flatten produced signs outside biwords");
        out.sign = Permutation(out.images).sign();
    }
    return out;
}

Flattened flatten(const Word& x, const Word& y) {
    auto f = try_flatten(x, y);
    if (!f)
        throw std::invalid_argument("pair <" + to_string(x) + ", " + to_string(y) +
                                    "> is not a free pair of transpose shapes");
    return *f;
}

int specht_entry(const Word& y, const Word& x) {
    auto f = try_flatten(x, y);
    return f ? f->sign : 0;
}

namespace {

// Split the available positions into ordered blocks of the given sizes,
// each block ascending; visits every split once.
void splits_rec(const std::vector<int>& avail, const std::vector<int>& sizes,
                std::size_t k, std::vector<std::vector<int>>& acc,
                const std::function<void(const std::vector<std::vector<int>>&)>& f) {
    if (k == sizes.size()) {
        f(acc);
        return;
    }
    int m = sizes[k];
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    for (;;) {
        std::vector<int> sub(m), rest;
        for (int i = 0, t = 0; i < static_cast<int>(avail.size()); ++i) {
            if (t < m && idx[t] == i)
                sub[t++] = avail[i];
            else
                rest.push_back(avail[i]);
        }
        acc.push_back(std::move(sub));
        splits_rec(rest, sizes, k + 1, acc, f);
        acc.pop_back();
        int t = m - 1;
        while (t >= 0 && idx[t] == static_cast<int>(avail.size()) - m + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int u = t + 1; u < m; ++u) idx[u] = idx[u - 1] + 1;
    }
}

// Convert a tuple of standard tableau patterns, relabelled through the
// position blocks, into the (x, y) words of the pair.
template <typename LetterOfCell>
WordPair pair_from_tableaux(WordSystem sys, int r, int n,
                            const std::vector<TableauRows>& tabs,
                            const std::vector<std::vector<int>>& blocks,
                            LetterOfCell letter_of_cell) {
    std::vector<Letter> xl(n), yl(n);
    for (std::size_t k = 0; k < tabs.size(); ++k) {
        for (std::size_t a = 0; a < tabs[k].size(); ++a)
            for (std::size_t b = 0; b < tabs[k][a].size(); ++b) {
                int pos = blocks[k][tabs[k][a][b] - 1];
                auto [xa, ya] = letter_of_cell(static_cast<int>(k),
                                               static_cast<int>(a) + 1,
                                               static_cast<int>(b) + 1);
                xl[pos - 1] = xa;
                yl[pos - 1] = ya;
            }
    }
    return WordPair{Word(sys, r, std::move(xl)), Word(sys, r, std::move(yl))};
}

void assert_smallest_in_stabilizer_orbit(const WordPair& p) {
    auto check = [&](const Word& w) {
        if (w.system() == WordSystem::biword) {
            for (const auto& g : stabilizer_generators_signed(w)) {
                WordPair q{act(p.x, g), act(p.y, g)};
                if (!(pair_compare(p, q) < 0))
                    throw std::logic_error("standard pair is not minimal in its stabilizer orbit");
            }
        } else {
            for (const auto& g : stabilizer_generators(w)) {
                WordPair q{act(p.x, g), act(p.y, g)};
                if (!(pair_compare(p, q) < 0))
                    throw std::logic_error("standard pair is not minimal in its stabilizer orbit");
            }
        }
    };
    check(p.x);
    check(p.y);
}

std::vector<WordPair> sorted_checked(std::vector<WordPair> pairs) {
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

}  // namespace

std::vector<WordPair> standard_pairs(const Partition& p) {
    std::vector<WordPair> out;
    for (const auto& t : standard_tableaux(p)) {
        std::vector<int> all(p.size());
        for (int i = 0; i < p.size(); ++i) all[i] = i + 1;
        out.push_back(pair_from_tableaux(
            WordSystem::plain, 1, p.size(), {t}, {all},
            [](int, int a, int b) { return std::pair<Letter, Letter>{{a, 0}, {b, 0}}; }));
        assert_smallest_in_stabilizer_orbit(out.back());
    }
    return sorted_checked(std::move(out));
}

namespace {

std::vector<WordPair> standard_pairs_blocked(
    WordSystem sys, int r, int n, const std::vector<Partition>& comps,
    const std::function<std::pair<Letter, Letter>(int, int, int)>& letter_of_cell) {
    std::vector<int> sizes;
    std::vector<std::vector<TableauRows>> tab_choices;
    for (const auto& c : comps) {
        sizes.push_back(c.size());
        tab_choices.push_back(standard_tableaux(c));
    }
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;

    std::vector<WordPair> out;
    std::vector<std::vector<int>> acc;
    splits_rec(all, sizes, 0, acc, [&](const std::vector<std::vector<int>>& blocks) {
        std::vector<std::size_t> idx(comps.size(), 0);
        for (;;) {
            std::vector<TableauRows> tabs(comps.size());
            for (std::size_t k = 0; k < comps.size(); ++k) tabs[k] = tab_choices[k][idx[k]];
            out.push_back(pair_from_tableaux(sys, r, n, tabs, blocks, letter_of_cell));
            int k = static_cast<int>(comps.size()) - 1;
            while (k >= 0 && ++idx[k] == tab_choices[k].size()) idx[k--] = 0;
            if (k < 0) break;
        }
    });
    return out;
}

}  // namespace

std::vector<WordPair> standard_pairs(const MultiPartition& m) {
    auto out = standard_pairs_blocked(
        WordSystem::rword, m.rank(), m.size(), m.components(),
        [](int k, int a, int b) { return std::pair<Letter, Letter>{{a, k}, {b, k}}; });
    for (const auto& q : out) assert_smallest_in_stabilizer_orbit(q);
    return sorted_checked(std::move(out));
}

std::vector<WordPair> standard_pairs(const BiPartition& b) {
    auto out = standard_pairs_blocked(
        WordSystem::biword, 2, b.size(), {b.component(0), b.component(1)},
        [](int k, int a, int bb) {
            return k == 0 ? std::pair<Letter, Letter>{{a, 0}, {bb, 1}}
                          : std::pair<Letter, Letter>{{a, 1}, {bb, 0}};
        });
    for (const auto& q : out) assert_smallest_in_stabilizer_orbit(q);
    return sorted_checked(std::move(out));
}

namespace {

HeartData heart_from_pairs(const std::vector<WordPair>& pairs) {
    HeartData h;
    for (const auto& p : pairs) {
        h.col_labels.push_back(p.x);
        h.row_labels.push_back(p.y);
    }
    int f = static_cast<int>(pairs.size());
    h.entries.assign(f, std::vector<int>(f, 0));
    for (int i = 0; i < f; ++i)
        for (int j = 0; j < f; ++j) {
            int e = specht_entry(h.row_labels[i], h.col_labels[j]);
            if (i == j && e != 1 && e != -1)
                throw std::logic_error("heart submatrix has a non-unit diagonal entry");
            if (i > j && e != 0)
                throw std::logic_error("heart submatrix is not upper triangular");
            h.entries[i][j] = e;
        }
    return h;
}

}  // namespace

HeartData heart_submatrix(const Partition& p) { return heart_from_pairs(standard_pairs(p)); }
HeartData heart_submatrix(const MultiPartition& m) { return heart_from_pairs(standard_pairs(m)); }
HeartData heart_submatrix(const BiPartition& b) { return heart_from_pairs(standard_pairs(b)); }

std::vector<std::vector<int>> specht_rows(const std::vector<Word>& row_labels,
                                          const std::vector<Word>& col_labels) {
    std::vector<std::vector<int>> rows;
    rows.reserve(row_labels.size());
    for (const auto& y : row_labels) {
        std::vector<int> row(col_labels.size());
        for (std::size_t j = 0; j < col_labels.size(); ++j)
            row[j] = specht_entry(y, col_labels[j]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::vector<int>> specht_rows(const Partition& p,
                                          const std::vector<Word>& row_labels,
                                          unsigned long long cap) {
    return specht_rows(row_labels, orbit(p, cap));
}
std::vector<std::vector<int>> specht_rows(const MultiPartition& m,
                                          const std::vector<Word>& row_labels,
                                          unsigned long long cap) {
    return specht_rows(row_labels, orbit(m, cap));
}
std::vector<std::vector<int>> specht_rows(const BiPartition& b,
                                          const std::vector<Word>& row_labels,
                                          unsigned long long cap) {
    return specht_rows(row_labels, orbit(b, cap));
}

SpechtMatrix::SpechtMatrix(std::vector<Word> row_labels, std::vector<Word> col_labels,
                           unsigned long long matrix_cap)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
    unsigned long long total =
        static_cast<unsigned long long>(row_labels_.size()) * col_labels_.size();
    if (total > matrix_cap) throw CapExceeded("Specht matrix entries", total, matrix_cap);
    stride_ = (col_labels_.size() + 3) / 4;
    packed_.assign(row_labels_.size() * stride_, 0);
    for (std::size_t i = 0; i < row_labels_.size(); ++i)
        for (std::size_t j = 0; j < col_labels_.size(); ++j) {
            int e = specht_entry(row_labels_[i], col_labels_[j]);
            std::uint8_t code = e == 0 ? 0 : (e == 1 ? 1 : 2);
            packed_[i * stride_ + j / 4] |= static_cast<std::uint8_t>(code << (2 * (j % 4)));
        }
}

SpechtMatrix specht_matrix(const Partition& p, const Caps& caps) {
    return SpechtMatrix(orbit(p.transpose(), caps.orbit_cap), orbit(p, caps.orbit_cap),
                        caps.matrix_cap);
}
SpechtMatrix specht_matrix(const MultiPartition& m, const Caps& caps) {
    return SpechtMatrix(orbit(m.transpose(), caps.orbit_cap), orbit(m, caps.orbit_cap),
                        caps.matrix_cap);
}
SpechtMatrix specht_matrix(const BiPartition& b, const Caps& caps) {
    return SpechtMatrix(orbit(b.transpose(), caps.orbit_cap), orbit(b, caps.orbit_cap),
                        caps.matrix_cap);
}

}  // namespace specht
