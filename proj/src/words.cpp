#include "specht/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace specht {

std::string to_string(WordSystem sys) {
    switch (sys) {
        case WordSystem::plain: return "plain";
        case WordSystem::rword: return "rword";
        case WordSystem::biword: return "biword";
    }
    throw std::logic_error("bad word system");
}

WordSystem parse_word_system(const std::string& text) {
    if (text == "plain") return WordSystem::plain;
    if (text == "rword") return WordSystem::rword;
    if (text == "biword") return WordSystem::biword;
    throw std::invalid_argument("unknown flavor: " + text);
}

int letter_compare(WordSystem sys, const Letter& a, const Letter& b) {
    auto cmp = [](int x, int y) { return x < y ? -1 : (x > y ? 1 : 0); };
    switch (sys) {
        case WordSystem::plain:
            return cmp(a.radius, b.radius);
        case WordSystem::rword:
            if (int c = cmp(a.phase, b.phase)) return c;
            return cmp(a.radius, b.radius);
        case WordSystem::biword: {
            if (int c = cmp(a.radius, b.radius)) return c;
            auto rank = [](int phase) { return phase == 0 ? 0 : (phase > 0 ? 1 : 2); };
            return cmp(rank(a.phase), rank(b.phase));
        }
    }
    throw std::logic_error("bad word system");
}

Word::Word(WordSystem sys, int r, std::vector<Letter> letters)
    : sys_(sys), r_(r), letters_(std::move(letters)) {
    if (sys_ == WordSystem::plain && r_ != 1)
        throw std::invalid_argument("plain words have r == 1");
    if (sys_ == WordSystem::biword && r_ != 2)
        throw std::invalid_argument("biwords have r == 2");
    if (r_ < 1) throw std::invalid_argument("word order must be >= 1");
    for (const auto& a : letters_) {
        if (a.radius < 1 || a.radius > static_cast<int>(letters_.size()))
            throw std::invalid_argument("letter radius must lie in [n]");
        bool ok = sys_ == WordSystem::biword
                      ? (a.phase >= -1 && a.phase <= 1)
                      : (a.phase >= 0 && a.phase < r_);
        if (!ok) throw std::invalid_argument("letter phase out of range");
    }
}

int word_compare(const Word& a, const Word& b) {
    if (a.system() != b.system())
        return static_cast<int>(a.system()) < static_cast<int>(b.system()) ? -1 : 1;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (int i = 1; i <= a.size(); ++i)
        if (int c = letter_compare(a.system(), a.letter(i), b.letter(i))) return c;
    return 0;
}

Word canonical_word(const Partition& p) {
    std::vector<Letter> letters;
    letters.reserve(p.size());
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j) letters.push_back({i, 0});
    return Word(WordSystem::plain, 1, std::move(letters));
}

Word canonical_word(const MultiPartition& m) {
    std::vector<Letter> letters;
    letters.reserve(m.size());
    for (int k = 0; k < m.rank(); ++k) {
        const Partition& c = m.component(k);
        for (int i = 1; i <= c.length(); ++i)
            for (int j = 0; j < c.part(i); ++j) letters.push_back({i, k});
    }
    return Word(WordSystem::rword, m.rank(), std::move(letters));
}

Word canonical_word(const BiPartition& b) {
    std::vector<Letter> letters;
    letters.reserve(b.size());
    for (int k = 0; k < 2; ++k) {
        const Partition& c = b.component(k);
        for (int i = 1; i <= c.length(); ++i)
            for (int j = 0; j < c.part(i); ++j) letters.push_back({i, k});
    }
    return Word(WordSystem::biword, 2, std::move(letters));
}

unsigned long long orbit_size(const Partition& p) {
    unsigned long long v = static_cast<unsigned long long>(factorial(p.size()));
    for (int part : p.parts()) v /= static_cast<unsigned long long>(factorial(part));
    return v;
}

unsigned long long orbit_size(const MultiPartition& m) {
    unsigned long long v = static_cast<unsigned long long>(factorial(m.size()));
    for (const auto& c : m.components())
        for (int part : c.parts()) v /= static_cast<unsigned long long>(factorial(part));
    return v;
}

unsigned long long orbit_size(const BiPartition& b) {
    unsigned long long v = orbit_size(b.as_multipartition());
    for (int i = 0; i < b.component(1).size(); ++i) v *= 2;
    return v;
}

namespace {

std::vector<Word> rearrangements(const Word& canon, unsigned long long expected,
                                 unsigned long long cap, const char* what) {
    if (expected > cap) throw CapExceeded(what, expected, cap);
    auto less = [&](const Letter& a, const Letter& b) {
        return letter_compare(canon.system(), a, b) < 0;
    };
    std::vector<Letter> letters = canon.letters();
    std::sort(letters.begin(), letters.end(), less);
    std::vector<Word> out;
    do {
        out.emplace_back(canon.system(), canon.order(), letters);
    } while (std::next_permutation(letters.begin(), letters.end(), less));
    return out;
}

}  // namespace

std::vector<Word> orbit(const Partition& p, unsigned long long cap) {
    return rearrangements(canonical_word(p), orbit_size(p), cap, "plain word orbit");
}

std::vector<Word> orbit(const MultiPartition& m, unsigned long long cap) {
    return rearrangements(canonical_word(m), orbit_size(m), cap, "r-word orbit");
}

std::vector<Word> orbit(const BiPartition& b, unsigned long long cap) {
    unsigned long long expected = orbit_size(b);
    if (expected > cap) throw CapExceeded("biword orbit", expected, cap);
    auto arrangements = rearrangements(canonical_word(b),
                                       orbit_size(b.as_multipartition()), cap, "biword orbit");
    std::vector<Word> out;
    out.reserve(expected);
    for (const auto& arr : arrangements) {
        std::vector<int> signed_positions;
        for (int i = 1; i <= arr.size(); ++i)
            if (arr.letter(i).phase != 0) signed_positions.push_back(i);
        std::vector<int> signs(signed_positions.size(), 1);
        for (;;) {
            std::vector<Letter> letters = arr.letters();
            for (std::size_t t = 0; t < signed_positions.size(); ++t)
                letters[signed_positions[t] - 1].phase = signs[t];
            out.emplace_back(WordSystem::biword, 2, std::move(letters));
            int k = static_cast<int>(signs.size()) - 1;
            while (k >= 0 && signs[k] == -1) signs[k--] = 1;
            if (k < 0) break;
            signs[k] = -1;
        }
    }
    std::sort(out.begin(), out.end());
    if (out.size() != expected) throw std::logic_error("biword orbit size mismatch");
    return out;
}

Word act(const Word& w, const Permutation& sigma) {
    if (w.system() == WordSystem::biword)
        throw std::invalid_argument("biwords act under signed permutations");
    if (w.size() != sigma.size())
        throw std::invalid_argument("word/permutation size mismatch");
    std::vector<Letter> letters(w.size());
    for (int i = 1; i <= w.size(); ++i) letters[sigma.apply(i) - 1] = w.letter(i);
    return Word(w.system(), w.order(), std::move(letters));
}

Word act(const Word& w, const SignedPermutation& sigma) {
    if (w.system() != WordSystem::biword)
        throw std::invalid_argument("only biwords act under signed permutations");
    if (w.size() != sigma.size())
        throw std::invalid_argument("word/permutation size mismatch");
    std::vector<Letter> letters(w.size());
    for (int i = 1; i <= w.size(); ++i) {
        int j = sigma.apply(i);
        letters[std::abs(j) - 1] = j > 0 ? w.letter(i) : bar(w.letter(i));
    }
    return Word(WordSystem::biword, 2, std::move(letters));
}

namespace {

Partition freq_partition(std::vector<int> counts) {
    std::vector<int> parts;
    for (int c : counts)
        if (c > 0) parts.push_back(c);
    std::sort(parts.rbegin(), parts.rend());
    return parts.empty() ? Partition() : Partition(std::move(parts));
}

}  // namespace

Partition shape_of_plain(const Word& w) {
    std::vector<int> counts(w.size() + 1, 0);
    for (const auto& a : w.letters()) counts.at(a.radius)++;
    return freq_partition(std::move(counts));
}

MultiPartition shape_of_rword(const Word& w) {
    int r = w.order();
    std::vector<std::vector<int>> counts(r, std::vector<int>(w.size() + 1, 0));
    for (const auto& a : w.letters()) counts[a.phase].at(a.radius)++;
    std::vector<Partition> comps(r);
    for (int k = 0; k < r; ++k) comps[k] = freq_partition(counts[k]);
    return MultiPartition(std::move(comps));
}

BiPartition shape_of_biword(const Word& w) {
    std::vector<std::vector<int>> counts(2, std::vector<int>(w.size() + 1, 0));
    for (const auto& a : w.letters()) counts[a.phase == 0 ? 0 : 1].at(a.radius)++;
    return BiPartition(freq_partition(counts[0]), freq_partition(counts[1]));
}

std::vector<Fiber> inverse_image(const Word& w) {
    std::vector<Fiber> out;
    auto find = [&](Letter key) -> Fiber& {
        for (auto& f : out)
            if (f.letter == key) return f;
        out.push_back({key, {}});
        return out.back();
    };
    for (int i = 1; i <= w.size(); ++i) {
        Letter a = w.letter(i);
        if (w.system() == WordSystem::biword) {
            if (a.phase == 0) {
                auto& f = find(a);
                f.positions.push_back(i);
                f.positions.push_back(-i);
            } else {
                // listed under the phase-(+1) letter with the matching sign
                find({a.radius, 1}).positions.push_back(a.phase > 0 ? i : -i);
            }
        } else {
            find(a).positions.push_back(i);
        }
    }
    std::sort(out.begin(), out.end(), [&](const Fiber& f, const Fiber& g) {
        return letter_compare(w.system(), f.letter, g.letter) < 0;
    });
    for (auto& f : out)
        std::sort(f.positions.begin(), f.positions.end(), [](int a, int b) {
            if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
            return a > b;
        });
    return out;
}

unsigned long long stabilizer_order(const Word& w) {
    unsigned long long v = 1;
    for (const auto& f : inverse_image(w)) {
        auto m = static_cast<int>(f.positions.size());
        if (w.system() == WordSystem::biword && f.letter.phase == 0) {
            m /= 2;  // fibers of phase-0 letters list both signs
            v *= static_cast<unsigned long long>(factorial(m));
            for (int i = 0; i < m; ++i) v *= 2;
        } else {
            v *= static_cast<unsigned long long>(factorial(m));
        }
    }
    return v;
}

std::vector<Permutation> stabilizer_generators(const Word& w) {
    if (w.system() == WordSystem::biword)
        throw std::invalid_argument("use stabilizer_generators_signed for biwords");
    std::vector<Permutation> gens;
    for (const auto& f : inverse_image(w))
        for (std::size_t t = 0; t + 1 < f.positions.size(); ++t)
            gens.push_back(Permutation::from_cycles(
                w.size(), {{f.positions[t], f.positions[t + 1]}}));
    return gens;
}

std::vector<SignedPermutation> stabilizer_generators_signed(const Word& w) {
    if (w.system() != WordSystem::biword)
        throw std::invalid_argument("stabilizer_generators_signed needs a biword");
    std::vector<SignedPermutation> gens;
    int n = w.size();
    for (const auto& f : inverse_image(w)) {
        if (f.letter.phase == 0) {
            std::vector<int> pos;
            for (int p : f.positions)
                if (p > 0) pos.push_back(p);
            for (std::size_t t = 0; t + 1 < pos.size(); ++t) {
                auto s = SignedPermutation::identity(n).images();
                s[pos[t] - 1] = pos[t + 1];
                s[pos[t + 1] - 1] = pos[t];
                gens.emplace_back(std::move(s));
            }
            if (!pos.empty()) gens.push_back(SignedPermutation::sign_change(n, pos[0]));
        } else {
            // signed fiber: swap u, v moves the letter along with its sign
            for (std::size_t t = 0; t + 1 < f.positions.size(); ++t) {
                int u = f.positions[t], v = f.positions[t + 1];
                auto s = SignedPermutation::identity(n).images();
                int tw = (u > 0) == (v > 0) ? 1 : -1;
                s[std::abs(u) - 1] = tw * std::abs(v);
                s[std::abs(v) - 1] = tw * std::abs(u);
                gens.emplace_back(std::move(s));
            }
        }
    }
    return gens;
}

std::string to_string(const Word& w) {
    std::string s;
    switch (w.system()) {
        case WordSystem::plain: {
            bool digits = w.size() <= 9;
            for (int i = 1; i <= w.size(); ++i) {
                if (!digits && i > 1) s += ',';
                s += std::to_string(w.letter(i).radius);
            }
            return s;
        }
        case WordSystem::rword: {
            for (int i = 1; i <= w.size(); ++i) {
                if (i > 1) s += ',';
                const Letter& a = w.letter(i);
                if (a.phase == 0) {
                    s += std::to_string(a.radius);
                } else {
                    if (a.radius != 1) s += std::to_string(a.radius);
                    s += "w" + std::to_string(a.phase);
                }
            }
            return s;
        }
        case WordSystem::biword: {
            for (int i = 1; i <= w.size(); ++i) {
                if (i > 1) s += ',';
                const Letter& a = w.letter(i);
                if (a.phase < 0) s += '-';
                s += std::to_string(a.radius);
                if (a.phase == 0) s += "°";
            }
            return s;
        }
    }
    throw std::logic_error("bad word system");
}

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Word parse_word(WordSystem sys, int r, const std::string& text) {
    std::vector<Letter> letters;
    if (text.empty())
        return Word(sys, sys == WordSystem::plain ? 1 : (sys == WordSystem::biword ? 2 : r),
                    {});
    if (sys == WordSystem::plain && text.find(',') == std::string::npos) {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("bad plain word: " + text);
            letters.push_back({ch - '0', 0});
        }
        return Word(sys, 1, std::move(letters));
    }
    for (const auto& tokraw : split_commas(text)) {
        std::string tok = tokraw;
        if (tok.empty()) throw std::invalid_argument("empty letter in word: " + text);
        Letter a{0, 0};
        switch (sys) {
            case WordSystem::plain:
                a.radius = std::stoi(tok);
                break;
            case WordSystem::rword: {
                auto wpos = tok.find('w');
                if (wpos == std::string::npos) {
                    a.radius = std::stoi(tok);
                } else {
                    a.radius = wpos == 0 ? 1 : std::stoi(tok.substr(0, wpos));
                    a.phase = std::stoi(tok.substr(wpos + 1));
                }
                break;
            }
            case WordSystem::biword: {
                int sign = 1;
                if (tok[0] == '-') {
                    sign = -1;
                    tok = tok.substr(1);
                }
                bool zero_phase = false;
                if (tok.size() >= 2 && tok.substr(tok.size() - 2) == "°") {
                    zero_phase = true;
                    tok = tok.substr(0, tok.size() - 2);
                }
                a.radius = std::stoi(tok);
                a.phase = zero_phase ? 0 : sign;
                if (zero_phase && sign < 0)
                    throw std::invalid_argument("phase-0 letters carry no sign: " + text);
                break;
            }
        }
        letters.push_back(a);
    }
    return Word(sys, sys == WordSystem::plain ? 1 : (sys == WordSystem::biword ? 2 : r),
                std::move(letters));
}

}  // namespace specht
