#include "specht/perms.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace specht {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
            throw std::invalid_argument("one-line notation is not a bijection of [n]");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (from < 1 || from > n)
                throw std::invalid_argument("cycle entry out of range");
            img[from - 1] = to;
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& o) const {
    if (size() != o.size())
        throw std::invalid_argument("permutation size mismatch in composition");
    std::vector<int> img(size());
    for (int i = 0; i < size(); ++i) img[i] = o.images_[images_[i] - 1];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(size());
    for (int i = 0; i < size(); ++i) img[images_[i] - 1] = i + 1;
    return Permutation(std::move(img));
}

int Permutation::sign() const {
    std::vector<bool> seen(size(), false);
    int s = 1;
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        int j = i, len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = images_[j] - 1;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (images_[i] != i + 1) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(size(), false);
    for (int i = 0; i < size(); ++i) {
        if (seen[i] || images_[i] == i + 1) {
            seen[i] = true;
            continue;
        }
        std::vector<int> cyc;
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            cyc.push_back(j + 1);
            j = images_[j] - 1;
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

MonomialElement::MonomialElement(int r, std::vector<int> phases, Permutation perm)
    : r_(r), phases_(std::move(phases)), perm_(std::move(perm)) {
    if (r_ < 1) throw std::invalid_argument("monomial order r must be >= 1");
    if (static_cast<int>(phases_.size()) != perm_.size())
        throw std::invalid_argument("phase vector length must equal n");
    for (int k : phases_)
        if (k < 0 || k >= r_)
            throw std::invalid_argument("phase exponent out of range [0, r)");
}

MonomialElement MonomialElement::identity(int n, int r) {
    return MonomialElement(r, std::vector<int>(n, 0), Permutation::identity(n));
}

MonomialElement MonomialElement::diagonal_generator(int n, int r, int j) {
    if (j < 1 || j > n) throw std::invalid_argument("t_j index out of range");
    std::vector<int> ph(n, 0);
    ph[j - 1] = 1 % r;
    return MonomialElement(r, std::move(ph), Permutation::identity(n));
}

MonomialElement MonomialElement::from_permutation(int r, Permutation perm) {
    std::vector<int> ph(perm.size(), 0);
    return MonomialElement(r, std::move(ph), std::move(perm));
}

MonomialElement MonomialElement::compose(const MonomialElement& o) const {
    if (r_ != o.r_ || size() != o.size())
        throw std::invalid_argument("monomial element mismatch in composition");
    std::vector<int> ph(size());
    for (int i = 1; i <= size(); ++i)
        ph[i - 1] = (phase(i) + o.phase(perm_.apply(i))) % r_;
    return MonomialElement(r_, std::move(ph), perm_.compose(o.perm_));
}

MonomialElement MonomialElement::inverse() const {
    Permutation pinv = perm_.inverse();
    std::vector<int> ph(size());
    for (int i = 1; i <= size(); ++i)
        ph[i - 1] = (r_ - phase(pinv.apply(i))) % r_;
    return MonomialElement(r_, std::move(ph), std::move(pinv));
}

bool MonomialElement::is_identity() const {
    if (!perm_.is_identity()) return false;
    for (int k : phases_)
        if (k != 0) return false;
    return true;
}

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        int a = v > 0 ? v : -v;
        if (a < 1 || a > static_cast<int>(images_.size()) || seen[a - 1])
            throw std::invalid_argument(
                "signed one-line notation: absolute values must be a bijection of [n]");
        seen[a - 1] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::sign_change(int n, int j) {
    auto s = identity(n);
    s.images_[j - 1] = -j;
    return s;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& o) const {
    if (size() != o.size())
        throw std::invalid_argument("signed permutation size mismatch in composition");
    std::vector<int> img(size());
    for (int i = 1; i <= size(); ++i) img[i - 1] = o.apply(apply(i));
    return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> img(size());
    for (int i = 1; i <= size(); ++i) {
        int j = images_[i - 1];
        if (j > 0)
            img[j - 1] = i;
        else
            img[-j - 1] = -i;
    }
    return SignedPermutation(std::move(img));
}

int SignedPermutation::sign() const {
    std::vector<int> abs(size());
    int negs = 0;
    for (int i = 0; i < size(); ++i) {
        abs[i] = images_[i] > 0 ? images_[i] : -images_[i];
        if (images_[i] < 0) ++negs;
    }
    return Permutation(std::move(abs)).sign() * (negs % 2 == 0 ? 1 : -1);
}

bool SignedPermutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (images_[i] != i + 1) return false;
    return true;
}

MonomialElement to_monomial(const SignedPermutation& s) {
    int n = s.size();
    std::vector<int> phases(n), perm(n);
    for (int i = 0; i < n; ++i) {
        int v = s.images()[i];
        phases[i] = v < 0 ? 1 : 0;
        perm[i] = v < 0 ? -v : v;
    }
    return MonomialElement(2, std::move(phases), Permutation(std::move(perm)));
}

SignedPermutation to_signed(const MonomialElement& m) {
    if (m.order() != 2)
        throw std::invalid_argument("only r == 2 monomial elements convert to signed permutations");
    std::vector<int> img(m.size());
    for (int i = 1; i <= m.size(); ++i)
        img[i - 1] = (m.phase(i) == 0 ? 1 : -1) * m.permutation().apply(i);
    return SignedPermutation(std::move(img));
}

MultiPartition cycle_type(const MonomialElement& m) {
    int n = m.size(), r = m.order();
    std::vector<std::vector<int>> lengths(r);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int j = i, len = 0, phase_sum = 0;
        while (!seen[j]) {
            seen[j] = true;
            phase_sum = (phase_sum + m.phases()[j]) % r;
            j = m.permutation().apply(j + 1) - 1;
            ++len;
        }
        lengths[phase_sum].push_back(len);
    }
    std::vector<Partition> comps(r);
    for (int k = 0; k < r; ++k) {
        std::sort(lengths[k].rbegin(), lengths[k].rend());
        comps[k] = lengths[k].empty() ? Partition() : Partition(lengths[k]);
    }
    return MultiPartition(std::move(comps));
}

unsigned long long group_order(int n, int r) {
    unsigned long long v = 1;
    for (int i = 2; i <= n; ++i) v *= i;
    for (int i = 0; i < n; ++i) v *= r;
    return v;
}

void for_each_element(int n, int r, const std::function<void(const MonomialElement&)>& f,
                      unsigned long long cap) {
    unsigned long long total = group_order(n, r);
    if (total > cap) throw CapExceeded("group enumeration", total, cap);
    std::vector<int> oneline(n);
    std::iota(oneline.begin(), oneline.end(), 1);
    do {
        Permutation p(oneline);
        std::vector<int> phases(n, 0);
        for (;;) {
            f(MonomialElement(r, phases, p));
            int k = n - 1;
            while (k >= 0 && ++phases[k] == r) phases[k--] = 0;
            if (k < 0) break;
        }
    } while (std::next_permutation(oneline.begin(), oneline.end()));
}

std::vector<MonomialElement> enumerate_group(int n, int r, unsigned long long cap) {
    unsigned long long total = group_order(n, r);
    if (total > cap) throw CapExceeded("group enumeration", total, cap);
    std::vector<MonomialElement> out;
    out.reserve(total);
    for_each_element(n, r, [&](const MonomialElement& g) { out.push_back(g); }, cap);
    return out;
}

std::vector<ConjugacyClass> class_representatives(int n, int r, unsigned long long cap) {
    std::vector<ConjugacyClass> out;
    for (const auto& type : multipartitions_of(n, r)) {
        ConjugacyClass cls;
        cls.type = type;
        int next = 1;
        std::vector<int> phases(n, 0);
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        for (int k = 0; k < r; ++k) {
            for (int len : type.component(k).parts()) {
                phases[next - 1] = k;
                for (int i = 0; i < len; ++i)
                    img[next + i - 1] = (i + 1 < len) ? next + i + 1 : next;
                next += len;
            }
        }
        cls.representative = MonomialElement(r, std::move(phases), Permutation(std::move(img)));
        if (!(cycle_type(cls.representative) == type))
            throw std::logic_error("class representative has wrong cycle type");
        out.push_back(std::move(cls));
    }

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < out.size(); ++i) index[to_string(out[i].type)] = i;
    for_each_element(n, r, [&](const MonomialElement& g) {
        ++out[index.at(to_string(cycle_type(g)))].size;
    }, cap);
    return out;
}

std::vector<MonomialElement> standard_generators(int n, int r) {
    std::vector<MonomialElement> gens;
    if (r > 1) gens.push_back(MonomialElement::diagonal_generator(n, r, 1));
    if (n > 1) {
        gens.push_back(MonomialElement::from_permutation(
            r, Permutation::from_cycles(n, {{1, 2}})));
        std::vector<int> ncycle(n);
        std::iota(ncycle.begin(), ncycle.end(), 1);
        auto c = MonomialElement::from_permutation(
            r, Permutation::from_cycles(n, {ncycle}));
        if (c != gens.back()) gens.push_back(std::move(c));
    }
    if (gens.empty()) gens.push_back(MonomialElement::identity(n, r));
    return gens;
}

MonomialElement random_element(int n, int r, std::mt19937_64& rng) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<int>(rng() % static_cast<unsigned long long>(i + 1));
        std::swap(img[i], img[j]);
    }
    std::vector<int> phases(n);
    for (int i = 0; i < n; ++i)
        phases[i] = static_cast<int>(rng() % static_cast<unsigned long long>(r));
    return MonomialElement(r, std::move(phases), Permutation(std::move(img)));
}

std::string to_string(const Permutation& p) {
    auto cycs = p.cycles();
    if (cycs.empty()) return "()";
    std::string s;
    for (const auto& cyc : cycs) {
        s += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i > 0) s += ',';
            s += std::to_string(cyc[i]);
        }
        s += ')';
    }
    return s;
}

std::string to_string(const MonomialElement& m) {
    std::string s;
    for (int i = 1; i <= m.size(); ++i) {
        int k = m.phase(i);
        if (k == 0) continue;
        if (!s.empty()) s += ' ';
        s += "t" + std::to_string(i);
        if (k > 1) s += "^" + std::to_string(k);
    }
    std::string perm = to_string(m.permutation());
    if (s.empty()) return perm;
    if (perm != "()") s += " " + perm;
    return s;
}

std::string to_string(const SignedPermutation& s) { return to_string(to_monomial(s)); }

namespace {

void skip_space(const std::string& t, std::size_t& pos) {
    while (pos < t.size() && (std::isspace(static_cast<unsigned char>(t[pos])) || t[pos] == '*'))
        ++pos;
}

int parse_int(const std::string& t, std::size_t& pos) {
    std::size_t used = 0;
    int v = std::stoi(t.substr(pos), &used);
    pos += used;
    return v;
}

}  // namespace

MonomialElement parse_element(const std::string& text, int n, int r) {
    std::vector<int> phases(n, 0);
    std::size_t pos = 0;
    skip_space(text, pos);
    while (pos < text.size() && text[pos] == 't') {
        ++pos;
        int j = parse_int(text, pos);
        if (j < 1 || j > n) throw std::invalid_argument("t_j index out of range in: " + text);
        int k = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            k = parse_int(text, pos);
        }
        phases[j - 1] = ((phases[j - 1] + k) % r + r) % r;
        skip_space(text, pos);
    }

    Permutation perm = Permutation::identity(n);
    if (pos < text.size() && text[pos] == '[') {
        ++pos;
        std::vector<int> oneline;
        skip_space(text, pos);
        while (pos < text.size() && text[pos] != ']') {
            oneline.push_back(parse_int(text, pos));
            skip_space(text, pos);
            if (pos < text.size() && text[pos] == ',') ++pos;
            skip_space(text, pos);
        }
        if (pos >= text.size()) throw std::invalid_argument("unterminated one-line notation");
        ++pos;
        if (static_cast<int>(oneline.size()) != n)
            throw std::invalid_argument("one-line notation must list n images");
        bool has_negative = std::any_of(oneline.begin(), oneline.end(),
                                        [](int v) { return v < 0; });
        if (has_negative) {
            if (r != 2)
                throw std::invalid_argument("negative images are only valid at r == 2");
            auto m = to_monomial(SignedPermutation(oneline));
            for (int i = 0; i < n; ++i) phases[i] = (phases[i] + m.phase(i + 1)) % 2;
            perm = m.permutation();
        } else {
            perm = Permutation(oneline);
        }
    } else {
        std::vector<std::vector<int>> cycles;
        while (pos < text.size() && text[pos] == '(') {
            ++pos;
            std::vector<int> cyc;
            skip_space(text, pos);
            while (pos < text.size() && text[pos] != ')') {
                cyc.push_back(parse_int(text, pos));
                skip_space(text, pos);
                if (pos < text.size() && text[pos] == ',') ++pos;
                skip_space(text, pos);
            }
            if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
            ++pos;
            if (!cyc.empty()) cycles.push_back(std::move(cyc));
            skip_space(text, pos);
        }
        perm = Permutation::from_cycles(n, cycles);
    }
    skip_space(text, pos);
    if (pos != text.size())
        throw std::invalid_argument("trailing characters in element text: " + text);
    return MonomialElement(r, std::move(phases), std::move(perm));
}

}  // namespace specht
