#include "specht/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace specht {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("part index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::transpose() const {
    if (parts_.empty()) return Partition();
    std::vector<int> t(parts_[0]);
    for (int j = 0; j < parts_[0]; ++j)
        t[j] = static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                              [j](int p) { return p >= j + 1; }));
    return Partition(std::move(t));
}

MultiPartition::MultiPartition(std::vector<Partition> components)
    : components_(std::move(components)) {
    if (components_.empty())
        throw std::invalid_argument("multipartition needs at least one component");
    for (const auto& c : components_) size_ += c.size();
}

MultiPartition MultiPartition::transpose() const {
    std::vector<Partition> t;
    t.reserve(components_.size());
    for (const auto& c : components_) t.push_back(c.transpose());
    return MultiPartition(std::move(t));
}

BiPartition BiPartition::from_multipartition(const MultiPartition& m) {
    if (m.rank() != 2)
        throw std::invalid_argument("bipartition requires exactly 2 components");
    return BiPartition(m.component(0), m.component(1));
}

std::strong_ordering operator<=>(const BiPartition& a, const BiPartition& b) {
    if (auto c = a.c0_.size() <=> b.c0_.size(); c != 0) return c;
    if (auto c = a.c0_ <=> b.c0_; c != 0) return c;
    return a.c1_ <=> b.c1_;
}

namespace {

void partitions_rec(int n, int maxp, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(acc.empty() ? Partition() : Partition(acc));
        return;
    }
    for (int p = std::min(n, maxp); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(n - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(n, n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiPartition> multipartitions_of(int n, int r) {
    if (n < 0 || r < 1)
        throw std::invalid_argument("multipartitions_of: need n >= 0, r >= 1");
    // Compositions of n into r parts, ascending lexicographic order.
    std::vector<std::vector<int>> comps;
    std::vector<int> c(r, 0);
    auto rec = [&](auto&& self, int k, int rest) -> void {
        if (k == r - 1) {
            c[k] = rest;
            comps.push_back(c);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            c[k] = v;
            self(self, k + 1, rest - v);
        }
    };
    rec(rec, 0, n);

    std::vector<MultiPartition> out;
    for (const auto& comp : comps) {
        std::vector<std::vector<Partition>> per(r);
        for (int k = 0; k < r; ++k) per[k] = partitions_of(comp[k]);
        std::vector<int> idx(r, 0);
        for (;;) {
            std::vector<Partition> tuple(r);
            for (int k = 0; k < r; ++k) tuple[k] = per[k][idx[k]];
            out.emplace_back(std::move(tuple));
            int k = r - 1;
            while (k >= 0 && ++idx[k] == static_cast<int>(per[k].size())) {
                idx[k] = 0;
                --k;
            }
            if (k < 0) break;
        }
    }
    return out;
}

std::vector<BiPartition> bipartitions_of(int n) {
    std::vector<BiPartition> out;
    for (int n0 = 0; n0 <= n; ++n0)
        for (const auto& p0 : partitions_of(n0))
            for (const auto& p1 : partitions_of(n - n0))
                out.emplace_back(p0, p1);
    return out;
}

std::vector<Cell> young_diagram(const Partition& p) {
    std::vector<Cell> cells;
    cells.reserve(p.size());
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j) cells.emplace_back(i, j);
    return cells;
}

std::vector<TableauRows> standard_tableaux(const Partition& p) {
    std::vector<TableauRows> out;
    int n = p.size();
    TableauRows rows(p.length());
    auto rec = [&](auto&& self, int k) -> void {
        if (k > n) {
            out.push_back(rows);
            return;
        }
        for (int i = 0; i < p.length(); ++i) {
            int j = static_cast<int>(rows[i].size());
            bool addable = j < p.part(i + 1) &&
                           (i == 0 || static_cast<int>(rows[i - 1].size()) > j);
            if (addable) {
                rows[i].push_back(k);
                self(self, k + 1);
                rows[i].pop_back();
            }
        }
    };
    rec(rec, 1);
    return out;
}

long long count_standard(const Partition& p) {
    return static_cast<long long>(standard_tableaux(p).size());
}

long long factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    long long f = 1;
    for (int i = 2; i <= n; ++i) {
        if (f > (1LL << 62) / i) throw std::overflow_error("factorial overflow");
        f *= i;
    }
    return f;
}

long long multinomial(const std::vector<int>& ks) {
    int n = std::accumulate(ks.begin(), ks.end(), 0);
    long long v = factorial(n);
    for (int k : ks) v /= factorial(k);
    return v;
}

long long count_standard(const MultiPartition& m) {
    std::vector<int> sizes;
    long long prod = 1;
    for (const auto& c : m.components()) {
        sizes.push_back(c.size());
        prod *= count_standard(c);
    }
    return multinomial(sizes) * prod;
}

long long count_standard(const BiPartition& b) {
    return count_standard(b.as_multipartition());
}

namespace {

const char* kEmptySign = "∅";  // ∅

std::string partition_body(const Partition& p) {
    std::string s;
    for (int i = 0; i < p.length(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

Partition parse_partition_body(const std::string& text) {
    if (text.empty() || text == kEmptySign) return Partition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t used = 0;
        int v = std::stoi(text.substr(pos), &used);
        parts.push_back(v);
        pos += used;
        if (pos < text.size()) {
            if (text[pos] != ',')
                throw std::invalid_argument("bad partition text: " + text);
            ++pos;
        }
    }
    return Partition(std::move(parts));
}

std::vector<std::string> split_components(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == '|') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

std::string to_string(const Partition& p) {
    return p.empty() ? kEmptySign : partition_body(p);
}

std::string to_string(const MultiPartition& m) {
    std::string s;
    for (int k = 0; k < m.rank(); ++k) {
        if (k > 0) s += '|';
        s += partition_body(m.component(k));
    }
    return s;
}

std::string to_string(const BiPartition& b) {
    return partition_body(b.component(0)) + "|" + partition_body(b.component(1));
}

Partition parse_partition(const std::string& text) {
    return parse_partition_body(text);
}

MultiPartition parse_multipartition(const std::string& text, int r) {
    auto comps = split_components(text);
    if (r > 0 && static_cast<int>(comps.size()) != r)
        throw std::invalid_argument("expected " + std::to_string(r) +
                                    " components in '" + text + "'");
    std::vector<Partition> parts;
    parts.reserve(comps.size());
    for (const auto& c : comps) parts.push_back(parse_partition_body(c));
    return MultiPartition(std::move(parts));
}

BiPartition parse_bipartition(const std::string& text) {
    return BiPartition::from_multipartition(parse_multipartition(text, 2));
}

}  // namespace specht
