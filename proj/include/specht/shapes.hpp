#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace specht {

// An integer partition: weakly decreasing positive parts.  The empty
// partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int size() const { return size_; }            // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;                        // 1-based; 0 beyond length
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    Partition transpose() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on the part sequences.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// An r-tuple of partitions.  Transpose is componentwise.
class MultiPartition {
public:
    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> components);

    int rank() const { return static_cast<int>(components_.size()); }  // r
    int size() const { return size_; }
    const Partition& component(int k) const { return components_.at(k); }
    const std::vector<Partition>& components() const { return components_; }

    MultiPartition transpose() const;

    friend bool operator==(const MultiPartition&, const MultiPartition&) = default;

private:
    std::vector<Partition> components_;
    int size_ = 0;
};

// A pair of partitions with the hyperoctahedral transpose: swap the
// components, then conjugate each.
class BiPartition {
public:
    BiPartition() = default;
    BiPartition(Partition c0, Partition c1)
        : c0_(std::move(c0)), c1_(std::move(c1)) {}

    int size() const { return c0_.size() + c1_.size(); }
    const Partition& component(int k) const { return k == 0 ? c0_ : c1_; }

    BiPartition transpose() const {
        return BiPartition(c1_.transpose(), c0_.transpose());
    }

    MultiPartition as_multipartition() const {
        return MultiPartition({c0_, c1_});
    }
    static BiPartition from_multipartition(const MultiPartition& m);

    friend bool operator==(const BiPartition&, const BiPartition&) = default;
    // First by |c0|, then c0 lexicographically, then c1.
    friend std::strong_ordering operator<=>(const BiPartition& a, const BiPartition& b);

private:
    Partition c0_, c1_;
};

// All partitions of n in ascending lexicographic order.
std::vector<Partition> partitions_of(int n);

// All r-partitions of n.  Order: compositions (n0,...,n_{r-1}) of n in
// ascending lexicographic order, then within a composition the component
// tuples in row-major order (last component varies fastest), each component
// running over partitions_of(nk) ascending.
std::vector<MultiPartition> multipartitions_of(int n, int r);

// All bipartitions of n in the order: first by |c0|, then c0, then c1.
std::vector<BiPartition> bipartitions_of(int n);

using Cell = std::pair<int, int>;  // (row, column), 1-based

// Cells of the Young diagram, sorted.
std::vector<Cell> young_diagram(const Partition& p);

// A standard tableau as rows of entries.
using TableauRows = std::vector<std::vector<int>>;

// All standard Young tableaux of the given shape, entries 1..n increasing
// along rows and columns.
std::vector<TableauRows> standard_tableaux(const Partition& p);

// Number of standard (multi/bi)tableaux.  Plain partitions are counted by
// enumeration; the other two use the multinomial product formula.
long long count_standard(const Partition& p);
long long count_standard(const MultiPartition& m);
long long count_standard(const BiPartition& b);

long long factorial(int n);
long long multinomial(const std::vector<int>& ks);

// Text forms: "3,2" for partitions (empty renders as a Unicode empty-set
// sign); "2,1|2|1,1" for multipartitions with blank empty components; the
// same two-component form for bipartitions.
std::string to_string(const Partition& p);
std::string to_string(const MultiPartition& m);
std::string to_string(const BiPartition& b);
Partition parse_partition(const std::string& text);
MultiPartition parse_multipartition(const std::string& text, int r = -1);
BiPartition parse_bipartition(const std::string& text);

}  // namespace specht
