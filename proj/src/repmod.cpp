#include "specht/repmod.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "specht/exact_linalg.hpp"

namespace specht {

ColumnAction column_action(const Word& x, const Permutation& sigma) {
    return {act(x, sigma), 0};
}

ColumnAction column_action(const Word& x, const MonomialElement& sigma) {
    if (x.system() == WordSystem::biword)
        throw std::invalid_argument("biword columns move under signed permutations");
    if (x.order() != sigma.order())
        throw std::invalid_argument("word and element have different root orders");
    int r = sigma.order();
    int s = 0;
    for (int t = 1; t <= x.size(); ++t)
        s = (s + sigma.phase(t) * x.letter(t).phase) % r;
    return {act(x, sigma.permutation()), s};
}

ColumnAction column_action(const Word& x, const SignedPermutation& sigma) {
    return {act(x, sigma), 0};
}

RepMatrix::RepMatrix(int scalar_order, std::vector<std::vector<CycloInt>> entries)
    : r_(scalar_order), entries_(std::move(entries)) {
    for (const auto& row : entries_) {
        if (row.size() != entries_.size())
            throw std::invalid_argument("representing matrix must be square");
        for (const auto& e : row)
            if (e.order() != r_)
                throw std::invalid_argument("representing matrix entry has wrong order");
    }
}

RepMatrix RepMatrix::identity(int scalar_order, int dim) {
    std::vector<std::vector<CycloInt>> m(dim, std::vector<CycloInt>(dim, CycloInt(scalar_order, 0)));
    for (int i = 0; i < dim; ++i) m[i][i] = CycloInt(scalar_order, 1);
    return RepMatrix(scalar_order, std::move(m));
}

CycloInt RepMatrix::trace() const {
    CycloInt t(r_, 0);
    for (int i = 0; i < dimension(); ++i) t += entries_[i][i];
    return t;
}

bool RepMatrix::is_identity() const {
    for (int i = 0; i < dimension(); ++i)
        for (int j = 0; j < dimension(); ++j)
            if (entries_[i][j] != CycloInt(r_, i == j ? 1 : 0)) return false;
    return true;
}

RepMatrix RepMatrix::multiply(const RepMatrix& o) const {
    if (o.r_ != r_ || o.dimension() != dimension())
        throw std::invalid_argument("representing matrix mismatch in product");
    int f = dimension();
    std::vector<std::vector<CycloInt>> m(f, std::vector<CycloInt>(f, CycloInt(r_, 0)));
    for (int i = 0; i < f; ++i)
        for (int k = 0; k < f; ++k) {
            if (entries_[i][k].is_zero()) continue;
            for (int j = 0; j < f; ++j) m[i][j] += entries_[i][k] * o.entries_[k][j];
        }
    return RepMatrix(r_, std::move(m));
}

RepBuilder::RepBuilder(const Partition& shape)
    : sys_(WordSystem::plain), n_(shape.size()), entry_r_(1), heart_(heart_submatrix(shape)) {}

RepBuilder::RepBuilder(const MultiPartition& shape)
    : sys_(WordSystem::rword), n_(shape.size()), entry_r_(shape.rank()),
      heart_(heart_submatrix(shape)) {}

RepBuilder::RepBuilder(const BiPartition& shape)
    : sys_(WordSystem::biword), n_(shape.size()), entry_r_(1), heart_(heart_submatrix(shape)) {}

RepMatrix RepBuilder::solve(const std::vector<std::vector<CycloInt>>& numerator) const {
    // Solve R * H = N for R against the up-to-sign upper unitriangular H.
    int f = dimension();
    std::vector<std::vector<CycloInt>> sol(numerator.size(),
                                           std::vector<CycloInt>(f, CycloInt(entry_r_, 0)));
    for (std::size_t i = 0; i < numerator.size(); ++i) {
        for (int j = 0; j < f; ++j) {
            CycloInt acc = numerator[i][j];
            for (int t = 0; t < j; ++t) {
                int h = heart_.entries[t][j];
                if (h == 1)
                    acc -= sol[i][t];
                else if (h == -1)
                    acc += sol[i][t];
                else if (h != 0)
                    throw std::logic_error("heart entries must be 0 or +-1");
            }
            int pivot = heart_.entries[j][j];
            if (pivot != 1 && pivot != -1)
                throw std::logic_error("heart pivot is not a unit");
            sol[i][j] = pivot == 1 ? acc : -acc;
        }
    }
    return RepMatrix(entry_r_, std::move(sol));
}

namespace {

template <typename PullBack>
std::vector<std::vector<CycloInt>> numerator_matrix(const HeartData& h, int entry_r,
                                                    PullBack&& pull) {
    int f = h.dimension();
    std::vector<std::vector<CycloInt>> num(f, std::vector<CycloInt>(f, CycloInt(entry_r, 0)));
    for (int j = 0; j < f; ++j) {
        ColumnAction back = pull(h.col_labels[j]);  // x_j . sigma^{-1} = w^m * target
        CycloInt scalar = CycloInt::root_power(entry_r, -back.omega_exponent);
        for (int i = 0; i < f; ++i) {
            int e = specht_entry(h.row_labels[i], back.target);
            if (e == 1)
                num[i][j] = scalar;
            else if (e == -1)
                num[i][j] = -scalar;
        }
    }
    return num;
}

}  // namespace

RepMatrix RepBuilder::matrix(const Permutation& sigma) const {
    if (sys_ != WordSystem::plain)
        throw std::invalid_argument("plain permutations act on plain-word modules");
    if (sigma.size() != n_) throw std::invalid_argument("element size mismatch");
    Permutation inv = sigma.inverse();
    return solve(numerator_matrix(heart_, entry_r_,
                                  [&](const Word& x) { return column_action(x, inv); }));
}

RepMatrix RepBuilder::matrix(const MonomialElement& sigma) const {
    if (sigma.size() != n_) throw std::invalid_argument("element size mismatch");
    if (sys_ == WordSystem::plain) {
        if (sigma.order() != 1)
            throw std::invalid_argument("plain-word modules take r == 1 elements");
        return matrix(sigma.permutation());
    }
    if (sys_ != WordSystem::rword)
        throw std::invalid_argument("monomial elements act on r-word modules");
    if (sigma.order() != entry_r_)
        throw std::invalid_argument("element root order mismatch");
    MonomialElement inv = sigma.inverse();
    return solve(numerator_matrix(heart_, entry_r_,
                                  [&](const Word& x) { return column_action(x, inv); }));
}

RepMatrix RepBuilder::matrix(const SignedPermutation& sigma) const {
    if (sys_ != WordSystem::biword)
        throw std::invalid_argument("signed permutations act on biword modules");
    if (sigma.size() != n_) throw std::invalid_argument("element size mismatch");
    SignedPermutation inv = sigma.inverse();
    return solve(numerator_matrix(heart_, entry_r_,
                                  [&](const Word& x) { return column_action(x, inv); }));
}

RepMatrix rep_matrix(const Partition& shape, const Permutation& sigma) {
    return RepBuilder(shape).matrix(sigma);
}
RepMatrix rep_matrix(const MultiPartition& shape, const MonomialElement& sigma) {
    return RepBuilder(shape).matrix(sigma);
}
RepMatrix rep_matrix(const BiPartition& shape, const SignedPermutation& sigma) {
    return RepBuilder(shape).matrix(sigma);
}

CycloInt character(const Partition& shape, const Permutation& sigma) {
    return rep_matrix(shape, sigma).trace();
}
CycloInt character(const MultiPartition& shape, const MonomialElement& sigma) {
    return rep_matrix(shape, sigma).trace();
}
CycloInt character(const BiPartition& shape, const SignedPermutation& sigma) {
    return rep_matrix(shape, sigma).trace();
}

namespace {

// The RepBuilder overload set acts as the flavor traits; this adds the pieces
// that cannot be resolved by overloading alone.
template <typename ShapeT>
struct FlavorOps;

template <>
struct FlavorOps<Partition> {
    using Shape = Partition;
    static constexpr WordSystem system = WordSystem::plain;
    static std::vector<Partition> shapes(int n, int) { return partitions_of(n); }
    static int group_r(int) { return 1; }
};

template <>
struct FlavorOps<MultiPartition> {
    using Shape = MultiPartition;
    static constexpr WordSystem system = WordSystem::rword;
    static std::vector<MultiPartition> shapes(int n, int r) { return multipartitions_of(n, r); }
    static int group_r(int r) { return r; }
};

template <>
struct FlavorOps<BiPartition> {
    using Shape = BiPartition;
    static constexpr WordSystem system = WordSystem::biword;
    static std::vector<BiPartition> shapes(int n, int) { return bipartitions_of(n); }
    static int group_r(int) { return 2; }
};

template <typename F>
void dispatch_flavor(WordSystem flavor, F&& f) {
    switch (flavor) {
        case WordSystem::plain: f(FlavorOps<Partition>{}); return;
        case WordSystem::rword: f(FlavorOps<MultiPartition>{}); return;
        case WordSystem::biword: f(FlavorOps<BiPartition>{}); return;
    }
    throw std::logic_error("bad word system");
}

RepMatrix rep_apply(const RepBuilder& b, const MonomialElement& g) {
    if (b.system() == WordSystem::biword) return b.matrix(to_signed(g));
    return b.matrix(g);
}

}  // namespace

CharacterTable character_table(int n, int r, WordSystem flavor, const Caps& caps) {
    CharacterTable table;
    table.flavor = flavor;
    table.n = n;
    dispatch_flavor(flavor, [&](auto ops) {
        using Ops = decltype(ops);
        table.r = Ops::group_r(r);
        table.classes = class_representatives(n, table.r, caps.group_cap);
        for (const auto& shape : Ops::shapes(n, r)) {
            RepBuilder builder(shape);
            table.shapes.push_back(to_string(shape));
            std::vector<CycloInt> row;
            row.reserve(table.classes.size());
            for (const auto& cls : table.classes)
                row.push_back(rep_apply(builder, cls.representative).trace());
            table.values.push_back(std::move(row));
        }
    });
    return table;
}

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

int VerifyReport::failures() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                          [](const CheckResult& c) { return !c.pass; }));
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "homomorphism", "dimension", "orthogonality", "triangular",
        "free-orbit",   "rank",      "cross-r2"};
    return names;
}

namespace {

template <typename ShapeT>
void homomorphism_suite(int n, int r, std::uint64_t seed, VerifyReport& out) {
    using Ops = FlavorOps<ShapeT>;
    int gr = Ops::group_r(r);
    auto gens = standard_generators(n, gr);
    std::vector<std::pair<MonomialElement, MonomialElement>> pairs;
    for (const auto& a : gens)
        for (const auto& b : gens) pairs.emplace_back(a, b);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 100; ++t)
        pairs.emplace_back(random_element(n, gr, rng), random_element(n, gr, rng));

    for (const auto& shape : Ops::shapes(n, r)) {
        RepBuilder builder(shape);
        CheckResult res{"homomorphism", "lambda=" + to_string(shape), true, ""};
        if (!rep_apply(builder, MonomialElement::identity(n, gr)).is_identity()) {
            res.pass = false;
            res.witness = "identity does not map to the unit matrix";
        }
        for (const auto& [a, b] : pairs) {
            if (!res.pass) break;
            RepMatrix lhs = rep_apply(builder, a.compose(b));
            RepMatrix rhs = rep_apply(builder, a).multiply(rep_apply(builder, b));
            if (!(lhs == rhs)) {
                res.pass = false;
                res.witness = "sigma=" + to_string(a) + " tau=" + to_string(b);
            }
        }
        out.checks.push_back(std::move(res));
    }
}

template <typename ShapeT>
void dimension_suite(int n, int r, VerifyReport& out) {
    using Ops = FlavorOps<ShapeT>;
    unsigned long long expected = group_order(n, Ops::group_r(r));
    unsigned long long sum = 0;
    for (const auto& shape : Ops::shapes(n, r)) {
        long long f = count_standard(shape);
        sum += static_cast<unsigned long long>(f) * static_cast<unsigned long long>(f);
    }
    out.checks.push_back({"dimension",
                          "sum of f^2 at n=" + std::to_string(n),
                          sum == expected,
                          sum == expected ? ""
                                          : "got " + std::to_string(sum) + ", group order " +
                                                std::to_string(expected)});
}

template <typename ShapeT>
void orthogonality_suite(int n, int r, const Caps& caps, VerifyReport& out) {
    using Ops = FlavorOps<ShapeT>;
    int gr = Ops::group_r(r);
    int er = Ops::system == WordSystem::rword ? r : 1;
    auto shapes = Ops::shapes(n, r);
    std::vector<RepBuilder> builders;
    builders.reserve(shapes.size());
    for (const auto& shape : shapes) builders.emplace_back(shape);
    std::size_t m = shapes.size();

    // First orthogonality by literal full-group summation.
    std::vector<std::vector<CycloInt>> gram(m, std::vector<CycloInt>(m, CycloInt(er, 0)));
    unsigned long long order = 0;
    for_each_element(n, gr, [&](const MonomialElement& g) {
        ++order;
        std::vector<CycloInt> chi;
        chi.reserve(m);
        for (const auto& b : builders) chi.push_back(rep_apply(b, g).trace());
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) gram[i][j] += chi[i] * chi[j].conjugate();
    }, caps.group_cap);

    CheckResult first{"orthogonality",
                      "first orthogonality over " + std::to_string(order) + " elements", true, ""};
    for (std::size_t i = 0; i < m && first.pass; ++i)
        for (std::size_t j = 0; j < m && first.pass; ++j) {
            CycloInt expect(er, i == j ? static_cast<long long>(order) : 0);
            if (gram[i][j] != expect) {
                first.pass = false;
                first.witness = "<chi_" + to_string(shapes[i]) + ", chi_" + to_string(shapes[j]) +
                                "> = " + gram[i][j].to_string();
            }
        }
    out.checks.push_back(std::move(first));

    // Second orthogonality on the class table, class sizes from the same
    // full enumeration.
    auto classes = class_representatives(n, gr, caps.group_cap);
    std::vector<std::vector<CycloInt>> vals(m);
    for (std::size_t i = 0; i < m; ++i) {
        vals[i].reserve(classes.size());
        for (const auto& cls : classes)
            vals[i].push_back(rep_apply(builders[i], cls.representative).trace());
    }
    CheckResult second{"orthogonality",
                       "second orthogonality over " + std::to_string(classes.size()) + " classes",
                       true, ""};
    for (std::size_t c = 0; c < classes.size() && second.pass; ++c)
        for (std::size_t d = 0; d < classes.size() && second.pass; ++d) {
            if (order % classes[c].size != 0) {
                second.pass = false;
                second.witness = "class size does not divide group order";
                break;
            }
            CycloInt expect(er, c == d ? static_cast<long long>(order / classes[c].size) : 0);
            CycloInt sum(er, 0);
            for (std::size_t i = 0; i < m; ++i) sum += vals[i][c] * vals[i][d].conjugate();
            if (sum != expect) {
                second.pass = false;
                second.witness = "columns " + to_string(classes[c].type) + ", " +
                                 to_string(classes[d].type);
            }
        }
    out.checks.push_back(std::move(second));
}

template <typename ShapeT>
void triangular_suite(int n, int r, VerifyReport& out) {
    using Ops = FlavorOps<ShapeT>;
    for (const auto& shape : Ops::shapes(n, r)) {
        CheckResult res{"triangular", "lambda=" + to_string(shape), true, ""};
        try {
            HeartData h = heart_submatrix(shape);
            for (int i = 0; i < h.dimension() && res.pass; ++i)
                for (int j = 0; j < h.dimension() && res.pass; ++j) {
                    int e = h.entries[i][j];
                    if ((i == j && e != 1 && e != -1) || (i > j && e != 0)) {
                        res.pass = false;
                        res.witness = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") = " + std::to_string(e);
                    }
                }
        } catch (const std::logic_error& err) {
            res.pass = false;
            res.witness = err.what();
        }
        out.checks.push_back(std::move(res));
    }
}

template <typename ShapeT>
void rank_suite(int n, int r, const Caps& caps, VerifyReport& out) {
    using Ops = FlavorOps<ShapeT>;
    for (const auto& shape : Ops::shapes(n, r)) {
        CheckResult res{"rank", "lambda=" + to_string(shape), true, ""};
        long long f = count_standard(shape);
        SpechtMatrix full = specht_matrix(shape, caps);
        std::vector<std::vector<long long>> m(full.rows(), std::vector<long long>(full.cols()));
        for (int i = 0; i < full.rows(); ++i)
            for (int j = 0; j < full.cols(); ++j) m[i][j] = full.entry(i, j);
        int rank = matrix_rank(std::move(m));
        if (rank != f) {
            res.pass = false;
            res.witness = "rank " + std::to_string(rank) + ", f = " + std::to_string(f);
        } else {
            HeartData h = heart_submatrix(shape);
            std::vector<std::vector<long long>> hm(h.dimension(),
                                                   std::vector<long long>(h.dimension()));
            for (int i = 0; i < h.dimension(); ++i)
                for (int j = 0; j < h.dimension(); ++j) hm[i][j] = h.entries[i][j];
            long long det = matrix_det(std::move(hm));
            if (det != 1 && det != -1) {
                res.pass = false;
                res.witness = "heart determinant " + std::to_string(det);
            }
        }
        out.checks.push_back(std::move(res));
    }
}

template <typename ShapeT>
void free_orbit_suite(int n, int r, const Caps& caps, VerifyReport& out) {
    using Ops = FlavorOps<ShapeT>;
    constexpr bool is_biword = Ops::system == WordSystem::biword;

    // The acting group of the word system: S_n for plain words and r-words,
    // H_n for biwords.
    std::vector<Permutation> perms;
    std::vector<SignedPermutation> signed_perms;
    if constexpr (is_biword) {
        for_each_element(n, 2, [&](const MonomialElement& g) {
            signed_perms.push_back(to_signed(g));
        }, caps.group_cap);
    } else {
        for_each_element(n, 1, [&](const MonomialElement& g) {
            perms.push_back(g.permutation());
        }, caps.group_cap);
    }
    unsigned long long gsize = is_biword ? signed_perms.size() : perms.size();

    auto shapes = Ops::shapes(n, r);
    for (const auto& lam : shapes) {
        CheckResult res{"free-orbit", "lambda=" + to_string(lam), true, ""};
        auto lam_t = lam.transpose();
        auto cols = orbit(lam, caps.orbit_cap);
        PairDiagram young = young_pair_diagram(lam);
        for (const auto& eta : shapes) {
            if (!res.pass) break;
            auto rows = orbit(eta, caps.orbit_cap);
            std::map<Word, int> row_index;
            for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);

            std::vector<std::pair<int, int>> free_pairs;  // (col x, row y)
            for (std::size_t xi = 0; xi < cols.size(); ++xi)
                for (std::size_t yi = 0; yi < rows.size(); ++yi)
                    if (is_free(cols[xi], rows[yi]))
                        free_pairs.emplace_back(static_cast<int>(xi), static_cast<int>(yi));

            bool expect_transitive = eta == lam_t;
            if (free_pairs.size() % gsize != 0) {
                res.pass = false;
                res.witness = "eta=" + to_string(eta) + ": free component size " +
                              std::to_string(free_pairs.size()) +
                              " is not a multiple of the group order";
                break;
            }
            // Count orbits by closure from unvisited free pairs.
            std::map<Word, int> col_index;
            for (std::size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = static_cast<int>(i);
            std::set<std::pair<int, int>> unvisited(free_pairs.begin(), free_pairs.end());
            unsigned long long norbits = 0;
            while (!unvisited.empty()) {
                auto [xi, yi] = *unvisited.begin();
                ++norbits;
                auto visit = [&](const Word& xw, const Word& yw) {
                    auto ix = col_index.find(xw);
                    auto iy = row_index.find(yw);
                    if (ix == col_index.end() || iy == row_index.end())
                        throw std::logic_error("group action left the orbit");
                    unvisited.erase({ix->second, iy->second});
                };
                if constexpr (is_biword) {
                    for (const auto& g : signed_perms)
                        visit(act(cols[xi], g), act(rows[yi], g));
                } else {
                    for (const auto& g : perms)
                        visit(act(cols[xi], g), act(rows[yi], g));
                }
            }
            if (expect_transitive != (norbits == 1)) {
                res.pass = false;
                res.witness = "eta=" + to_string(eta) + ": " + std::to_string(norbits) +
                              " free orbits" + (expect_transitive ? " (expected exactly one)" : "");
                break;
            }
            if (expect_transitive) {
                for (const auto& [xi, yi] : free_pairs) {
                    if (!(pair_diagram(cols[xi], rows[yi]) == young)) {
                        res.pass = false;
                        res.witness = "pair <" + to_string(cols[xi]) + ", " + to_string(rows[yi]) +
                                      "> has a diagram different from the Young diagram";
                        break;
                    }
                }
            }
        }
        out.checks.push_back(std::move(res));
    }
}

void cross_r2_suite(int n, const Caps& caps, VerifyReport& out) {
    CharacterTable mono = character_table(n, 2, WordSystem::rword, caps);
    CharacterTable hypo = character_table(n, 2, WordSystem::biword, caps);
    CheckResult res{"cross-r2", "character tables at n=" + std::to_string(n), true, ""};
    if (mono.classes.size() != hypo.classes.size() ||
        mono.values.size() != hypo.values.size()) {
        res.pass = false;
        res.witness = "table sizes differ";
    }
    for (std::size_t c = 0; res.pass && c < mono.classes.size(); ++c)
        if (!(mono.classes[c].type == hypo.classes[c].type) ||
            mono.classes[c].size != hypo.classes[c].size) {
            res.pass = false;
            res.witness = "class mismatch at column " + std::to_string(c);
        }
    if (res.pass) {
        auto rows_of = [](const CharacterTable& t) {
            std::vector<std::vector<long long>> rows;
            for (const auto& row : t.values) {
                std::vector<long long> ints;
                ints.reserve(row.size());
                for (const auto& v : row) ints.push_back(v.integer_value());
                rows.push_back(std::move(ints));
            }
            std::sort(rows.begin(), rows.end());
            return rows;
        };
        if (rows_of(mono) != rows_of(hypo)) {
            res.pass = false;
            res.witness = "row multisets differ";
        }
    }
    out.checks.push_back(std::move(res));
}

}  // namespace

VerifyReport verify(WordSystem flavor, int n, int r, const std::string& suite,
                    std::uint64_t seed, const Caps& caps) {
    bool all = suite == "all";
    bool known = all || std::find(verify_suite_names().begin(), verify_suite_names().end(),
                                  suite) != verify_suite_names().end();
    if (!known) throw std::invalid_argument("unknown verify suite: " + suite);

    VerifyReport report;
    dispatch_flavor(flavor, [&](auto ops) {
        using ShapeT = typename decltype(ops)::Shape;
        if (all || suite == "homomorphism") homomorphism_suite<ShapeT>(n, r, seed, report);
        if (all || suite == "dimension") dimension_suite<ShapeT>(n, r, report);
        if (all || suite == "orthogonality") orthogonality_suite<ShapeT>(n, r, caps, report);
        if (all || suite == "triangular") triangular_suite<ShapeT>(n, r, report);
        if (all || suite == "free-orbit") free_orbit_suite<ShapeT>(n, r, caps, report);
        if (all || suite == "rank") rank_suite<ShapeT>(n, r, caps, report);
    });
    if (all || suite == "cross-r2") cross_r2_suite(n, caps, report);
    return report;
}

}  // namespace specht
