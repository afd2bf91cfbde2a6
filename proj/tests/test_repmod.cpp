#include <map>
#include <set>
#include <random>

#include "doctest.h"
#include "specht/repmod.hpp"

using namespace specht;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<std::vector<long long>> as_ints(const RepMatrix& m) {
    std::vector<std::vector<long long>> out(m.dimension(),
                                            std::vector<long long>(m.dimension()));
    for (int i = 0; i < m.dimension(); ++i)
        for (int j = 0; j < m.dimension(); ++j) out[i][j] = m.entry(i, j).integer_value();
    return out;
}

std::mt19937_64 rng(55);

}  // namespace

TEST_CASE("representing matrices for (3,2)") {
    auto lam = P({3, 2});
    auto swap12 = Permutation::from_cycles(5, {{1, 2}});
    auto cycle5 = Permutation::from_cycles(5, {{1, 2, 3, 4, 5}});

    CHECK(as_ints(rep_matrix(lam, swap12)) ==
          std::vector<std::vector<long long>>{{1, 0, 0, -1, -1},
                                              {0, 1, 0, 1, 0},
                                              {0, 0, 1, 0, 1},
                                              {0, 0, 0, -1, 0},
                                              {0, 0, 0, 0, -1}});
    CHECK(as_ints(rep_matrix(lam, cycle5)) ==
          std::vector<std::vector<long long>>{{0, 1, 0, 0, 0},
                                              {0, 0, 1, 0, 0},
                                              {1, 0, -1, -1, -1},
                                              {0, 0, -1, 0, -1},
                                              {0, 1, 1, 1, 1}});

    CHECK(rep_matrix(lam, Permutation::identity(5)).is_identity());
    CHECK(character(lam, swap12) == CycloInt(1, 1));
    CHECK(character(lam, Permutation::identity(5)) == CycloInt(1, 5));
}

TEST_CASE("representing matrices for the monomial group, r = 3") {
    auto lam = MultiPartition({Partition(), P({3, 2}), Partition()});
    auto t1 = MonomialElement::diagonal_generator(5, 3, 1);
    auto c5 = MonomialElement::from_permutation(3, Permutation::from_cycles(5, {{1, 2, 3, 4, 5}}));

    RepMatrix m1 = rep_matrix(lam, t1);
    auto w = CycloInt::root_power(3, 1);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            CHECK(m1.entry(i, j) == (i == j ? w : CycloInt(3, 0)));

    RepMatrix m2 = rep_matrix(lam, t1.compose(c5));
    long long shape_ints[5][5] = {{0, 1, 0, 0, 0},
                                  {0, 0, 1, 0, 0},
                                  {1, 0, -1, -1, -1},
                                  {0, 0, -1, 0, -1},
                                  {0, 1, 1, 1, 1}};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            CycloInt expect = CycloInt(3, shape_ints[i][j]) * w;
            CHECK(m2.entry(i, j) == expect);
        }
}

TEST_CASE("representing matrices for the hyperoctahedral group") {
    auto lam = BiPartition(Partition(), P({3, 2}));
    auto t1 = SignedPermutation::sign_change(5, 1);

    RepMatrix m1 = rep_matrix(lam, t1);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            CHECK(m1.entry(i, j).integer_value() == (i == j ? -1 : 0));

    auto c5 = to_signed(MonomialElement::from_permutation(
        2, Permutation::from_cycles(5, {{1, 2, 3, 4, 5}})));
    CHECK(as_ints(rep_matrix(lam, t1.compose(c5))) ==
          std::vector<std::vector<long long>>{{0, -1, 0, 0, 0},
                                              {0, 0, -1, 0, 0},
                                              {-1, 0, 1, 1, 1},
                                              {0, 0, 1, 0, 1},
                                              {0, -1, -1, -1, -1}});
}

TEST_CASE("column action") {
    // r-word diagonal: fixed word, scalar from the letter's phase
    auto mlam = MultiPartition({P({1}), P({2})});
    auto x = canonical_word(mlam);
    auto t2 = MonomialElement::diagonal_generator(3, 2, 2);
    auto a = column_action(x, t2);
    CHECK(a.target == x);
    CHECK(a.omega_exponent == x.letter(2).phase);

    // plain: always scalar 1
    auto p = column_action(canonical_word(P({2, 1})), Permutation::from_cycles(3, {{1, 2}}));
    CHECK(p.omega_exponent == 0);

    // biword t_i: basis words absorb the bar, scalar stays 1
    auto blam = BiPartition(P({1}), P({1}));
    auto bx = canonical_word(blam);
    auto ba = column_action(bx, SignedPermutation::sign_change(2, 2));
    CHECK(ba.omega_exponent == 0);
    CHECK(ba.target.letter(2).phase == -1);
}

TEST_CASE("permutation module consistency") {
    // [v.sigma]_X = [v]_X [sigma]_X with both sides computed independently:
    // the left by transporting each basis word of the row, the right by
    // building the full action matrix.
    auto check_consistency = [&](const auto& lam, const auto& sigma) {
        auto cols = orbit(lam);
        std::map<Word, int> index;
        for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = static_cast<int>(i);
        int er = cols.front().system() == WordSystem::rword ? cols.front().order() : 1;

        auto rows = orbit(lam.transpose());
        const Word& y = rows[rng() % rows.size()];

        // action matrix [sigma]_X
        std::vector<std::vector<CycloInt>> action(
            cols.size(), std::vector<CycloInt>(cols.size(), CycloInt(er, 0)));
        for (std::size_t i = 0; i < cols.size(); ++i) {
            auto moved = column_action(cols[i], sigma);
            action[i][index.at(moved.target)] = CycloInt::root_power(er, moved.omega_exponent);
        }

        // [v]_X row for v = v_y, then the product
        std::vector<CycloInt> lhs(cols.size(), CycloInt(er, 0));
        std::vector<CycloInt> row(cols.size(), CycloInt(er, 0));
        for (std::size_t i = 0; i < cols.size(); ++i)
            row[i] = CycloInt(er, specht_entry(y, cols[i]));
        for (std::size_t i = 0; i < cols.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) lhs[j] += row[i] * action[i][j];

        // independent: v.sigma = sum_x m_yx (x.sigma)
        std::vector<CycloInt> rhs(cols.size(), CycloInt(er, 0));
        for (std::size_t i = 0; i < cols.size(); ++i) {
            int e = specht_entry(y, cols[i]);
            if (e == 0) continue;
            auto moved = column_action(cols[i], sigma);
            CycloInt scal = CycloInt::root_power(er, moved.omega_exponent);
            rhs[index.at(moved.target)] += e == 1 ? scal : -scal;
        }
        for (std::size_t j = 0; j < cols.size(); ++j) CHECK(lhs[j] == rhs[j]);
    };

    for (int t = 0; t < 25; ++t) {
        check_consistency(P({2, 1, 1}), random_element(4, 1, rng).permutation());
        check_consistency(MultiPartition({P({1}), P({2}), Partition()}), random_element(3, 3, rng));
        check_consistency(BiPartition(P({1}), P({1, 1})), to_signed(random_element(3, 2, rng)));
    }
}

TEST_CASE("characters are class functions") {
    for (int n = 2; n <= 3; ++n) {
        auto shapes = partitions_of(n);
        std::vector<RepBuilder> builders;
        for (const auto& s : shapes) builders.emplace_back(s);
        auto all = enumerate_group(n, 1);
        for (int t = 0; t < 20; ++t) {
            const auto& a = all[rng() % all.size()];
            const auto& g = all[rng() % all.size()];
            auto conj = g.inverse().compose(a).compose(g);
            for (const auto& b : builders)
                CHECK(b.matrix(a).trace() == b.matrix(conj).trace());
        }
    }
    {
        auto shapes = multipartitions_of(2, 2);
        std::vector<RepBuilder> builders;
        for (const auto& s : shapes) builders.emplace_back(s);
        auto all = enumerate_group(2, 2);
        for (const auto& a : all)
            for (const auto& g : all) {
                auto conj = g.inverse().compose(a).compose(g);
                for (const auto& b : builders)
                    CHECK(b.matrix(a).trace() == b.matrix(conj).trace());
            }
    }
}

TEST_CASE("character tables") {
    auto t2 = character_table(2, 1, WordSystem::plain);
    REQUIRE(t2.shapes == std::vector<std::string>{"1,1", "2"});
    CHECK(t2.values[0][0].integer_value() == 1);
    CHECK(t2.values[0][1].integer_value() == -1);
    CHECK(t2.values[1][0].integer_value() == 1);
    CHECK(t2.values[1][1].integer_value() == 1);

    auto t3 = character_table(3, 1, WordSystem::plain);
    REQUIRE(t3.shapes.size() == 3);
    long long sumsq = 0;
    for (int i = 0; i < 3; ++i) {
        long long d = t3.values[i][0].integer_value();
        sumsq += d * d;
    }
    CHECK(sumsq == 6);
    std::multiset<long long> dims{t3.values[0][0].integer_value(),
                                  t3.values[1][0].integer_value(),
                                  t3.values[2][0].integer_value()};
    CHECK(dims == std::multiset<long long>{1, 1, 2});

    // the identity column carries f_lambda
    auto tb = character_table(2, 2, WordSystem::biword);
    CHECK(tb.shapes.size() == 5);
    std::size_t id_col = 0;
    while (!tb.classes[id_col].representative.is_identity()) ++id_col;
    for (std::size_t i = 0; i < tb.shapes.size(); ++i)
        CHECK(tb.values[i][id_col] == CycloInt(1, count_standard(bipartitions_of(2)[i])));
}

TEST_CASE("homomorphism on random pairs") {
    auto lam = P({2, 2});
    RepBuilder b(lam);
    for (int t = 0; t < 30; ++t) {
        auto s = random_element(4, 1, rng);
        auto u = random_element(4, 1, rng);
        CHECK(b.matrix(s.compose(u)) == b.matrix(s).multiply(b.matrix(u)));
    }
    auto mlam = MultiPartition({P({1}), P({1}), P({1})});
    RepBuilder mb(mlam);
    for (int t = 0; t < 30; ++t) {
        auto s = random_element(3, 3, rng);
        auto u = random_element(3, 3, rng);
        CHECK(mb.matrix(s.compose(u)) == mb.matrix(s).multiply(mb.matrix(u)));
    }
    auto blam = BiPartition(P({1}), P({2}));
    RepBuilder bb(blam);
    for (int t = 0; t < 30; ++t) {
        auto s = to_signed(random_element(3, 2, rng));
        auto u = to_signed(random_element(3, 2, rng));
        CHECK(bb.matrix(s.compose(u)) == bb.matrix(s).multiply(bb.matrix(u)));
    }
}

TEST_CASE("entry integrality") {
    for (int t = 0; t < 10; ++t) {
        auto s = random_element(4, 1, rng);
        for (const auto& lam : partitions_of(4)) {
            RepMatrix m = rep_matrix(lam, s.permutation());
            for (const auto& row : m.entries())
                for (const auto& v : row) CHECK(v.is_integer());
        }
        auto bs = to_signed(random_element(3, 2, rng));
        for (const auto& blam : bipartitions_of(3)) {
            RepMatrix m = rep_matrix(blam, bs);
            for (const auto& row : m.entries())
                for (const auto& v : row) CHECK(v.is_integer());
        }
    }
}

TEST_CASE("flavor mismatches rejected") {
    RepBuilder b(P({2, 1}));
    CHECK_THROWS_AS(b.matrix(MonomialElement::identity(3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(b.matrix(SignedPermutation::identity(3)), std::invalid_argument);
    CHECK_THROWS_AS(b.matrix(Permutation::identity(4)), std::invalid_argument);
    RepBuilder mb(MultiPartition({P({1}), P({1})}));
    CHECK_THROWS_AS(mb.matrix(MonomialElement::identity(2, 3)), std::invalid_argument);
}

TEST_CASE("verify suites pass at small sizes") {
    CHECK(verify(WordSystem::plain, 3, 1, "all").all_pass());
    CHECK(verify(WordSystem::rword, 2, 2, "all").all_pass());
    CHECK(verify(WordSystem::biword, 2, 2, "all").all_pass());
    CHECK(verify(WordSystem::rword, 2, 4, "dimension").all_pass());
    CHECK_THROWS_AS(verify(WordSystem::plain, 3, 1, "bogus"), std::invalid_argument);

    auto report = verify(WordSystem::plain, 3, 1, "all");
    std::set<std::string> suites;
    for (const auto& c : report.checks) suites.insert(c.suite);
    CHECK(suites.size() == 7);
}
