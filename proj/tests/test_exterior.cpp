#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "discsos/exterior.hpp"
#include "test_support.hpp"

using namespace discsos;
using namespace discsos::test;

namespace {

std::vector<std::vector<Rational>> columns_of(const Mat<Rational>& m, const WedgeIndex& cols) {
    std::vector<std::vector<Rational>> out;
    for (int c : cols) {
        std::vector<Rational> v(static_cast<size_t>(m.rows()));
        for (int i = 0; i < m.rows(); ++i) v[static_cast<size_t>(i)] = m(i, c);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Rational> ones(int n) { return std::vector<Rational>(static_cast<size_t>(n), Rational(1)); }

} // namespace

TEST_CASE("combination enumeration is lexicographic") {
    std::vector<WedgeIndex> seen;
    for_each_combination(4, 2, [&](const WedgeIndex& c) { seen.push_back(c); });
    std::vector<WedgeIndex> expect = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(seen == expect);
    std::vector<WedgeIndex> by_first;
    for (int f = 0; f <= 2; ++f)
        for_each_combination_with_first(4, 2, f, [&](const WedgeIndex& c) { by_first.push_back(c); });
    CHECK(by_first == expect);
}

TEST_CASE("wedge norm of simple configurations") {
    CHECK(wedge_norm_sq({{Rational(1), Rational(0), Rational(0)},
                         {Rational(0), Rational(1), Rational(0)}},
                        ones(3)) == Rational(1));
    CHECK(wedge_norm_sq({{Rational(1), Rational(0)}, {Rational(2), Rational(0)}},
                        {Rational(1), Rational(7)}) == Rational(0));
    // v1=(1,1,0), v2=(0,1,1): squared 2x2 minors 1+1+1
    CHECK(wedge_norm_sq({{Rational(1), Rational(1), Rational(0)},
                         {Rational(0), Rational(1), Rational(1)}},
                        ones(3)) == Rational(3));
    // degenerate wedge: more vectors than ambient dimension
    CHECK(wedge_norm_sq({{Rational(1)}, {Rational(2)}}, {Rational(1)}) == Rational(0));
}

TEST_CASE("k_minors on hand examples") {
    CHECK(k_minors(Mat<Rational>::identity(2), 2).size() == 1);
    CHECK(std::get<2>(k_minors(Mat<Rational>::identity(2), 2)[0]) == Rational(1));

    Mat<Rational> m(3, 2, {Rational(1), Rational(2), Rational(3), Rational(4), Rational(5), Rational(6)});
    auto minors = k_minors(m, 2);
    REQUIRE(minors.size() == 3);
    CHECK(std::get<2>(minors[0]) == Rational(-2));
    CHECK(std::get<2>(minors[1]) == Rational(-4));
    CHECK(std::get<2>(minors[2]) == Rational(-2));
    CHECK(std::get<0>(minors[1]) == WedgeIndex{0, 2});

    auto entries = k_minors(m, 1);
    CHECK(entries.size() == 6);
    CHECK(std::get<2>(entries[0]) == Rational(1));
    CHECK(std::get<2>(entries[5]) == Rational(6));

    CHECK_THROWS_AS(k_minors(m, 3), std::invalid_argument);
    CHECK_THROWS_AS(k_minors(m, 0), std::invalid_argument);
}

TEST_CASE("streaming and collected enumerations agree") {
    std::mt19937 rng(11);
    Mat<Rational> m = random_matrix(rng, 5, 4);
    auto collected = k_minors(m, 2);
    size_t at = 0;
    for_each_k_minor(m, 2, [&](const WedgeIndex& r, const WedgeIndex& c, Rational v) {
        REQUIRE(at < collected.size());
        CHECK(std::get<0>(collected[at]) == r);
        CHECK(std::get<1>(collected[at]) == c);
        CHECK(std::get<2>(collected[at]) == v);
        ++at;
    });
    CHECK(at == collected.size());
}

TEST_CASE("weighted minor square sums") {
    CHECK(weighted_minor_square_sum(Mat<Rational>::identity(3), ones(3), 3) == Rational(1));
    Mat<Rational> col(2, 1, {Rational(1), Rational(1)});
    CHECK(weighted_minor_square_sum(col, ones(2), 1) == Rational(2));
    Mat<Rational> m(3, 2, {Rational(1), Rational(0), Rational(0), Rational(1), Rational(1), Rational(1)});
    CHECK(weighted_minor_square_sum(m, {Rational(1), Rational(1), Rational(2)}, 2) == Rational(5));
}

TEST_CASE("cauchy-binet: row-minor route equals column-wedge route") {
    std::mt19937 rng(22);
    std::uniform_int_distribution<int> rows_d(2, 7), cols_d(1, 5);
    for (int rep = 0; rep < 30; ++rep) {
        int rows = rows_d(rng), cols = cols_d(rng);
        int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min({rows, cols, 3})));
        Mat<Rational> m = random_matrix(rng, rows, cols, 3);
        std::vector<Rational> w(static_cast<size_t>(rows));
        for (auto& x : w) x = Rational(1 + static_cast<int>(rng() % 3));
        Rational lhs = weighted_minor_square_sum(m, w, k);
        Rational rhs;
        for_each_combination(cols, k, [&](const WedgeIndex& cs) {
            rhs += wedge_norm_sq(columns_of(m, cs), w);
        });
        CHECK(lhs == rhs);
    }
}

TEST_CASE("wedge norm is unimodular-invariant") {
    std::mt19937 rng(33);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<Rational> v1 = random_coords(rng, 5), v2 = random_coords(rng, 5);
        std::vector<Rational> w;
        for (int i = 0; i < 5; ++i) w.push_back(Rational(1 + static_cast<int>(rng() % 3)));
        std::vector<Rational> v2p = v2;
        for (int i = 0; i < 5; ++i) v2p[static_cast<size_t>(i)] += Rational(3) * v1[static_cast<size_t>(i)];
        CHECK(wedge_norm_sq({v1, v2}, w) == wedge_norm_sq({v1, v2p}, w));
    }
}

TEST_CASE("wedge norm is non-negative, zero iff dependent") {
    std::mt19937 rng(44);
    for (int rep = 0; rep < 15; ++rep) {
        int d = 4;
        std::vector<std::vector<Rational>> vs;
        for (int i = 0; i < 3; ++i) vs.push_back(random_coords(rng, d, 3));
        if (rep % 3 == 0) {
            // force a dependency
            for (int j = 0; j < d; ++j)
                vs[2][static_cast<size_t>(j)] =
                    vs[0][static_cast<size_t>(j)] - Rational(2) * vs[1][static_cast<size_t>(j)];
        }
        Rational nsq = wedge_norm_sq(vs, ones(d));
        CHECK(nsq >= Rational(0));
        Mat<Rational> m(3, d);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < d; ++j) m(i, j) = vs[static_cast<size_t>(i)][static_cast<size_t>(j)];
        CHECK((nsq == Rational(0)) == (rank_gauss(m) < 3));
    }
}

TEST_CASE("parallel fold is byte-identical to sequential") {
    std::mt19937 rng(55);
    Mat<Rational> m = random_matrix(rng, 8, 5, 3);
    std::vector<Rational> w(8, Rational(2));
    for (int k = 1; k <= 3; ++k) {
        Rational seq = weighted_minor_square_sum(m, w, k, 1);
        CHECK(seq == weighted_minor_square_sum(m, w, k, 4));
        CHECK(seq == weighted_minor_square_sum(m, w, k, 13));
    }
}
