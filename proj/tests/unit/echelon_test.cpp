#include "pivar/echelon.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pivar;

namespace {

IntRow row(std::initializer_list<long> dense) {
    IntRow r;
    int c = 0;
    for (long v : dense) {
        if (v)
            r.push_back({c, Integer(v)});
        ++c;
    }
    return r;
}

// Rank over Q by plain rational Gaussian elimination on a dense matrix.
int dense_rank(std::vector<std::vector<Rational>> m) {
    int rank = 0;
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        int p = rank;
        while (p < static_cast<int>(m.size()) && m[p][c] == 0)
            ++p;
        if (p == static_cast<int>(m.size()))
            continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (static_cast<int>(r) == rank || m[r][c] == 0)
                continue;
            Rational f = m[r][c] / m[rank][c];
            for (int j = 0; j < cols; ++j)
                m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST(RowEchelon, SmallExample) {
    RowEchelon e(3);
    EXPECT_TRUE(e.insert(row({2, 4, 0})));
    EXPECT_FALSE(e.insert(row({1, 2, 0})));
    EXPECT_TRUE(e.insert(row({1, 0, 3})));
    EXPECT_EQ(e.rank(), 2);
    auto rows = e.reduced_rows();
    ASSERT_EQ(rows.size(), 2u);
    // RREF: (1, 0, 3) and (0, 1, -3/2)
    EXPECT_EQ(rows[0], (RatRow{{0, Rational(1)}, {2, Rational(3)}}));
    EXPECT_EQ(rows[1], (RatRow{{1, Rational(1)}, {2, Rational(-3, 2)}}));
    EXPECT_TRUE(e.contains(RatRow{{0, Rational(1, 2)}, {1, Rational(1)}}));
    EXPECT_FALSE(e.contains(RatRow{{2, Rational(1)}}));
}

TEST(RowEchelon, MatchesDenseRankOnRandomMatrices) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> value(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = 1 + trial % 9, cols = 1 + (trial * 7) % 8;
        std::vector<std::vector<Rational>> dense(rows, std::vector<Rational>(cols));
        RowEchelon e(cols);
        for (int r = 0; r < rows; ++r) {
            IntRow sparse;
            for (int c = 0; c < cols; ++c) {
                int v = value(rng) * (rng() % 3 == 0);
                dense[r][c] = v;
                if (v)
                    sparse.push_back({c, Integer(v)});
            }
            e.insert(sparse);
        }
        EXPECT_EQ(e.rank(), dense_rank(dense));
        // Reduced rows: pivot 1 and zero in every other pivot column.
        auto reduced = e.reduced_rows();
        auto pivots = e.pivot_columns();
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            EXPECT_EQ(reduced[i].front().col, pivots[i]);
            EXPECT_EQ(reduced[i].front().value, 1);
            for (const auto& entry : reduced[i])
                for (std::size_t j = 0; j < pivots.size(); ++j)
                    if (j != i)
                        EXPECT_NE(entry.col, pivots[j]);
        }
    }
}
