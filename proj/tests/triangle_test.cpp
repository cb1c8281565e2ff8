#include "hypersolid/triangle.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace hypersolid {
namespace {

std::vector<Nat> Row(const Triangle& t, Index c) {
  const auto r = t.row(c);
  return {r.begin(), r.end()};
}

// Brute-force diagonal: scan the whole (v, n) quadrant up to k.
Nat ScanDiagonal(Index d, Index m, Index k) {
  Nat total = 0;
  for (Index v = 0; v <= k; ++v) {
    for (Index n = 0; n <= k; ++n) {
      if (m * v + n == k) total += hypersolid({v, d, n});
    }
  }
  return total;
}

TEST(TriangleTest, Rows) {
  EXPECT_EQ(Row(build_triangle(1, 4), 4), (std::vector<Nat>{1, 3, 3, 1, 0}));
  EXPECT_EQ(Row(build_triangle(0, 4), 4), (std::vector<Nat>{0, 1, 2, 1, 0}));
  for (Index d = 0; d <= 8; ++d) EXPECT_EQ(Row(build_triangle(d, 0), 0), (std::vector<Nat>{0}));
}

TEST(TriangleTest, Shape) {
  const Triangle t = build_triangle(3, 20);
  EXPECT_EQ(t.d(), 3u);
  EXPECT_EQ(t.c_max(), 20u);
  for (Index c = 0; c <= 20; ++c) {
    ASSERT_EQ(t.row(c).size(), c + 1);
    EXPECT_EQ(t.row(c).back(), 0);
    for (Index v = 0; v <= c; ++v) EXPECT_EQ(t.entry(c, v), hypersolid({v, 3, c - v}));
  }
  EXPECT_THROW(t.row(21), RangeError);
  EXPECT_THROW(t.entry(4, 5), RangeError);
}

TEST(TriangleTest, AdjacentSums) {
  for (Index d = 0; d <= 8; ++d) {
    const Triangle t = build_triangle(d, 24);
    for (Index c = 3; c <= 24; ++c) {
      for (Index v = 1; v < c; ++v) EXPECT_EQ(t.entry(c, v), t.entry(c - 1, v) + t.entry(c - 1, v - 1));
    }
  }
}

TEST(TriangleTest, ColumnCompilation) {
  for (Index d = 0; d <= 8; ++d) {
    for (Index v = 1; v <= 8; ++v) {
      Nat prefix = 0;
      for (Index n = 1; n <= 12; ++n) {
        prefix += hypersolid({v, d, n});
        EXPECT_EQ(prefix, hypersolid({v + 1, d, n}));
      }
    }
  }
}

TEST(RowSumTest, Values) {
  EXPECT_EQ(row_sum(1, 4), 8);
  EXPECT_EQ(row_sum(3, 2), 4);
  EXPECT_EQ(Nat(3) + 1 + 0, row_sum(3, 2));
  for (Index d = 0; d <= 8; ++d) {
    EXPECT_EQ(row_sum(d, 0), 0);
    EXPECT_EQ(row_sum(d, 1), 0);
  }
}

TEST(RowSumTest, MatchesLiteralRowAddition) {
  for (Index d = 0; d <= 8; ++d) {
    const Triangle t = build_triangle(d, 24);
    for (Index c = 0; c <= 24; ++c) {
      Nat literal = 0;
      for (const auto& e : t.row(c)) literal += e;
      EXPECT_EQ(row_sum(d, c), literal) << "d=" << d << " c=" << c;
      if (c >= 3) {
        EXPECT_EQ(row_sum(d, c), 2 * row_sum(d, c - 1));
        Nat earlier = 0;
        for (Index j = 2; j < c; ++j) earlier += row_sum(d, j);
        EXPECT_EQ(row_sum(d, c) - (d + 1), earlier);
      }
    }
  }
}

TEST(CompileRowTest, Values) {
  EXPECT_EQ(compile_row(1, 2, 2), 6);
  EXPECT_EQ(hypersolid({2, 1, 3}), 6);
  // Addends 2, 5, 9, 14 for v = 0..3 at n = 3, d = 2.
  EXPECT_EQ(compile_row(2, 3, 3), 30);
  EXPECT_EQ(hypersolid({3, 2, 4}), 30);
  for (Index d = 0; d <= 5; ++d) {
    for (Index n = 0; n <= 6; ++n) EXPECT_EQ(compile_row(d, n, 0), hypersolid({0, d, n}));
  }
}

TEST(CompileRowTest, NextRowEntryFromRankTwo) {
  for (Index d = 0; d <= 8; ++d) {
    for (Index n = 2; n <= 12; ++n) {
      for (Index v = 0; v <= 8; ++v) EXPECT_EQ(compile_row(d, n, v), hypersolid({v, d, n + 1}));
    }
  }
}

// The n = 1 row misses S(0,d,1) = 0 and the n = 0 row is all zeros.
TEST(CompileRowTest, LowRankRowsFallShort) {
  EXPECT_EQ(compile_row(3, 1, 2), 2);
  EXPECT_EQ(hypersolid({2, 3, 2}), 5);
  EXPECT_EQ(compile_row(3, 0, 2), 0);
  EXPECT_EQ(hypersolid({2, 3, 1}), 1);
  EXPECT_EQ(compile_row(0, 1, 4), hypersolid({4, 0, 2}));
}

TEST(DiagonalTest, Values) {
  EXPECT_EQ(diagonal_sum({2, 2, 5}), 8);
  for (Index d = 0; d <= 6; ++d) EXPECT_EQ(diagonal_sum({d, 2, 2}), d);
  EXPECT_EQ(diagonal_sum({0, 2, 8}), 8);
  EXPECT_EQ(ScanDiagonal(0, 2, 8), 8);
  EXPECT_THROW(diagonal_sum({0, 1, 4}), RangeError);
  EXPECT_THROW(diagonal_sum({0, 2, 1}), RangeError);
}

TEST(DiagonalTest, MatchesQuadrantScan) {
  for (Index d = 0; d <= 6; ++d) {
    for (Index m = 2; m <= 4; ++m) {
      for (Index k = 2; k <= 30; ++k) EXPECT_EQ(diagonal_sum({d, m, k}), ScanDiagonal(d, m, k));
    }
  }
}

TEST(RecurrenceTest, Sequences) {
  EXPECT_EQ(recurrence_sequence(1, 2, 6), (std::vector<Nat>{1, 2, 3, 5, 8, 13}));
  EXPECT_EQ(recurrence_sequence(0, 2, 7), (std::vector<Nat>{0, 1, 1, 2, 3, 5, 8}));
  EXPECT_EQ(recurrence_sequence(0, 3, 9), (std::vector<Nat>{0, 0, 1, 1, 1, 2, 3, 4, 6}));
  EXPECT_THROW(recurrence_sequence(0, 1, 5), RangeError);
  EXPECT_THROW(recurrence_sequence(0, 2, 1), RangeError);
}

TEST(RecurrenceTest, FibonacciCoefficientsInD) {
  // d, d+1, 2d+1, 3d+2, 5d+3, 8d+5, 13d+8, 21d+13, 34d+21
  const int x[] = {1, 1, 2, 3, 5, 8, 13, 21, 34};
  const int y[] = {0, 1, 1, 2, 3, 5, 8, 13, 21};
  for (Index d = 0; d <= 6; ++d) {
    const auto a = recurrence_sequence(d, 2, 9);
    for (int j = 0; j < 9; ++j) EXPECT_EQ(a[j], Nat(x[j]) * d + y[j]) << "d=" << d << " j=" << j;
  }
}

TEST(RecurrenceTest, HigherOrderRecurrences) {
  for (Index d = 0; d <= 6; ++d) {
    const auto fib = recurrence_sequence(d, 2, 29);
    EXPECT_EQ(fib[0], d);
    EXPECT_EQ(fib[1], d + 1);
    for (Index m = 2; m <= 4; ++m) {
      const auto a = recurrence_sequence(d, m, 29);
      for (std::size_t k = m; k < a.size(); ++k) EXPECT_EQ(a[k], a[k - 1] + a[k - m]) << "m=" << m << " k=" << k;
    }
  }
}

TEST(PascalTest, EntryChecks) {
  EXPECT_TRUE(pascal_entry_check(4, 2));
  EXPECT_TRUE(pascal_entry_check(10, 5));
  EXPECT_EQ(build_triangle(0, 10).entry(10, 5), 70);
  for (Index c = 0; c <= 22; ++c) {
    EXPECT_TRUE(pascal_entry_check(c, 0));
    for (Index v = 0; v <= c; ++v) EXPECT_TRUE(pascal_entry_check(c, v)) << c << "," << v;
  }
  EXPECT_FALSE(pascal_entry_check(3, 4));
}

TEST(PascalTest, ZeroPaddedPascalRows) {
  // Additive Pascal rows, shifted two rows down and padded with a zero on each side.
  std::vector<Nat> pascal{1};
  const Triangle t = build_triangle(0, 22);
  for (Index c = 2; c <= 22; ++c) {
    std::vector<Nat> expected{0};
    expected.insert(expected.end(), pascal.begin(), pascal.end());
    expected.push_back(0);
    EXPECT_EQ(Row(t, c), expected) << "c=" << c;
    std::vector<Nat> next(pascal.size() + 1, 1);
    for (std::size_t i = 1; i < pascal.size(); ++i) next[i] = pascal[i - 1] + pascal[i];
    pascal = std::move(next);
  }
}

}  // namespace
}  // namespace hypersolid
