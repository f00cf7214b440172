#include <gtest/gtest.h>

#include <set>

#include "printers.hpp"
#include "polyrep/partitions.hpp"

using namespace polyrep;

namespace {

// Brute force: all nonincreasing sequences summing to n, built recursively.
void brute(int n, int max_part, std::vector<int>& cur, std::set<std::vector<int>>& out) {
  if (n == 0) {
    out.insert(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    brute(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::size_t brute_count(int n) {
  std::set<std::vector<int>> out;
  std::vector<int> cur;
  brute(n, n, cur, out);
  return out.size();
}

}  // namespace

TEST(Partition, ValidatesParts) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_EQ(Partition::from_unsorted({1, 3, 0, 2}), Partition({3, 2, 1}));
  EXPECT_EQ(Partition({3, 1, 1}).to_string(), "[3,1,1]");
  EXPECT_EQ(Partition().to_string(), "[]");
  EXPECT_EQ(Partition({2, 1}).join(Partition({3, 1})), Partition({3, 2, 1, 1}));
  EXPECT_EQ(Partition({3, 1, 1}).multiplicities(), (std::vector<std::pair<int, int>>{{3, 1}, {1, 2}}));
}

TEST(Enumerate, SmallCases) {
  EXPECT_EQ(enumerate(0), std::vector<Partition>{Partition()});
  EXPECT_EQ(enumerate(3), (std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}}));
  EXPECT_EQ(enumerate(10).size(), 42u);
}

TEST(Enumerate, CountsAndStrictOrder) {
  for (int n = 0; n <= 14; ++n) {
    const auto ps = enumerate(n);
    ASSERT_EQ(ps.size(), brute_count(n)) << n;
    if (n > 0) ASSERT_EQ(ps.front(), Partition({n}));
    for (std::size_t i = 1; i < ps.size(); ++i) ASSERT_TRUE(ps[i - 1] > ps[i]);
    for (const auto& p : ps) ASSERT_EQ(p.size(), n);
  }
}

TEST(IsPRegular, Examples) {
  EXPECT_TRUE(is_p_regular(Partition({3, 1, 1}), 2));
  EXPECT_FALSE(is_p_regular(Partition({4, 1}), 2));
  std::vector<Partition> reg;
  for (const auto& p : enumerate(4))
    if (is_p_regular(p, 2)) reg.push_back(p);
  EXPECT_EQ(reg, (std::vector<Partition>{{3, 1}, {1, 1, 1, 1}}));
}

TEST(Z, Examples) {
  EXPECT_EQ(z(Partition({2, 1})), 2);
  EXPECT_EQ(z(Partition({1, 1, 1})), 6);
  EXPECT_EQ(z(Partition({3})), 3);
  EXPECT_EQ(z(Partition()), 1);
}

TEST(Z, ClassSizesSumToFactorial) {
  for (int n = 0; n <= 8; ++n) {
    const Integer fact = factorial(n);
    Integer total = 0;
    for (const auto& p : enumerate(n)) {
      ASSERT_EQ(fact % z(p), 0);
      total += fact / z(p);
    }
    ASSERT_EQ(total, fact) << n;
  }
}

TEST(IsPrime, Small) {
  std::vector<int> primes;
  for (int n = -3; n < 30; ++n)
    if (is_prime(n)) primes.push_back(n);
  EXPECT_EQ(primes, (std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
}

TEST(EnumerateMulti, Examples) {
  EXPECT_EQ(enumerate_multi(1, 3).size(), 3u);
  const auto all = enumerate_multi(2, 2);
  const std::vector<MultiPartition> expected{
      MultiPartition({Partition({2}), Partition()}), MultiPartition({Partition({1, 1}), Partition()}),
      MultiPartition({Partition({1}), Partition({1})}), MultiPartition({Partition(), Partition({2})}),
      MultiPartition({Partition(), Partition({1, 1})})};
  EXPECT_EQ(all, expected);
  EXPECT_EQ(all.front().to_string(), "[[2],[]]");

  const auto odd = enumerate_multi(2, 2, {}, [](int part) { return part % 2 != 0; });
  EXPECT_EQ(odd, (std::vector<MultiPartition>{MultiPartition({Partition({1, 1}), Partition()}),
                                              MultiPartition({Partition({1}), Partition({1})}),
                                              MultiPartition({Partition(), Partition({1, 1})})}));
}

TEST(EnumerateMulti, ComponentFilterAndUniqueness) {
  const auto first_only = enumerate_multi(3, 3, [](std::size_t c) { return c == 0; });
  EXPECT_EQ(first_only.size(), 3u);
  for (const auto& m : first_only) EXPECT_TRUE(m[1].empty() && m[2].empty());
  const auto all = enumerate_multi(3, 4);
  EXPECT_EQ(std::set<MultiPartition>(all.begin(), all.end()).size(), all.size());
  for (const auto& m : all) EXPECT_EQ(m.size(), 4);
}

TEST(EnumerateMulti, GeneratingFunctionCount) {
  // prod_{p does not divide m} (1 - t^m)^(-M)
  for (int p : {2, 3}) {
    for (std::size_t M = 1; M <= 3; ++M) {
      std::vector<long> c(9, 0);
      c[0] = 1;
      for (std::size_t k = 0; k < M; ++k)
        for (int m = 1; m <= 8; ++m) {
          if (m % p == 0) continue;
          for (int i = m; i <= 8; ++i) c[i] += c[i - m];
        }
      for (int n = 0; n <= 8; ++n)
        ASSERT_EQ(static_cast<long>(enumerate_multi(M, n, {}, [p](int part) { return part % p != 0; }).size()), c[n])
            << "p=" << p << " M=" << M << " n=" << n;
    }
  }
}
