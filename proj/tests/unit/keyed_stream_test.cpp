#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "pflc/random/keyed_stream.hpp"

namespace pflc::random {
namespace {

TEST(KeyedStream, ReplaysByKey) {
  auto a = KeyedStream::of({1, 2, 3});
  auto b = KeyedStream::of({1, 2, 3});
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(KeyedStream, OrderOfComponentsMatters) {
  EXPECT_NE(KeyedStream::of({1, 2}).key(), KeyedStream::of({2, 1}).key());
  EXPECT_NE(KeyedStream::of({1}).key(), KeyedStream::of({1, 0}).key());
}

TEST(KeyedStream, UnitDrawsInRangeWithSaneMean) {
  auto s = KeyedStream::of({42});
  double total = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = s.next_unit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    total += u;
  }
  // Mean of n uniforms has sd 1/sqrt(12 n).
  EXPECT_NEAR(total / n, 0.5, 5.0 / std::sqrt(12.0 * n));
}

TEST(KeyedStream, DistinctKeysGiveDistinctFirstDraws) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t u = 0; u < 10000; ++u) seen.insert(KeyedStream::of({7, u}).next_u64());
  EXPECT_EQ(seen.size(), 10000u);
}

TEST(KeyedStream, SignedZeroHashesAlike) {
  EXPECT_EQ(key_of(0.0), key_of(-0.0));
  EXPECT_NE(key_of(1.0), key_of(2.0));
  EXPECT_NE(hash_bytes("early"), hash_bytes("late"));
}

}  // namespace
}  // namespace pflc::random
