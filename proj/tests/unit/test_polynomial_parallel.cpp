#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>

#include "sidkit/parallel.hpp"
#include "sidkit/polynomial.hpp"

using namespace sidkit;

TEST(Polynomial, RootsOfKnownFactors) {
  // (z - 2)(z + 0.5)(z^2 + 0.25) = z^4 - 1.5 z^3 - 0.75 z^2 - 0.375 z - 0.25
  const std::vector<double> c{-0.25, -0.375, -0.75, -1.5, 1.0};
  auto r = poly::roots(c);
  ASSERT_EQ(r.size(), 4u);
  std::vector<poly::Complex> expected{{2.0, 0.0}, {-0.5, 0.0}, {0.0, 0.5}, {0.0, -0.5}};
  for (const auto& e : expected) {
    const auto best = *std::min_element(r.begin(), r.end(), [&](auto a, auto b) { return std::abs(a - e) < std::abs(b - e); });
    EXPECT_LT(std::abs(best - e), 1e-12);
  }
}

TEST(Polynomial, TrailingZerosIgnored) {
  EXPECT_EQ(poly::roots(std::vector<double>{1.0, 1.0, 0.0, 0.0}).size(), 1u);
  EXPECT_TRUE(poly::roots(std::vector<double>{3.0}).empty());
  EXPECT_EQ(poly::evaluate(std::vector<double>{1.0, 2.0, 3.0}, {2.0, 0.0}), poly::Complex(17.0, 0.0));
}

TEST(Parallel, EveryIndexOnceAtAnyThreadCount) {
  for (int t : {1, 2, 3, 8}) {
    set_threads(t);
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    EXPECT_EQ(std::accumulate(hits.begin(), hits.end(), 0), 1000);
    EXPECT_EQ(*std::min_element(hits.begin(), hits.end()), 1);
  }
  set_threads(1);
}

TEST(Parallel, WorkerExceptionPropagates) {
  set_threads(4);
  EXPECT_THROW(parallel_for(100, [](std::size_t i) {
                 if (i == 77) throw std::runtime_error("boom");
               }),
               std::runtime_error);
  set_threads(0);
  EXPECT_EQ(threads(), 1);
}
