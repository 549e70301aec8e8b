#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <random>

namespace bhinfo::testing {

inline double relative_error(double actual, double expected) {
  if (expected == 0.0) return std::abs(actual);
  return std::abs(actual - expected) / std::abs(expected);
}

inline ::testing::AssertionResult near_relative(double actual, double expected,
                                                double tolerance) {
  const double err = relative_error(actual, expected);
  if (err <= tolerance) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure()
         << "actual " << actual << " vs expected " << expected
         << ": relative error " << err << " > " << tolerance;
}

#define EXPECT_REL(actual, expected, tol) \
  EXPECT_TRUE(::bhinfo::testing::near_relative((actual), (expected), (tol)))

// Deterministic generators for hand-rolled property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  // log-uniform on [lo, hi], lo > 0
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  // (Q/M, a/M) uniformly inside the disk of radius r_max.
  std::pair<double, double> kn_ratios(double r_max) {
    const double r = r_max * std::sqrt(uniform(0.0, 1.0));
    const double phi = uniform(0.0, 2.0 * 3.14159265358979323846);
    return {r * std::cos(phi), std::abs(r * std::sin(phi))};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bhinfo::testing
