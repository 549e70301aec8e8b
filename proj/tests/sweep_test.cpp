#include "bhinfo/sweep.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "bhinfo/errors.hpp"
#include "test_support.hpp"

namespace bhinfo {
namespace {

SweepSpec mass_sweep(SweepQuantity q, double from, double to, std::size_t n) {
  SweepSpec s;
  s.variable = SweepVariable::mass;
  s.quantity = q;
  s.from = from;
  s.to = to;
  s.points = n;
  return s;
}

SweepSpec power_sweep(SweepQuantity q, double from, double to, std::size_t n) {
  SweepSpec s = mass_sweep(q, from, to, n);
  s.variable = SweepVariable::power;
  return s;
}

void expect_identical(const std::vector<SweepRow>& a,
                      const std::vector<SweepRow>& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].x, b[i].x) << i;
    EXPECT_EQ(a[i].value, b[i].value) << i;
    EXPECT_EQ(a[i].regime, b[i].regime) << i;
  }
}

TEST(SweepNames, RoundTrip) {
  for (auto q : {SweepQuantity::entropy, SweepQuantity::temperature,
                 SweepQuantity::area, SweepQuantity::radius,
                 SweepQuantity::density, SweepQuantity::mass_loss_rate,
                 SweepQuantity::lifetime, SweepQuantity::capacity_bound,
                 SweepQuantity::pendry_capacity, SweepQuantity::entropy_rate}) {
    EXPECT_EQ(parse_sweep_quantity(to_string(q)), q);
    EXPECT_FALSE(unit_of(q).empty());
  }
  EXPECT_EQ(parse_sweep_variable("power"), SweepVariable::power);
  EXPECT_FALSE(parse_sweep_variable("volume").has_value());
  EXPECT_FALSE(parse_sweep_quantity("colour").has_value());
  EXPECT_EQ(variable_of(SweepQuantity::lifetime), SweepVariable::mass);
  EXPECT_EQ(variable_of(SweepQuantity::capacity_bound), SweepVariable::power);
}

TEST(SweepGrid, EndpointsArePinned) {
  const auto g = sweep_grid(mass_sweep(SweepQuantity::entropy, 1e3, 7.7e21, 37));
  ASSERT_EQ(g.size(), 37u);
  EXPECT_EQ(g.front(), 1e3);
  EXPECT_EQ(g.back(), 7.7e21);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_GT(g[i], g[i - 1]);

  auto lin = mass_sweep(SweepQuantity::entropy, 1.0, 2.0, 5);
  lin.log_spacing = false;
  const auto gl = sweep_grid(lin);
  EXPECT_DOUBLE_EQ(gl[2], 1.5);
  EXPECT_EQ(gl.back(), 2.0);
}

TEST(SweepGrid, SinglePoint) {
  const auto rows = run_sweep_serial(mass_sweep(SweepQuantity::entropy, 1e15, 1e15, 1));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].x, 1e15);
  EXPECT_REL(rows[0].value, 2.65288683132181787e40, 1e-12);
}

TEST(SweepSpec, ValidationErrors) {
  EXPECT_THROW(mass_sweep(SweepQuantity::entropy, 1.0, 2.0, 0).validate(), DomainError);
  EXPECT_THROW(mass_sweep(SweepQuantity::entropy, 2.0, 1.0, 5).validate(), DomainError);
  EXPECT_THROW(mass_sweep(SweepQuantity::entropy, 1.0, 1.0, 5).validate(), DomainError);
  auto neg = power_sweep(SweepQuantity::pendry_capacity, 0.0, 1.0, 5);
  EXPECT_THROW(neg.validate(), DomainError);
  neg.log_spacing = false;
  EXPECT_NO_THROW(neg.validate());
  EXPECT_THROW(mass_sweep(SweepQuantity::capacity_bound, 1.0, 2.0, 5).validate(),
               DomainError);
  EXPECT_THROW(power_sweep(SweepQuantity::entropy, 1.0, 2.0, 5).validate(),
               DomainError);
}

TEST(SweepKernels, SerialAndParallelAgreeBitwise) {
  for (auto q : {SweepQuantity::entropy, SweepQuantity::temperature,
                 SweepQuantity::density, SweepQuantity::lifetime}) {
    auto spec = mass_sweep(q, 1e5, 1e30, 97);
    spec.charge_over_M = q == SweepQuantity::lifetime ? 0.0 : 0.3;
    spec.spin_over_M = q == SweepQuantity::lifetime ? 0.0 : 0.4;
    expect_identical(run_sweep_serial(spec), run_sweep_parallel(spec));
  }
  for (auto q : {SweepQuantity::capacity_bound, SweepQuantity::pendry_capacity,
                 SweepQuantity::entropy_rate}) {
    const auto spec = power_sweep(q, 1e-12, 1e6, 1001);
    expect_identical(run_sweep_serial(spec), run_sweep_parallel(spec));
  }
}

TEST(SweepKernels, ParallelRethrowsLowestIndexError) {
  // Entries below the Planck mass throw.
  auto spec = mass_sweep(SweepQuantity::entropy, 1e-8, 1e3, 50);
  try {
    run_sweep_parallel(spec);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("1e-08"), std::string::npos) << e.what();
  }
}

TEST(SweepKernels, EntropyScalesAsMassSquared) {
  const auto rows = run_sweep_parallel(mass_sweep(SweepQuantity::entropy, 1e5, 1e35, 31));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double ratio = rows[i].x / rows[0].x;
    EXPECT_REL(rows[i].value / rows[0].value, ratio * ratio, 1e-12);
  }
}

TEST(SweepKernels, RegimeTransitionsAreOrdered) {
  const auto rows = run_sweep_parallel(power_sweep(SweepQuantity::capacity_bound,
                                                   1e-8, 1e2, 200));
  int stage = 0;
  bool seen[3] = {false, false, false};
  for (const auto& r : rows) {
    ASSERT_TRUE(r.regime.has_value());
    const int s = static_cast<int>(*r.regime);
    EXPECT_GE(s, stage);
    stage = s;
    seen[s] = true;
  }
  EXPECT_TRUE(seen[0] && seen[1] && seen[2]);
}

TEST(SweepKernels, PointEvaluationMatchesDirectCall) {
  const auto spec = mass_sweep(SweepQuantity::lifetime, 1e12, 1e12, 1);
  EXPECT_EQ(evaluate_sweep_point(spec, 1e12).value, lifetime(1e12));
}

}  // namespace
}  // namespace bhinfo
