#include "bhinfo/gedanken.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bhinfo/constants.hpp"
#include "bhinfo/errors.hpp"
#include "test_support.hpp"

namespace bhinfo {
namespace {

using std::numbers::pi;
using testing::Gen;

const AssumptionCheck& check(const GedankenReport& r, const std::string& name) {
  for (const auto& c : r.assumption_checks)
    if (c.name == name) return c;
  throw std::out_of_range(name);
}

TEST(EntropyLedger, Totals) {
  EntropyLedger l;
  l.add("a", 5.0, 0.0);
  l.add("b", 0.0, 7.0);
  EXPECT_DOUBLE_EQ(l.delta_total(), 2.0);
  EXPECT_TRUE(l.gsl_satisfied());
  l.add("c", 3.0, 0.0);
  EXPECT_FALSE(l.gsl_satisfied());
}

TEST(EntropyLedger, SlackIsRelativeToLargestChange) {
  EntropyLedger l;
  l.add("in", 1e40, 0.0);
  l.add("out", 0.0, 1e40 * (1.0 - 1e-12));
  EXPECT_TRUE(l.gsl_satisfied());
  EntropyLedger m;
  m.add("in", 1e40, 0.0);
  m.add("out", 0.0, 1e40 * (1.0 - 1e-6));
  EXPECT_FALSE(m.gsl_satisfied());
}

// ---- collapse ----------------------------------------------------------

TEST(SusskindCollapse, VerdictFollowsHoleEntropy) {
  const double m = 1e15;
  const double radius = 3.0 * geometrized_mass(m);
  const double area = sphere_area(radius);
  const double s_bh = entropy(make_schwarzschild(m));

  const auto ok = susskind_collapse(system_from_mass(m, radius, 0.5 * s_bh), area);
  EXPECT_TRUE(ok.applicable());
  EXPECT_EQ(ok.gsl_verdict(), std::optional<bool>(true));
  EXPECT_REL(ok.quantity("black_hole_entropy").value, s_bh, 1e-14);
  EXPECT_GT(ok.quantity("holographic_limit").value, s_bh);

  const auto bad = susskind_collapse(system_from_mass(m, radius, 2.0 * s_bh), area);
  EXPECT_EQ(bad.gsl_verdict(), std::optional<bool>(false));
  EXPECT_REL(bad.ledger.delta_total(), -s_bh, 1e-12);
}

TEST(SusskindCollapse, Errors) {
  const double radius = 3.0 * geometrized_mass(1e15);
  EXPECT_THROW(susskind_collapse(system_from_mass(1e15, radius), sphere_area(radius)),
               DomainError);
  const double tiny = 0.1 * sphere_area(2.0 * geometrized_mass(1e15));
  EXPECT_THROW(susskind_collapse(system_from_mass(1e15, radius, 1.0), tiny),
               DomainError);
}

TEST(SusskindCollapse, GslImpliesHolographicBound) {
  Gen gen(41);
  for (int i = 0; i < 500; ++i) {
    const double m = gen.log_uniform(1e-3, 1e35);
    const double rg = 2.0 * geometrized_mass(m);
    const double radius = rg * gen.log_uniform(1.0, 1e3);
    const double area = sphere_area(radius) * gen.uniform(1.0, 3.0);
    const double s = gen.log_uniform(1.0, 10.0) * entropy(make_schwarzschild(m)) /
                     gen.log_uniform(1.0, 100.0);
    const auto r = susskind_collapse(system_from_mass(m, radius, s), area);
    if (r.ledger.gsl_satisfied()) {
      EXPECT_LE(s, r.quantity("holographic_limit").value * (1.0 + 1e-9));
    }
  }
}

// ---- capsule -----------------------------------------------------------

TEST(CapsuleLowering, LimitAnchor) {
  const auto bh = make_schwarzschild(1e30);
  const auto r = capsule_lowering(bh, 1.0, 1.0, 0.0);
  EXPECT_REL(r.quantity("capsule_limit").value, 1.78617666e38, 1e-8);
  EXPECT_REL(r.quantity("capsule_limit").value, 2.0 * pi * kC / kHbar, 1e-14);
  EXPECT_REL(r.quantity("delta_area_min").value, capsule_area_increase(1.0, 1.0),
             1e-15);
}

TEST(CapsuleLowering, GainEqualsCapsuleLimit) {
  const auto bh = make_schwarzschild(1e30);
  const double limit = 2.0 * pi * 5.0 * 0.2 * kC / kHbar;
  const auto at = capsule_lowering(bh, 5.0, 0.2, limit);
  EXPECT_EQ(at.gsl_verdict(), std::optional<bool>(true));
  const auto above = capsule_lowering(bh, 5.0, 0.2, limit * (1.0 + 1e-6));
  EXPECT_EQ(above.gsl_verdict(), std::optional<bool>(false));
}

TEST(CapsuleLowering, AreaIncreaseIndependentOfHole) {
  const auto a = capsule_lowering(make_schwarzschild(1e30), 1.0, 1.0, 0.0);
  const auto b = capsule_lowering(make_black_hole_from_ratios(3e31, 0.4, 0.7),
                                  1.0, 1.0, 0.0);
  EXPECT_EQ(a.quantity("delta_area_min").value, b.quantity("delta_area_min").value);
}

TEST(CapsuleLowering, OversizedCapsuleIsInapplicable) {
  const auto bh = make_schwarzschild(1e15);
  const auto r = capsule_lowering(bh, 1e-3, bh.outer_radius(), 0.0);
  EXPECT_FALSE(check(r, "hole_accepts_capsule").passed);
  EXPECT_FALSE(r.applicable());
  EXPECT_FALSE(r.gsl_verdict().has_value());
  EXPECT_THROW(capsule_lowering(bh, 0.0, 1.0, 0.0), DomainError);
  EXPECT_THROW(capsule_lowering(bh, 1.0, 1.0, -1.0), DomainError);
}

// ---- infall ------------------------------------------------------------

MaterialSystem gram(double s) { return system_from_mass(1.0, 1.0, s, "gram"); }

TEST(Infall, EntropyLimitIsWeakUniversalBound) {
  for (double zeta : {1.0, 10.0, 1e3}) {
    for (double nu : {1.0, 1.5, 2.0}) {
      const EmissionParameters p{.nu = nu};
      const auto r = infall_experiment(gram(1.0), zeta, p);
      EXPECT_REL(r.quantity("entropy_limit").value,
                 weak_universal_bound(gram(1.0), nu, zeta), 1e-12);
    }
  }
}

TEST(Infall, VerdictAroundTheLimit) {
  const double limit = weak_universal_bound(gram(0.0), 1.5, 10.0);
  const auto ok = infall_experiment(gram(0.9 * limit), 10.0);
  EXPECT_TRUE(ok.applicable());
  EXPECT_EQ(ok.gsl_verdict(), std::optional<bool>(true));
  const auto bad = infall_experiment(gram(1.1 * limit), 10.0);
  EXPECT_EQ(bad.gsl_verdict(), std::optional<bool>(false));
}

TEST(Infall, HostHoleOverload) {
  const double M = 10.0;
  const auto bh = make_schwarzschild(mass_from_geometrized(M));
  const auto a = infall_experiment(gram(1.0), bh);
  const auto b = infall_experiment(gram(1.0), 10.0);
  EXPECT_REL(a.quantity("entropy_limit").value, b.quantity("entropy_limit").value,
             1e-12);
  EXPECT_THROW(
      infall_experiment(gram(1.0), make_black_hole_from_ratios(1e30, 0.0, 0.5)),
      DomainError);
}

TEST(Infall, AssumptionFailures) {
  EXPECT_THROW(infall_experiment(gram(1.0), 0.5), DomainError);
  EXPECT_THROW(infall_experiment(system_from_mass(1.0, 1.0), 10.0), DomainError);
  // Nucleon-sized object: not composite.
  const auto nucleon = system_from_mass(1.67262192e-24, 1e-13, 0.0);
  const auto r = infall_experiment(nucleon, 10.0);
  EXPECT_FALSE(check(r, "composite").passed);
  EXPECT_FALSE(r.gsl_verdict().has_value());
  // Strong self-gravity.
  const auto dense = system_from_mass(1e28, 1.0, 0.0);
  EXPECT_FALSE(check(infall_experiment(dense, 1e3), "weak_gravity").passed);
}

TEST(Infall, PressureRatioNeverExceedsItsBound) {
  Gen gen(43);
  for (int i = 0; i < 1000; ++i) {
    const double m = gen.log_uniform(1e-25, 1e25);
    const double radius = gen.log_uniform(1e-14, 1e6);
    const double zeta = gen.log_uniform(1.0, 1e6);
    const EmissionParameters p{.gamma_bar = gen.uniform(0.5, 3.0),
                               .n_species = gen.log_uniform(1.0, 1e4)};
    const auto r = infall_experiment(system_from_mass(m, radius, 0.0), zeta, p);
    EXPECT_LE(r.quantity("pressure_ratio").value,
              pressure_ratio_bound(zeta, p) * (1.0 + 1e-12));
  }
}

TEST(DropDistance, Formula) {
  const auto sys = gram(0.0);
  const auto d = drop_distance(sys, 8.0, {.n_species = 2.0});
  const double x = 8.0 * compositeness(sys) / 2.0;
  EXPECT_REL(d.over_M, 780.0 * std::cbrt(x * x), 1e-12);
  EXPECT_REL(d.threshold, 36.0 * 4.0, 1e-14);
  EXPECT_TRUE(d.passed);
  EXPECT_REL(d.distance, d.over_M * 8.0, 1e-14);
}

// ---- merger ------------------------------------------------------------

TEST(Merger, EqualMassesDoubleTheArea) {
  const auto bh = make_schwarzschild(1e20);
  const auto r = merger(bh, bh);
  EXPECT_REL(r.quantity("area_ratio").value, 2.0, 1e-14);
  EXPECT_TRUE(r.applicable());
  EXPECT_EQ(r.gsl_verdict(), std::optional<bool>(true));
  EXPECT_THROW(merger(bh, make_black_hole_from_ratios(1e20, 0.1, 0.0)), DomainError);
}

TEST(Merger, AreaTheoremOnRandomPairs) {
  Gen gen(47);
  for (int i = 0; i < 2000; ++i) {
    const double m1 = gen.log_uniform(1e-4, 1e40);
    const double m2 = gen.log_uniform(1e-4, 1e40);
    const auto r = merger(make_schwarzschild(m1), make_schwarzschild(m2));
    EXPECT_GE(r.quantity("area_ratio").value, 1.0);
    EXPECT_TRUE(r.ledger.gsl_satisfied());
  }
}

// A_f / (A_1 + A_2) - 1 = 2q / (1 + q^2) for mass ratio q.
TEST(Merger, AreaExcessMatchesMassRatio) {
  Gen gen(53);
  for (int i = 0; i < 500; ++i) {
    const double m1 = gen.log_uniform(1e2, 1e35);
    const double q = gen.log_uniform(1e-6, 1.0);
    const auto r = merger(make_schwarzschild(m1), make_schwarzschild(q * m1));
    EXPECT_REL(r.quantity("area_ratio").value - 1.0, 2.0 * q / (1.0 + q * q), 1e-6);
  }
}

}  // namespace
}  // namespace bhinfo
