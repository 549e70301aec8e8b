#include "bhinfo/entropy_bounds.hpp"

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

// 16 g disk of 6 cm radius; reference values from a 30-digit evaluation.
MaterialSystem disk(std::optional<double> s = std::nullopt) {
  return system_from_mass(16.0, 6.0, s, "disk");
}

TEST(MaterialSystem, Validation) {
  EXPECT_NO_THROW(disk().validate());
  EXPECT_THROW(system_from_mass(0.0, 1.0).validate(), DomainError);
  EXPECT_THROW(system_from_mass(1.0, -1.0).validate(), DomainError);
  EXPECT_THROW(system_from_mass(1.0, 1.0, -2.0).validate(), DomainError);
  EXPECT_REL(disk().energy, 16.0 * kC * kC, 1e-15);
}

TEST(Ratios, Examples) {
  EXPECT_REL(compositeness(disk()), 2.72907691103222418e39, 1e-12);
  EXPECT_REL(compositeness(system_from_mass(1.67262192e-24, 1e-13)),
             4.75491027370665416, 1e-12);
  EXPECT_REL(weak_gravity_ratio(system_from_mass(5.972e27, 6.371e8)),
             6.96107818665463355e-10, 1e-12);
}

TEST(Bounds, DiskValues) {
  const auto d = disk();
  EXPECT_REL(universal_bound(d), 1.71472959495607225e40, 1e-12);
  EXPECT_REL(nats_to_bits(universal_bound(d)), 2.47383188310866631e40, 1e-12);
  EXPECT_REL(nats_to_bits(holographic_bound(sphere_area(6.0))),
             6.24607416583434093e67, 1e-12);
  EXPECT_REL(gour_bound(d), 3.77582477164575510e29, 1e-12);
  EXPECT_REL(weak_universal_bound(d, 1.5, 10.0), 1.02883775697364335e42, 1e-12);
}

TEST(Bounds, Coefficients) {
  EXPECT_DOUBLE_EQ(kUniversalCoefficient, 2.0 * pi);
  EXPECT_DOUBLE_EQ(weak_bound_coefficient(1.5, 1.0), 12.0 * pi);
  EXPECT_REL(universal_bound(disk(), 1.0), compositeness(disk()), 1e-15);
  EXPECT_THROW(weak_universal_bound(disk(), 1.5, 0.5), DomainError);
  EXPECT_THROW(holographic_bound(0.0), DomainError);
}

TEST(Bounds, BlackHoleSaturatesUniversalBound) {
  Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const auto bh = make_schwarzschild(gen.log_uniform(1e-4, 1e40));
    EXPECT_REL(universal_bound(system_from_black_hole(bh)), entropy(bh), 1e-12);
  }
}

TEST(BoundReport, DiskReport) {
  const auto r = bound_report(disk(1e30), sphere_area(6.0));
  EXPECT_TRUE(r.composite);
  EXPECT_TRUE(r.weakly_gravitating);
  EXPECT_TRUE(r.ordering_consistent);
  ASSERT_EQ(r.entries.size(), 4u);
  for (const auto& e : r.entries) EXPECT_TRUE(e.applicable) << e.name;
  EXPECT_EQ(r.tightest_applicable, "gour");
  // 1e30 nats is above the unit-coefficient Gour estimate only.
  EXPECT_EQ(r.violations, std::vector<std::string>{"gour"});
  EXPECT_FALSE(*r.entry("universal").violated);
  EXPECT_THROW(r.entry("nope"), std::out_of_range);
}

TEST(BoundReport, NucleonIsNotComposite) {
  const auto r = bound_report(system_from_mass(1.67262192e-24, 1e-13),
                              sphere_area(1e-13));
  EXPECT_FALSE(r.composite);
  EXPECT_FALSE(r.entry("universal").applicable);
  EXPECT_FALSE(r.entry("gour").applicable);
  EXPECT_EQ(r.tightest_applicable, "holographic");
  EXPECT_FALSE(r.entry("holographic").violated.has_value());
}

TEST(BoundReport, BlackHoleMarkedFormally) {
  const auto bh = make_schwarzschild(1e15);
  const auto sys = system_from_black_hole(bh);
  const auto r = bound_report(sys, horizon_area(bh));
  EXPECT_FALSE(r.weakly_gravitating);
  EXPECT_TRUE(r.entry("universal").applicable);
  EXPECT_FALSE(r.entry("weak_universal").applicable);
  EXPECT_FALSE(r.entry("gour").applicable);
  EXPECT_REL(r.entry("universal").limit, r.entry("holographic").limit, 1e-12);
}

TEST(BoundReport, ThresholdsAreConfigurable) {
  const auto nucleon = system_from_mass(1.67262192e-24, 1e-13);
  BoundOptions o;
  o.thresholds.composite_min = 1.0;
  EXPECT_TRUE(bound_report(nucleon, sphere_area(1e-13), o).composite);
}

TEST(BoundReport, RejectsSurfaceSmallerThanSystem) {
  EXPECT_THROW(bound_report(disk(), 0.5 * sphere_area(6.0)), DomainError);
}

// universal / holographic = 2 G E / (c^4 R), so weak gravity orders them.
TEST(BoundProperties, OrderingForWeaklyGravitatingSystems) {
  Gen gen(13);
  for (int i = 0; i < 1000; ++i) {
    const double m = gen.log_uniform(1e-20, 1e30);
    const double r_min = 100.0 * kG * m / (kC * kC);
    const double radius = r_min * gen.log_uniform(1.0, 1e20);
    const auto sys = system_from_mass(m, radius);
    const auto rep = bound_report(sys, sphere_area(radius));
    ASSERT_TRUE(rep.weakly_gravitating);
    EXPECT_TRUE(rep.ordering_consistent);
    EXPECT_REL(universal_bound(sys) / holographic_bound(sphere_area(radius)),
               2.0 * weak_gravity_ratio(sys), 1e-12);
    if (compositeness(sys) > 1.0) {
      EXPECT_LT(gour_bound(sys), universal_bound(sys));
    }
    EXPECT_GE(weak_universal_bound(sys, 1.0, 1.0), universal_bound(sys));
  }
}

}  // namespace
}  // namespace bhinfo
