#include "bhinfo/entropy_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bhinfo/constants.hpp"
#include "bhinfo/errors.hpp"

namespace bhinfo {

using std::numbers::pi;

void MaterialSystem::validate() const {
  if (!(energy > 0.0)) throw DomainError("system energy must be positive");
  if (!(radius > 0.0)) throw DomainError("system radius must be positive");
  if (entropy && !(*entropy >= 0.0)) {
    throw DomainError("system entropy must be non-negative");
  }
}

MaterialSystem system_from_mass(double mass_g, double radius_cm,
                                std::optional<double> entropy,
                                std::string label) {
  MaterialSystem sys;
  sys.energy = mass_g * kC * kC;
  sys.radius = radius_cm;
  sys.entropy = entropy;
  sys.label = std::move(label);
  sys.validate();
  return sys;
}

MaterialSystem system_from_black_hole(const BlackHole& bh) {
  MaterialSystem sys;
  sys.energy = bh.mass() * kC * kC;
  sys.radius = std::sqrt(horizon_area(bh) / (4.0 * pi));
  sys.entropy = entropy(bh);
  sys.label = "black hole";
  sys.black_hole = true;
  return sys;
}

double compositeness(const MaterialSystem& sys) {
  sys.validate();
  return sys.energy * sys.radius / (kC * kHbar);
}

double weak_gravity_ratio(const MaterialSystem& sys) {
  sys.validate();
  return kG * sys.energy / (std::pow(kC, 4) * sys.radius);
}

double sphere_area(double radius_cm) {
  return 4.0 * pi * radius_cm * radius_cm;
}

double holographic_bound(double area_cm2) {
  if (!(area_cm2 > 0.0)) {
    throw DomainError("holographic_bound: area must be positive");
  }
  const double lp = constants().planck_length;
  return area_cm2 / (4.0 * lp * lp);
}

double universal_bound(const MaterialSystem& sys, double coefficient) {
  sys.validate();
  return coefficient * sys.radius * sys.energy / (kHbar * kC);
}

double weak_bound_coefficient(double nu, double zeta) {
  return 8.0 * pi * nu * zeta;
}

double weak_universal_bound(const MaterialSystem& sys, double nu,
                            double zeta) {
  if (!(zeta >= 1.0)) {
    throw DomainError("weak_universal_bound: zeta = M/R must be at least 1");
  }
  return universal_bound(sys, weak_bound_coefficient(nu, zeta));
}

double gour_bound(const MaterialSystem& sys) {
  return std::pow(compositeness(sys), 0.75);
}

const BoundEntry& BoundReport::entry(const std::string& name) const {
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const BoundEntry& e) { return e.name == name; });
  if (it == entries.end()) throw std::out_of_range("no bound named " + name);
  return *it;
}

BoundReport bound_report(const MaterialSystem& sys, double enclosing_area,
                         const BoundOptions& options) {
  sys.validate();
  if (!(enclosing_area >= sphere_area(sys.radius) * (1.0 - 1e-12))) {
    throw DomainError(
        "bound_report: enclosing surface is smaller than the system");
  }

  BoundReport report;
  report.label = sys.label;
  report.compositeness = compositeness(sys);
  report.weak_gravity_ratio = weak_gravity_ratio(sys);
  report.composite = report.compositeness >= options.thresholds.composite_min;
  report.weakly_gravitating =
      report.weak_gravity_ratio <= options.thresholds.weak_gravity_max;

  const bool formal_hole = sys.black_hole;
  const bool universal_ok =
      formal_hole || (report.composite && report.weakly_gravitating);
  std::string universal_reason;
  if (formal_hole) {
    universal_reason = "black hole with E = mc^2, R = sqrt(A/4pi)";
  } else if (universal_ok) {
    universal_reason = "composite and weakly self-gravitating";
  } else if (!report.composite) {
    universal_reason = "not composite: ER/(c hbar) below threshold";
  } else {
    universal_reason = "strongly self-gravitating: GE/(c^4 R) above threshold";
  }

  auto add = [&](std::string name, double limit, bool applicable,
                 std::string reason) {
    BoundEntry e;
    e.name = std::move(name);
    e.limit = limit;
    e.limit_bits = nats_to_bits(limit);
    e.applicable = applicable;
    e.applicability_reason = std::move(reason);
    if (sys.entropy) e.violated = *sys.entropy > limit * (1.0 + 1e-12);
    report.entries.push_back(std::move(e));
  };

  add("holographic", holographic_bound(enclosing_area), true,
      "any isolated system inside the surface");
  add("universal", universal_bound(sys), universal_ok, universal_reason);
  add("weak_universal",
      weak_universal_bound(sys, options.nu, options.zeta),
      report.composite && report.weakly_gravitating,
      report.composite && report.weakly_gravitating
          ? "composite and weakly self-gravitating"
          : "infall derivation requires a composite, weakly gravitating system");
  add("gour", gour_bound(sys), report.composite && !formal_hole,
      formal_hole ? "black holes are not thermodynamically extensive"
      : report.composite
          ? "composite; assumes a thermodynamically extensive system (unit coefficient)"
          : "not composite: ER/(c hbar) below threshold");

  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : report.entries) {
    if (e.applicable && e.limit < best) {
      best = e.limit;
      report.tightest_applicable = e.name;
    }
    if (e.applicable && e.violated.value_or(false)) {
      report.violations.push_back(e.name);
    }
  }
  if (report.weakly_gravitating) {
    report.ordering_consistent =
        report.entry("universal").limit <= report.entry("holographic").limit;
  }
  return report;
}

}  // namespace bhinfo
