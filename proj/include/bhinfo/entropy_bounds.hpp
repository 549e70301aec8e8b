#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "bhinfo/kerr_newman.hpp"

namespace bhinfo {

// A material system characterised by its rest energy E (erg), largest radius
// R (cm) and, optionally, the entropy it stores (nats).
struct MaterialSystem {
  double energy = 0.0;
  double radius = 0.0;
  std::optional<double> entropy;
  std::string label;
  // Set for a black hole described as E = mc^2, R = sqrt(A / 4 pi); the
  // universal bound then applies formally despite strong self-gravity.
  bool black_hole = false;

  // Throws DomainError unless energy > 0, radius > 0 and entropy >= 0.
  void validate() const;
};

MaterialSystem system_from_mass(double mass_g, double radius_cm,
                                std::optional<double> entropy = std::nullopt,
                                std::string label = {});

MaterialSystem system_from_black_hole(const BlackHole& bh);

// "Much larger than" / "much smaller than" made explicit.
struct ApplicabilityThresholds {
  double composite_min = 10.0;      // E R / (c hbar) >= this
  double weak_gravity_max = 1e-2;   // G E / (c^4 R) <= this
};

// E R / (c hbar): system size in units of its own Compton length.
double compositeness(const MaterialSystem& sys);

// G E / (c^4 R)
double weak_gravity_ratio(const MaterialSystem& sys);

// A / (4 l_P^2)
double holographic_bound(double area_cm2);

inline constexpr double kUniversalCoefficient = 2.0 * std::numbers::pi;

// coefficient * R E / (hbar c)
double universal_bound(const MaterialSystem& sys,
                       double coefficient = kUniversalCoefficient);

// 8 pi nu zeta, the coefficient of the infall-derived weak bound.
double weak_bound_coefficient(double nu, double zeta);

// 8 pi nu zeta R E / (c hbar). Throws DomainError for zeta < 1.
double weak_universal_bound(const MaterialSystem& sys, double nu, double zeta);

// (E R / (hbar c))^(3/4) with unit coefficient; the true coefficient depends
// on the number of species.
double gour_bound(const MaterialSystem& sys);

struct BoundEntry {
  std::string name;
  double limit = 0.0;       // nats
  double limit_bits = 0.0;  // bits
  bool applicable = false;
  std::string applicability_reason;
  // Only set when the system carries an entropy.
  std::optional<bool> violated;
};

struct BoundReport {
  std::string label;
  double compositeness = 0.0;
  double weak_gravity_ratio = 0.0;
  bool composite = false;
  bool weakly_gravitating = false;
  std::vector<BoundEntry> entries;
  std::string tightest_applicable;
  // universal <= holographic whenever the system is weakly gravitating.
  bool ordering_consistent = true;
  std::vector<std::string> violations;

  const BoundEntry& entry(const std::string& name) const;
};

struct BoundOptions {
  ApplicabilityThresholds thresholds;
  double nu = 1.5;     // for the weak bound
  double zeta = 10.0;  // for the weak bound
};

// Evaluates every bound for `sys` enclosed by a surface of area
// `enclosing_area` (cm^2). Throws DomainError if the surface is smaller than
// the sphere of radius R.
BoundReport bound_report(const MaterialSystem& sys, double enclosing_area,
                         const BoundOptions& options = {});

// Area 4 pi R^2 of the smallest enclosing sphere.
double sphere_area(double radius_cm);

}  // namespace bhinfo
