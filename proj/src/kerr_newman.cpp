#include "bhinfo/kerr_newman.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "bhinfo/constants.hpp"
#include "bhinfo/errors.hpp"

namespace bhinfo {

using std::numbers::pi;

BlackHole make_black_hole(double mass_g, double charge_esu,
                          double angular_momentum) {
  const auto& pc = constants();
  if (!std::isfinite(mass_g) || !std::isfinite(charge_esu) ||
      !std::isfinite(angular_momentum)) {
    throw DomainError("black hole parameters must be finite");
  }
  if (mass_g < pc.planck_mass) {
    std::ostringstream msg;
    msg << "black hole mass " << mass_g << " g is below the Planck mass "
        << pc.planck_mass << " g";
    throw DomainError(msg.str());
  }

  BlackHole bh;
  bh.m_ = mass_g;
  bh.q_ = charge_esu;
  bh.j_ = angular_momentum;
  bh.M_ = geometrized_mass(mass_g);
  bh.Q_ = geometrized_charge(charge_esu);
  bh.a_ = bhinfo::spin_length(angular_momentum, mass_g);

  // (M - s)(M + s) instead of M^2 - s^2 keeps the gap accurate near
  // extremality.
  const double s = std::hypot(bh.Q_, bh.a_);
  if (s > bh.M_ * (1.0 + kExtremalSlack)) {
    std::ostringstream msg;
    msg << "naked singularity: sqrt(Q^2 + a^2)/M = " << s / bh.M_
        << " exceeds 1";
    throw NakedSingularityError(msg.str());
  }
  const double disc = (bh.M_ - s) * (bh.M_ + s);
  bh.gap_ = disc > 0.0 ? std::sqrt(disc) : 0.0;
  return bh;
}

BlackHole make_black_hole_from_ratios(double mass_g, double charge_over_M,
                                      double spin_over_M) {
  // Ratios are turned into physical q and j through the mass length; a
  // non-positive mass is left for make_black_hole to reject.
  const double M = mass_g > 0.0 ? kG * mass_g / (kC * kC) : 0.0;
  const double q = charge_from_geometrized(charge_over_M * M);
  const double j = spin_over_M * M * mass_g * kC;
  BlackHole bh = make_black_hole(mass_g, q, j);
  const double r = std::hypot(charge_over_M, spin_over_M);
  bh.Q_ = charge_over_M * bh.M_;
  bh.a_ = spin_over_M * bh.M_;
  const double disc = (1.0 - r) * (1.0 + r);
  bh.gap_ = disc > 0.0 ? bh.M_ * std::sqrt(disc) : 0.0;
  return bh;
}

double schwarzschild_radius(double mass_g) {
  return 2.0 * geometrized_mass(mass_g);
}

double horizon_area(const BlackHole& bh) {
  const double r = bh.outer_radius();
  const double a = bh.spin_length();
  return 4.0 * pi * (r * r + a * a);
}

double entropy(const BlackHole& bh) {
  const double lp = constants().planck_length;
  return horizon_area(bh) / (4.0 * lp * lp);
}

double temperature(const BlackHole& bh) {
  constexpr double eta = 0.25;
  return kC * kHbar / (2.0 * eta * horizon_area(bh)) * bh.horizon_gap();
}

double schwarzschild_temperature(double mass_g) {
  return kHbar * kC / (8.0 * pi * geometrized_mass(mass_g));
}

FirstLawPotentials potentials(const BlackHole& bh) {
  const double r = bh.outer_radius();
  const double a = bh.spin_length();
  const double rho2 = r * r + a * a;
  FirstLawPotentials p{};
  p.theta = std::pow(kC, 4) / (2.0 * kG * horizon_area(bh)) * bh.horizon_gap();
  p.phi = bh.charge() * r / rho2;
  p.omega = a * kC / rho2;
  return p;
}

double first_law_residual(const BlackHole& bh, double dm, double dq,
                          double dj) {
  if (dm == 0.0 && dq == 0.0 && dj == 0.0) {
    throw DomainError("first_law_residual: all perturbations are zero");
  }
  double area_plus = 0.0;
  double area_minus = 0.0;
  try {
    area_plus = horizon_area(make_black_hole(
        bh.mass() + dm, bh.charge() + dq, bh.angular_momentum() + dj));
    area_minus = horizon_area(make_black_hole(
        bh.mass() - dm, bh.charge() - dq, bh.angular_momentum() - dj));
  } catch (const NakedSingularityError&) {
    throw DomainError("first_law_residual: perturbation crosses extremality");
  }
  const double dA = 0.5 * (area_plus - area_minus);
  const auto p = potentials(bh);
  const double dE = kC * kC * dm;
  const double work_q = p.phi * dq;
  const double work_j = p.omega * dj;
  const double scale = std::abs(dE) + std::abs(work_q) + std::abs(work_j);
  if (scale == 0.0) {
    throw DomainError("first_law_residual: perturbation does no work");
  }
  return std::abs(dE - p.theta * dA - work_q - work_j) / scale;
}

HFactors h_factors(const BlackHole& bh) {
  const BlackHole ref = make_schwarzschild(bh.mass());
  return {entropy(bh) / entropy(ref), temperature(bh) / temperature(ref)};
}

double mean_density(double mass_g) {
  if (!(mass_g > 0.0)) {
    throw DomainError("mean_density: mass must be positive");
  }
  return 3.0 * std::pow(kC, 6) /
         (32.0 * pi * std::pow(kG, 3) * mass_g * mass_g);
}

}  // namespace bhinfo
