#pragma once

// Information-rate bounds for a channel directed onto a Schwarzschild hole of
// scale M = xi * lambda_c, and the cutoff-free (Pendry) capacity they are
// compared against. Rates are in bits per second.

#include <string>

#include "bhinfo/evaporation.hpp"

namespace bhinfo {

struct Channel {
  double lambda_c = 0.0;    // long-wavelength cutoff, cm
  double power = 0.0;       // erg s^-1, including rest energy of carriers
  double n_carriers = 1.0;  // effective information carrier species
  EmissionParameters emission;

  void validate() const;
};

enum class Regime { low, intermediate, high };

std::string to_string(Regime r);

struct CapacityOptions {
  // xi used at and above the intermediate band.
  double xi_floor = 10.0;
  // P <= low_fraction * P_c is the low-power regime.
  double low_fraction = 1.0 / 200.0;
  // P >= high_fraction * P_c is the high-power regime.
  double high_fraction = 1.0 / 10.0;
  // Count the two photon helicities as separate species (doubles N).
  bool separate_helicities = false;
};

// P_c = c^2 Gamma N hbar / (15360 pi lambda_c^2)
double characteristic_power(const Channel& ch, const CapacityOptions& opt = {});

// 1e-4 c^2 hbar / lambda_c^2
double characteristic_power_approx(double lambda_c);

// (8 pi lambda_c / hbar c) [xi P + (nu - 1) P_c / xi] log2 e.
// Throws DomainError for xi < 1.
double gsl_bound(const Channel& ch, double xi, const CapacityOptions& opt = {});

// [(nu - 1) P_c / P]^(1/2). Throws DomainError for nu <= 1 or P <= 0.
double optimal_xi(double power, double p_c, double nu);

// (pi (nu - 1) Gamma N P / (60 hbar))^(1/2) log2 e
double low_power_bound(const Channel& ch, const CapacityOptions& opt = {});

// (8 pi xi lambda_c P / (hbar c)) log2 e
double high_power_bound(const Channel& ch, double xi);

// (8 pi xi E / hbar) log2 e. The usual statement carries a smaller
// coefficient.
double bremermann_rate(double energy, double xi);

// (n pi P / (3 hbar))^(1/2) log2 e
double pendry_capacity(double power, double n_carriers);

struct ConsistencyReport {
  double f0_limit = 0.0;   // upper limit on f(0)
  double finf_value = 0.0; // f(infinity)
  // f0_limit <= f(infinity): a monotone f(z) is guaranteed possible.
  bool monotone_ok = true;
  // f0_limit > f(infinity): only consistent if the low-power bound is far
  // from saturation.
  bool caveat = false;
  // Power above which the xi_floor linear bound exceeds the Pendry capacity.
  double pendry_crossover_power = 0.0;
  // The linear bound dominates Pendry at P = P_c.
  bool dominates_at_pc = false;
};

ConsistencyReport consistency_check(const Channel& ch,
                                    const CapacityOptions& opt = {});

struct CapacityReport {
  double p_c = 0.0;
  double p_c_approx = 0.0;
  Regime regime = Regime::low;
  double xi_used = 0.0;
  double bound_bits_per_s = 0.0;
  double pendry_bits_per_s = 0.0;
  ConsistencyReport consistency;
};

CapacityReport capacity_bound(const Channel& ch,
                              const CapacityOptions& opt = {});

}  // namespace bhinfo
