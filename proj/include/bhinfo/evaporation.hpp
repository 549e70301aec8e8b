#pragma once

#include <vector>

#include "bhinfo/kerr_newman.hpp"
#include "bhinfo/ode.hpp"

namespace bhinfo {

// Species and geometry parameters of Hawking emission.
//   nu         - radiated entropy exceeds E/T_BH by this factor (1.35-1.64
//                depending on species)
//   gamma_bar  - relativistic correction to the radiating area, ~2
//   n_species  - effective number of massless species (photons count 1,
//                each neutrino species 7/16)
struct EmissionParameters {
  double nu = 1.5;
  double gamma_bar = 2.0;
  double n_species = 1.0;

  // Throws DomainError unless 1 <= nu <= 2, gamma_bar > 0, n_species >= 1.
  void validate() const;
};

// F(r) = c^2 Gamma N hbar / (61440 (pi M r)^2), erg cm^-2 s^-1.
// Requires a Schwarzschild hole and r >= 2M.
double hawking_flux(const BlackHole& bh, double r_cm,
                    const EmissionParameters& p = {});

// P_BH = c^2 Gamma N hbar / (15360 pi M^2), erg s^-1.
double hawking_power(const BlackHole& bh, const EmissionParameters& p = {});

// Per-species Stefan-Boltzmann estimate dm/dt = -4 pi r_g^2 sigma T_BH^4 / c^2
// (g s^-1, negative). Deliberately not tied to EmissionParameters.
double mass_loss_rate(double mass_g);

// K in dm/dt = -K / m^2 for the per-species estimate, g^3 s^-1.
double evaporation_constant();

struct LifetimeResult {
  double seconds = 0.0;
  std::size_t steps = 0;
  std::vector<ode::Sample> track;  // (t, m) pairs when requested
};

// Integrates dm/dt = n_species * mass_loss_rate(m) from m0 down to the Planck
// mass. n_species is held fixed along the track.
LifetimeResult evaporate(double m0_g, const EmissionParameters& p = {},
                         bool record_track = false,
                         const ode::AdaptiveRk4Options& options = {});

inline double lifetime(double m0_g, const EmissionParameters& p = {}) {
  return evaporate(m0_g, p).seconds;
}

// S_r = (pi nu^2 Gamma N P / (240 hbar))^(1/2), nats s^-1.
double entropy_emission_rate(double power, const EmissionParameters& p = {});

// nu P_BH / T_BH with T_BH = hbar c / (8 pi M); the direct route for a hole.
double radiated_entropy_rate(const BlackHole& bh,
                             const EmissionParameters& p = {});

}  // namespace bhinfo
