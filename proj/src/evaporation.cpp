#include "bhinfo/evaporation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bhinfo/constants.hpp"
#include "bhinfo/errors.hpp"

namespace bhinfo {

using std::numbers::pi;

void EmissionParameters::validate() const {
  if (!(nu >= 1.0 && nu <= 2.0)) {
    throw DomainError("emission parameters: nu must lie in [1, 2]");
  }
  if (!(gamma_bar > 0.0)) {
    throw DomainError("emission parameters: gamma_bar must be positive");
  }
  if (!(n_species >= 1.0)) {
    throw DomainError("emission parameters: n_species must be at least 1");
  }
}

namespace {

void require_schwarzschild(const BlackHole& bh, const char* what) {
  if (!bh.is_schwarzschild()) {
    throw DomainError(std::string(what) + ": requires a Schwarzschild hole");
  }
}

}  // namespace

double hawking_flux(const BlackHole& bh, double r_cm,
                    const EmissionParameters& p) {
  require_schwarzschild(bh, "hawking_flux");
  p.validate();
  const double M = bh.mass_length();
  if (!(r_cm >= 2.0 * M)) {
    throw DomainError("hawking_flux: radius lies inside the horizon");
  }
  const double x = pi * M * r_cm;
  return kC * kC * p.gamma_bar * p.n_species * kHbar / (61440.0 * x * x);
}

double hawking_power(const BlackHole& bh, const EmissionParameters& p) {
  require_schwarzschild(bh, "hawking_power");
  p.validate();
  const double M = bh.mass_length();
  return kC * kC * p.gamma_bar * p.n_species * kHbar / (15360.0 * pi * M * M);
}

double mass_loss_rate(double mass_g) {
  if (!(mass_g > constants().planck_mass)) {
    throw DomainError("mass_loss_rate: mass must exceed the Planck mass");
  }
  const double r_g = schwarzschild_radius(mass_g);
  const double t = schwarzschild_temperature(mass_g);
  const double power =
      4.0 * pi * r_g * r_g * stefan_boltzmann_energy_units() * std::pow(t, 4);
  return -power / (kC * kC);
}

double evaporation_constant() {
  // |dm/dt| m^2 is mass independent; evaluate at a convenient mass.
  constexpr double m = 1e15;
  return -mass_loss_rate(m) * m * m;
}

LifetimeResult evaporate(double m0_g, const EmissionParameters& p,
                         bool record_track,
                         const ode::AdaptiveRk4Options& options) {
  p.validate();
  const double m_planck = constants().planck_mass;
  if (!(m0_g > m_planck)) {
    throw DomainError("evaporate: initial mass must exceed the Planck mass");
  }
  const double k = p.n_species * evaporation_constant();
  const ode::Rhs rhs = [k](double, double m) { return -k / (m * m); };
  auto crossing =
      ode::integrate_to_level(rhs, 0.0, m0_g, m_planck, options, record_track);
  LifetimeResult out;
  out.seconds = crossing.t_end;
  out.steps = crossing.accepted_steps;
  out.track = std::move(crossing.trajectory);
  return out;
}

double entropy_emission_rate(double power, const EmissionParameters& p) {
  p.validate();
  if (power < 0.0 || std::isnan(power)) {
    throw DomainError("entropy_emission_rate: negative power");
  }
  return std::sqrt(pi * p.nu * p.nu * p.gamma_bar * p.n_species * power /
                   (240.0 * kHbar));
}

double radiated_entropy_rate(const BlackHole& bh, const EmissionParameters& p) {
  return p.nu * hawking_power(bh, p) / schwarzschild_temperature(bh.mass());
}

}  // namespace bhinfo
