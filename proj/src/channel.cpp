#include "bhinfo/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bhinfo/constants.hpp"
#include "bhinfo/errors.hpp"

namespace bhinfo {

using std::numbers::pi;

void Channel::validate() const {
  if (!(lambda_c > 0.0)) throw DomainError("channel: lambda_c must be positive");
  if (!(power >= 0.0)) throw DomainError("channel: power must be non-negative");
  if (!(n_carriers >= 1.0)) {
    throw DomainError("channel: n_carriers must be at least 1");
  }
  emission.validate();
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::low: return "low";
    case Regime::intermediate: return "intermediate";
    case Regime::high: return "high";
  }
  return "unknown";
}

namespace {

double gamma_n(const Channel& ch, const CapacityOptions& opt) {
  const double n = ch.emission.n_species * (opt.separate_helicities ? 2.0 : 1.0);
  return ch.emission.gamma_bar * n;
}

}  // namespace

double characteristic_power(const Channel& ch, const CapacityOptions& opt) {
  ch.validate();
  return kC * kC * gamma_n(ch, opt) * kHbar /
         (15360.0 * pi * ch.lambda_c * ch.lambda_c);
}

double characteristic_power_approx(double lambda_c) {
  if (!(lambda_c > 0.0)) {
    throw DomainError("characteristic_power_approx: lambda_c must be positive");
  }
  return 1e-4 * kC * kC * kHbar / (lambda_c * lambda_c);
}

double gsl_bound(const Channel& ch, double xi, const CapacityOptions& opt) {
  if (!(xi >= 1.0)) {
    throw DomainError("gsl_bound: xi below 1, the channel would miss the hole");
  }
  const double p_c = characteristic_power(ch, opt);
  const double bracket = xi * ch.power + (ch.emission.nu - 1.0) * p_c / xi;
  return 8.0 * pi * ch.lambda_c / (kHbar * kC) * bracket * kLog2E;
}

double optimal_xi(double power, double p_c, double nu) {
  if (!(nu > 1.0)) {
    throw DomainError("optimal_xi: degenerate for nu <= 1");
  }
  if (!(power > 0.0) || !(p_c > 0.0)) {
    throw DomainError("optimal_xi: power and P_c must be positive");
  }
  return std::sqrt((nu - 1.0) * p_c / power);
}

double low_power_bound(const Channel& ch, const CapacityOptions& opt) {
  ch.validate();
  return std::sqrt(pi * (ch.emission.nu - 1.0) * gamma_n(ch, opt) * ch.power /
                   (60.0 * kHbar)) *
         kLog2E;
}

double high_power_bound(const Channel& ch, double xi) {
  ch.validate();
  return 8.0 * pi * xi * ch.lambda_c * ch.power / (kHbar * kC) * kLog2E;
}

double bremermann_rate(double energy, double xi) {
  if (!(energy > 0.0)) throw DomainError("bremermann_rate: energy must be positive");
  return 8.0 * pi * xi * energy / kHbar * kLog2E;
}

double pendry_capacity(double power, double n_carriers) {
  if (!(power >= 0.0)) throw DomainError("pendry_capacity: negative power");
  if (!(n_carriers >= 1.0)) {
    throw DomainError("pendry_capacity: n_carriers must be at least 1");
  }
  return std::sqrt(n_carriers * pi * power / (3.0 * kHbar)) * kLog2E;
}

ConsistencyReport consistency_check(const Channel& ch,
                                    const CapacityOptions& opt) {
  ch.validate();
  ConsistencyReport c;
  c.f0_limit =
      std::sqrt(pi * (ch.emission.nu - 1.0) * gamma_n(ch, opt) / 60.0) * kLog2E;
  c.finf_value = std::sqrt(ch.n_carriers * pi / 3.0) * kLog2E;
  c.monotone_ok = c.f0_limit <= c.finf_value;
  c.caveat = !c.monotone_ok;

  // 8 pi xi lambda P / (hbar c) = (n pi P / 3 hbar)^(1/2)
  const double k = 8.0 * pi * opt.xi_floor * ch.lambda_c / (kHbar * kC);
  c.pendry_crossover_power = ch.n_carriers * pi / (3.0 * kHbar * k * k);
  c.dominates_at_pc = c.pendry_crossover_power <= characteristic_power(ch, opt);
  return c;
}

CapacityReport capacity_bound(const Channel& ch, const CapacityOptions& opt) {
  ch.validate();
  CapacityReport r;
  r.p_c = characteristic_power(ch, opt);
  r.p_c_approx = characteristic_power_approx(ch.lambda_c);
  r.pendry_bits_per_s = pendry_capacity(ch.power, ch.n_carriers);
  r.consistency = consistency_check(ch, opt);

  const double nu = ch.emission.nu;
  if (ch.power >= opt.high_fraction * r.p_c) {
    r.regime = Regime::high;
    r.xi_used = opt.xi_floor;
    r.bound_bits_per_s = high_power_bound(ch, r.xi_used);
    return r;
  }

  // nu == 1 makes the bound linear in xi: best at the smallest allowed xi.
  const bool degenerate = !(nu > 1.0);
  if (ch.power <= opt.low_fraction * r.p_c) {
    r.regime = Regime::low;
    if (degenerate) {
      r.xi_used = 1.0;
      r.bound_bits_per_s = gsl_bound(ch, r.xi_used, opt);
    } else if (ch.power == 0.0) {
      r.xi_used = std::numeric_limits<double>::infinity();
      r.bound_bits_per_s = 0.0;
    } else {
      const double xi_star = optimal_xi(ch.power, r.p_c, nu);
      if (xi_star >= 1.0) {
        r.xi_used = xi_star;
        r.bound_bits_per_s = low_power_bound(ch, opt);
      } else {
        r.xi_used = 1.0;
        r.bound_bits_per_s = gsl_bound(ch, r.xi_used, opt);
      }
    }
    return r;
  }

  r.regime = Regime::intermediate;
  const double xi_star = degenerate ? 1.0 : optimal_xi(ch.power, r.p_c, nu);
  r.xi_used = std::max(xi_star, opt.xi_floor);
  r.bound_bits_per_s = gsl_bound(ch, r.xi_used, opt);
  return r;
}

}  // namespace bhinfo
