#include "bhinfo/sweep.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>
#include <utility>

#include "bhinfo/constants.hpp"
#include "bhinfo/errors.hpp"
#include "bhinfo/kerr_newman.hpp"

namespace bhinfo {
namespace {

struct QuantityInfo {
  SweepQuantity quantity;
  const char* name;
  const char* unit;
  SweepVariable variable;
};

constexpr QuantityInfo kQuantities[] = {
    {SweepQuantity::entropy, "entropy", "nats", SweepVariable::mass},
    {SweepQuantity::temperature, "temperature", "K", SweepVariable::mass},
    {SweepQuantity::area, "area", "cm^2", SweepVariable::mass},
    {SweepQuantity::radius, "radius", "cm", SweepVariable::mass},
    {SweepQuantity::density, "density", "g cm^-3", SweepVariable::mass},
    {SweepQuantity::mass_loss_rate, "mass_loss_rate", "g s^-1", SweepVariable::mass},
    {SweepQuantity::lifetime, "lifetime", "s", SweepVariable::mass},
    {SweepQuantity::capacity_bound, "capacity_bound", "bits s^-1", SweepVariable::power},
    {SweepQuantity::pendry_capacity, "pendry_capacity", "bits s^-1", SweepVariable::power},
    {SweepQuantity::entropy_rate, "entropy_rate", "nats s^-1", SweepVariable::power},
};

const QuantityInfo& info(SweepQuantity q) {
  for (const auto& i : kQuantities) {
    if (i.quantity == q) return i;
  }
  throw std::logic_error("unknown sweep quantity");
}

}  // namespace

std::string to_string(SweepVariable v) {
  return v == SweepVariable::mass ? "mass" : "power";
}

std::string to_string(SweepQuantity q) { return info(q).name; }

std::optional<SweepVariable> parse_sweep_variable(const std::string& s) {
  if (s == "mass") return SweepVariable::mass;
  if (s == "power") return SweepVariable::power;
  return std::nullopt;
}

std::optional<SweepQuantity> parse_sweep_quantity(const std::string& s) {
  for (const auto& i : kQuantities) {
    if (s == i.name) return i.quantity;
  }
  return std::nullopt;
}

std::string unit_of(SweepVariable v) {
  return v == SweepVariable::mass ? "g" : "erg s^-1";
}

std::string unit_of(SweepQuantity q) { return info(q).unit; }

SweepVariable variable_of(SweepQuantity q) { return info(q).variable; }

void SweepSpec::validate() const {
  if (points == 0) throw DomainError("sweep: empty range (zero points)");
  if (!std::isfinite(from) || !std::isfinite(to) || from > to) {
    throw DomainError("sweep: range must satisfy from <= to");
  }
  if (points > 1 && from == to) {
    throw DomainError("sweep: empty range for more than one point");
  }
  if (log_spacing && !(from > 0.0)) {
    throw DomainError("sweep: log spacing needs a positive range");
  }
  if (variable_of(quantity) != variable) {
    throw DomainError("sweep: " + to_string(quantity) +
                      " cannot be swept over " + to_string(variable));
  }
  emission.validate();
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  spec.validate();
  std::vector<double> grid(spec.points);
  if (spec.points == 1) {
    grid[0] = spec.from;
    return grid;
  }
  const double n = static_cast<double>(spec.points - 1);
  for (std::size_t i = 0; i < spec.points; ++i) {
    const double t = static_cast<double>(i) / n;
    grid[i] = spec.log_spacing
                  ? std::exp(std::log(spec.from) +
                             t * (std::log(spec.to) - std::log(spec.from)))
                  : spec.from + t * (spec.to - spec.from);
  }
  // Pin the endpoints against rounding in exp/log.
  grid.front() = spec.from;
  grid.back() = spec.to;
  return grid;
}

SweepRow evaluate_sweep_point(const SweepSpec& spec, double x) {
  SweepRow row;
  row.x = x;
  if (spec.variable == SweepVariable::mass) {
    const auto hole =
        make_black_hole_from_ratios(x, spec.charge_over_M, spec.spin_over_M);
    switch (spec.quantity) {
      case SweepQuantity::entropy: row.value = entropy(hole); break;
      case SweepQuantity::temperature:
        row.value = energy_temperature_to_kelvin(temperature(hole));
        break;
      case SweepQuantity::area: row.value = horizon_area(hole); break;
      case SweepQuantity::radius: row.value = hole.outer_radius(); break;
      case SweepQuantity::density: row.value = mean_density(x); break;
      case SweepQuantity::mass_loss_rate:
        row.value = spec.emission.n_species * mass_loss_rate(x);
        break;
      case SweepQuantity::lifetime: row.value = lifetime(x, spec.emission); break;
      default: throw DomainError("sweep: quantity not defined over mass");
    }
    return row;
  }

  Channel ch;
  ch.lambda_c = spec.lambda_c;
  ch.power = x;
  ch.n_carriers = spec.n_carriers;
  ch.emission = spec.emission;
  switch (spec.quantity) {
    case SweepQuantity::capacity_bound: {
      const auto report = capacity_bound(ch, spec.capacity);
      row.value = report.bound_bits_per_s;
      row.regime = report.regime;
      break;
    }
    case SweepQuantity::pendry_capacity:
      row.value = pendry_capacity(x, spec.n_carriers);
      break;
    case SweepQuantity::entropy_rate:
      row.value = entropy_emission_rate(x, spec.emission);
      break;
    default: throw DomainError("sweep: quantity not defined over power");
  }
  return row;
}

std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec) {
  const auto grid = sweep_grid(spec);
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double x : grid) rows.push_back(evaluate_sweep_point(spec, x));
  return rows;
}

std::vector<SweepRow> run_sweep_parallel(const SweepSpec& spec) {
  const auto grid = sweep_grid(spec);
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  std::vector<SweepRow> rows(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());

#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      rows[i] = evaluate_sweep_point(spec, grid[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

}  // namespace bhinfo
