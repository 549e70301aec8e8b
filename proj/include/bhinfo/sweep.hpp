#pragma once

// Parameter sweeps. Each grid point is an independent pure evaluation, so the
// OpenMP kernel and the serial reference must produce bit-identical rows in
// the same order.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bhinfo/channel.hpp"
#include "bhinfo/evaporation.hpp"

namespace bhinfo {

enum class SweepVariable { mass, power };

enum class SweepQuantity {
  // mass sweeps
  entropy,
  temperature,
  area,
  radius,
  density,
  mass_loss_rate,
  lifetime,
  // power sweeps
  capacity_bound,
  pendry_capacity,
  entropy_rate,
};

std::string to_string(SweepVariable v);
std::string to_string(SweepQuantity q);
std::optional<SweepVariable> parse_sweep_variable(const std::string& s);
std::optional<SweepQuantity> parse_sweep_quantity(const std::string& s);
std::string unit_of(SweepVariable v);
std::string unit_of(SweepQuantity q);
SweepVariable variable_of(SweepQuantity q);

struct SweepSpec {
  SweepVariable variable = SweepVariable::mass;
  SweepQuantity quantity = SweepQuantity::entropy;
  double from = 0.0;
  double to = 0.0;
  std::size_t points = 0;
  bool log_spacing = true;

  EmissionParameters emission;
  // Mass sweeps: shape of the hole, through Q/M and a/M.
  double charge_over_M = 0.0;
  double spin_over_M = 0.0;
  // Power sweeps: the channel held fixed apart from its power.
  double lambda_c = 5e-5;
  double n_carriers = 1.0;
  CapacityOptions capacity;

  // Throws DomainError on an empty or reversed range, a non-positive end of
  // a log range, or a quantity that does not belong to the swept variable.
  void validate() const;
};

struct SweepRow {
  double x = 0.0;
  double value = 0.0;
  std::optional<Regime> regime;  // capacity_bound only
};

std::vector<double> sweep_grid(const SweepSpec& spec);

SweepRow evaluate_sweep_point(const SweepSpec& spec, double x);

// Reference implementation.
std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec);

// OpenMP parallel-for over grid points. If any point throws, the error from
// the lowest index is rethrown after the loop.
std::vector<SweepRow> run_sweep_parallel(const SweepSpec& spec);

}  // namespace bhinfo
