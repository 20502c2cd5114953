#pragma once

// Verification suites run over frequency/wavevector grids, collected into a
// VerificationReport. Shared by the CLI and the acceptance tests.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mqed/constants.hpp"
#include "mqed/media.hpp"

namespace mqed {

/// START:STOP:N[:log]; strictly increasing, N >= 1.
struct FrequencyGrid {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
  bool log = false;

  static FrequencyGrid parse(std::string_view spec);
  std::vector<double> values() const;
};

// 50 log-spaced points over [0.1, 10] x the lowest model resonance.
std::vector<double> default_omega_grid(const MediumModel& model);

// x, y, z and (1, 2, 3)/sqrt(14), all of length 0.7 w_ref / c with w_ref the
// lowest model resonance.
std::vector<Vector3d> default_wavevectors(const MediumModel& model,
                                          const PhysicalConstants& pc = PhysicalConstants::scaled());

struct CheckRecord {
  std::string id;
  std::vector<std::pair<std::string, double>> parameters;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct VerificationReport {
  std::string suite;
  std::string model;
  std::vector<CheckRecord> checks;
  bool pass = true;  // every record passes
  double elapsed_seconds = 0.0;

  std::size_t failures() const;
  double max_residual(std::string_view id_prefix = {}) const;

  // Deterministic rendering; timings only when requested.
  std::string to_json(bool include_timings = false) const;
};

struct SuiteOptions {
  std::optional<std::vector<double>> omegas;
  std::optional<std::vector<Vector3d>> wavevectors;
  std::optional<double> tolerance;
  PhysicalConstants constants = PhysicalConstants::scaled();
  unsigned threads = 0;  // 0: worker_count()
};

const std::vector<std::string_view>& suite_names();

/// Throws InvalidInput for an unknown suite.
VerificationReport run_suite(std::string_view suite, const MediumModel& model,
                             const SuiteOptions& options = {});

// Default tolerance of each suite's primary check.
double default_tolerance(std::string_view suite);

}  // namespace mqed
