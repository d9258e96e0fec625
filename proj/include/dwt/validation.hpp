#pragma once

// Analytic-vs-ED cross-validation suite behind `check`.

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace dwt {

struct CheckResult {
  std::string name;
  double error = 0.0;      ///< worst error found, in the check's own measure
  double tolerance = 0.0;  ///< after any strict scaling
  bool passed = false;
  std::string detail;
};

struct CheckOptions {
  bool strict = false;     ///< halves every tolerance
  int max_atoms = 10;
  unsigned random_cases = 50;
  unsigned long long seed = 20240601ULL;
};

/// Runs every check; never throws for a numerical mismatch, only records it.
std::vector<CheckResult> run_cross_validation(const CheckOptions& options = {});

/// Fixed-width table, one line per check, then a summary line.
std::string format_check_table(std::span<const CheckResult> results);

bool all_passed(std::span<const CheckResult> results);

/// Time of the largest |values - centre| within [t_from, t_to]; the envelope
/// revival of a fast oscillation. Throws std::invalid_argument if no sample
/// falls in the interval.
double locate_revival(std::span<const double> times, std::span<const double> values, double centre,
                      double t_from, double t_to);

}  // namespace dwt
