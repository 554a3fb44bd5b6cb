#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wtangle/tangle.hpp"

namespace wtangle::cli {

enum class ExitCode : int { ok = 0, verification_failed = 1, usage = 2 };

/// Thrown for malformed or out-of-range command-line input.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Radians, or a multiple of pi: "pi", "pi/2", "2pi", "3pi/2", "2*pi", "-pi/4".
double parse_angle(std::string_view text);

/// Comma-separated integers and inclusive ranges, e.g. "3,5,7..9".
std::vector<int> parse_int_list(std::string_view text);

enum class Quantity {
  pairwise_concurrence,
  pairwise_negativity,
  one_vs_rest_negativity,
  concurrence_tangle,
  negativity_tangle,
};

std::string_view quantity_name(Quantity q);
Quantity parse_quantity(std::string_view name);
std::vector<Quantity> all_quantities();

struct SweepSpec {
  std::vector<int> n_list;
  double theta_start{};
  double theta_end{};
  int theta_steps{};
  std::vector<Quantity> quantities;

  void validate() const;
  /// theta_start + i (theta_end - theta_start) / (theta_steps - 1)
  std::vector<double> thetas() const;
};

/// 12 significant digits, locale independent.
std::string format_value(double v);

/// Header `n,theta,<quantities>`; rows n-major, theta-minor. Rows are
/// computed in parallel and written in order.
void write_sweep_csv(const SweepSpec& spec, std::ostream& out);

nlohmann::json report_to_json(const TangleReport& report);

/// One `D_{...}` line per configuration, then `count = p(n,r)`.
std::string classify_listing(int n, int r);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wtangle::cli
