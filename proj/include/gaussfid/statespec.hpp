#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gaussfid/fidelity.hpp"
#include "gaussfid/state.hpp"

namespace gaussfid {

// Malformed or unknown state description (maps to CLI exit code 2).
class spec_parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SpecKind { vacuum, thermal, covariance, canonical, kernel };

std::string_view to_string(SpecKind kind);

// Declarative state description read from JSON.  Required/optional numeric
// parameters per kind:
//   vacuum      -
//   thermal     beta
//   covariance  a_qq, a_pp, a_pq [, alpha, tau]
//   canonical   gamma, m, theta [, alpha, tau]
//   kernel      re_a [, im_a, b, re_l, im_l]
// plus an optional string label.  Unknown keys are rejected.
struct StateSpec {
  SpecKind kind = SpecKind::vacuum;
  std::map<std::string, double> params;
  std::optional<std::string> label;

  static StateSpec parse(const nlohmann::json& j);
  static StateSpec parse_text(std::string_view text);

  nlohmann::json to_json() const;

  // Materializes the state; construction errors propagate (unphysical
  // parameters throw the domain errors of the underlying types).
  GaussianState to_state() const;

  // Position-representation kernel of the same state; the kernel kind is
  // normalized directly, everything else goes through kernel_from_state.
  DensityKernel to_kernel() const;

  double param(const std::string& name, double fallback = 0.0) const;
};

// One fidelity evaluation, optionally cross-checked against the Fock oracle.
struct ResultRecord {
  StateSpec spec1;
  StateSpec spec2;
  FidelityBreakdown breakdown{};
  double bures_distance = 0.0;
  double bures_angle = 0.0;
  std::optional<double> oracle_F;
  std::optional<int> oracle_dim;
  std::optional<double> abs_error;

  nlohmann::json to_json() const;
};

// dim_override > 0 fixes the oracle truncation; otherwise required_dim at
// budget 1e-9 decides (the larger of the two states, when verifying).
ResultRecord make_result(const StateSpec& s1, const StateSpec& s2, bool with_oracle,
                         int dim_override = 0);

}  // namespace gaussfid
