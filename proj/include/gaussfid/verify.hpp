#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gaussfid {

struct VerifyOptions {
  std::uint64_t seed = 42;
  int cases = 50;
  double tol_override = -1.0;  // >= 0 replaces every category tolerance
  int dim_override = 0;        // > 0 fixes the Fock truncation
};

struct VerifyCategory {
  std::string name;
  int cases = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::string worst_case;  // compact JSON of the worst input
};

struct VerifyReport {
  std::vector<VerifyCategory> categories;
  bool pass = true;
};

// Randomized self-checks: fidelity axioms F1-F4 and range, canonical-path
// equivalence against the direct matrix path, composition law against the
// quadrature oracle plus associativity, square-root round trips, and
// closed-form fidelity against the Fock oracle.  Deterministic for a fixed
// seed.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace gaussfid
