#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tangent/moments.hpp"

namespace tangent {

struct IdentityCheck {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  bool pass() const { return checks > 0 && failures == 0; }
};

struct IdentitySuiteOptions {
  int max_m = 5;
  int max_r = 20;
  int random_rho = 20;       // random rational ρ² per m for the companion checks
  int krylov_instances = 200;
  std::uint64_t seed = 20240611;
  CoefficientFn c = c_table;  // replaced by tests to check that failures are caught
};

/// Exact-arithmetic checks of the elimination machinery for every m <= max_m:
/// the binomial difference identities, the recurrence polynomial, the
/// companion matrix facts, B_0 non-singularity, the conjugation structure,
/// the Krylov criterion, the Hankel shift A_k = S^k A_0 and the
/// non-singularity certificate.
std::vector<IdentityCheck> run_identity_suite(const IdentitySuiteOptions& options = {});

}  // namespace tangent
