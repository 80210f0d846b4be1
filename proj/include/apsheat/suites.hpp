#pragma once

#include <string>
#include <vector>

#include "apsheat/coeffs.hpp"

namespace apsheat {

struct CheckResult {
  std::string name;
  double defect = 0;
  double tol = 0;
  bool pass = false;
};

// Clifford relations, connection compatibility, dual transport, projector
// algebra. Pure linear algebra, no quadrature.
std::vector<CheckResult> suite_algebra();

// Integration by parts, pair symmetry, recursion, sign and lift invariance
// on randomized polynomial fields with a fixed seed.
std::vector<CheckResult> suite_identities();

// Universal constants and the model endomorphism identities they normalize.
std::vector<CheckResult> suite_constants();

bool all_pass(const std::vector<CheckResult>& checks);

// Extension of a section to the rank-doubled crossed-product model: zero
// tangential mode along the new direction, zero padding in the fiber.
Field lift_field(const Field& fld);

}  // namespace apsheat
