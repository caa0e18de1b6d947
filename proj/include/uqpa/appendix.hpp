#pragma once

// Operator and scalar identities for the action on X^{(x)z}, checked
// exactly against brute-force expansions.

#include <string>
#include <vector>

#include "uqpa/cyclo.hpp"
#include "uqpa/tensor.hpp"

namespace uqpa {

struct CheckResult {
  std::string name;
  bool holds = false;
  std::string detail;  // first counterexample when holds is false
};

bool all_hold(const std::vector<CheckResult>& checks);

/// The lifted K, E, F equal the explicit tensor sums, z <= max_z.
std::vector<CheckResult> coproduct_checks(const Field& f, int max_z);
/// E F^k and F E^k commutation formulas as operator identities for 1 <= k <= max_k on 1 <= z <= max_z.
std::vector<CheckResult> commutation_checks(const Field& f, int max_k, int max_z);
/// E^k and F^k on X^{(x)left} (x) X^{(x)right}, comparing iterated
/// single-step operators with the lambda expansion.
CheckResult coproduct_power_check(const Field& f, int k, int left, int right);
std::vector<CheckResult> coproduct_power_checks(const Field& f, int max_k, int max_z);
/// E^n, F^n on every basis state and the orbits of the extreme vectors, 1 <= z <= max_z, against iterated E and F;
/// also compares e_power/f_power with the iterates.
std::vector<CheckResult> action_checks(const Field& f, int max_z);
/// E^k x_top and F^k x_0 on z+1 strands through the z-strand iterates,
/// split off on either side, for all 0 <= k <= z+1.
std::vector<CheckResult> recursion_checks(const Field& f, int z);
/// xi against the brute-force subset sum, and its recurrence in z.
std::vector<CheckResult> xi_checks(const Field& f, int max_z);
/// Quantum-integer identities: power sum vs ratio form, [p-x] = [x],
/// [x]![p-1-x]! = [p-1]!, lambda vs the plain factorial ratio where the
/// latter is defined, and the alpha-beta-alpha scalar
/// [2p-k-1]![k+p]!/([k]![p-k-1]![p]^2) = gamma.
std::vector<CheckResult> scalar_checks(const Field& f);

/// Every check above at the verification sizes (z, k <= 2p).
std::vector<CheckResult> appendix_suite(const Field& f);

}  // namespace uqpa
