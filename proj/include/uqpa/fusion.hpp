#pragma once

// Fusion bookkeeping for (-) (x) X on formal sums of indecomposables, the
// dimension formula for End(X^{(x)n}), and the conjectured closed form.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uqpa/modules.hpp"

namespace uqpa {

using ModuleMultiset = std::map<ModuleLabel, mpz_class>;

std::string multiset_str(const ModuleMultiset& m);
mpz_class total_dimension(const ModuleMultiset& m, int p);

/// One tensor step with X. At p = 2 the P_1 rules collide and
/// X (x) P^{+-}_1 = 2X^{+-}_2 + 2X^{-+}_2 is used.
ModuleMultiset tensor_step(const ModuleMultiset& m, int p);
/// Decomposition of X^{(x)n}; n = 0 gives X^+_1.
ModuleMultiset multiplicities(int n, int p);

/// sum over the quadratic form in the multiplicities of X^{(x)n}.
mpz_class dimension(int n, int p);
mpz_class dimension_of(const ModuleMultiset& m, int p);

mpz_class catalan(int n);
mpz_class binomial(long a, long b);  // zero outside 0 <= b <= a

enum class FloorConvention { Euclidean, Truncate, ZeroForNegative };
const std::vector<FloorConvention>& all_conventions();
std::string convention_name(FloorConvention c);
std::optional<FloorConvention> parse_convention(const std::string& name);

/// {a; b} = C(a, b) - C(a, b-1)
mpz_class ballot(long a, long b);
mpz_class conjecture_g(long n, long i, FloorConvention c);
/// C_n + sum_{j=0}^{floor(n/p)} (n+1)(n+3) G_{n, n-(j+2)p}
mpz_class conjecture_eval(int n, int p, FloorConvention c);

struct DimRecord {
  int n = 0;
  mpz_class catalan;
  mpz_class fusion;
  std::map<FloorConvention, mpz_class> conjecture;
  std::optional<mpz_class> oracle;
};
DimRecord dim_record(int n, int p);

}  // namespace uqpa
