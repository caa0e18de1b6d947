#pragma once

// Exact verification of the generator relations, the dimension oracle and
// the small structural propositions around End(X^{(x)n}).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uqpa/appendix.hpp"
#include "uqpa/cyclo.hpp"
#include "uqpa/generators.hpp"
#include "uqpa/tensor.hpp"

namespace uqpa {

inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 16;

struct RelationReport {
  std::string relation_id;
  int p = 0;
  int strands = 0;
  bool holds = false;
  bool skipped = false;
  std::string skip_reason;
  std::optional<Witness> witness;
  std::string detail;
  double elapsed_ms = 0.0;
};

/// eq1..eq21, prop2..prop5, pt_*, rot_rank, kp_periodicity in report order.
const std::vector<std::string>& relation_ids();
bool is_relation_id(const std::string& id);
/// Nominal strand count of a check.
int relation_strands(const std::string& id, int p);
/// Size of the largest space the check materializes: 2^strands for map
/// identities, 4^n for checks that solve inside End(X^{(x)n}).
std::size_t relation_states(const std::string& id, int p);

/// Runs one check. Oversized checks come back skipped rather than thrown.
RelationReport verify(const std::string& id, int p, std::size_t budget = kDefaultBudget);

struct VerifyTask {
  std::string id;
  int p = 0;
};
/// Runs tasks on up to `threads` workers; results follow task order.
std::vector<RelationReport> verify_many(const std::vector<VerifyTask>& tasks,
                                        std::size_t budget = kDefaultBudget,
                                        unsigned threads = 0);

// ------------------------------------------------------------ dimensions

/// dim of the commutant of K, E, F on X^{(x)n}, solved one weight shift
/// d = 0 mod p at a time. Throws InfeasibleSize when 4^n > budget.
std::size_t commutant_dim(int p, int n, std::size_t budget = kDefaultBudget);

/// Rank of a family of maps of one shape.
std::size_t ops_rank(const Field& f, const std::vector<LinOp>& ops);

// ------------------------------------------------------- named families

struct NamedOp {
  std::string name;
  LinOp op;
};
/// Every TL diagram on n strands, realized as a matrix.
std::vector<NamedOp> tl_matrices(const Field& f, int n);
/// The 12p-6 alpha/beta/alpha-beta words of the 2p-strand basis list.
std::vector<NamedOp> basis_words_2p(const Field& f, const GeneratorSet& g);
/// e_{i} e_{i+1} ... e_{j} on n strands (descending when i > j).
LinOp e_chain(const Field& f, int from, int to, int n);

struct BasisCheck {
  int p = 0;
  std::size_t tl_count = 0;
  std::size_t word_count = 0;
  std::size_t rank = 0;
  std::size_t commutant = 0;
  bool all_commute = false;
  /// Words whose removal leaves the rank unchanged; only searched when the
  /// list is rank deficient.
  std::vector<std::string> dependent_words;
};
BasisCheck basis_check_2p(int p, std::size_t budget = kDefaultBudget);

// ------------------------------------------------------ rotation family

/// (-1)^i [i-2] k1 + (-1)^i [i-1] k2 for i = 0 .. 4p-1.
std::vector<CycloNum> coefficient_vector(const Field& f, const CycloNum& k1, const CycloNum& k2);
/// R^i(op (x) 1), i = 0 .. 4p-1.
std::vector<LinOp> rotation_family(const LinOp& op);

struct RotationSpan {
  std::size_t rank = 0;
  std::size_t nullity = 0;
  bool seeds_annihilate = false;
  bool nullspace_is_seed_span = false;
};
RotationSpan rotation_span(const Field& f, const LinOp& op);

/// Closing one adjacent pair of the 4p boundary points (a cap, a cup or a
/// partial trace) leaves exactly three consecutive terms T_{a-1}, T_a,
/// T_{a+1} with T_{a+-1} = M and T_a = delta M.
struct CappingPattern {
  std::string closure;
  int center = -1;  // -1 when the pattern does not match
};
std::vector<CappingPattern> capping_patterns(const Field& f, const LinOp& op);

// --------------------------------------------------------- properties

/// Weight shifts, nilpotency, module-map property, image rank/spectrum and
/// the iterate formulas for F^j alpha(x) and E^j beta(x).
std::vector<CheckResult> generator_checks(const Field& f);

/// The two coefficient products compared in the proof of alpha_1 alpha_{1+p}
/// = alpha_{1+p} alpha_1, over every admissible (i, j, l, m, n).
struct CoefficientIdentity {
  std::size_t tuples = 0;
  std::size_t literal_agree = 0;    // final displayed exponents
  std::size_t expanded_agree = 0;   // exponents as they appear in the sums
  std::string first_literal_mismatch;
};
CoefficientIdentity coefficient_identity(const Field& f);

/// Recursive and closed Jones-Wenzl forms, the idempotent at 2p-1 and the
/// singular range of the closed formula.
std::vector<CheckResult> jw_checks(const Field& f);

}  // namespace uqpa
