#pragma once

// The extra generators alpha and beta of End(X^{(x)(2p-1)}), their
// placements alpha_i, beta_i on longer tensor powers, and partial traces.

#include "uqpa/cyclo.hpp"
#include "uqpa/tensor.hpp"

namespace uqpa {

struct GeneratorSet {
  int p = 0;
  LinOp alpha;
  LinOp beta;
  CycloNum gamma;  // (-1)^{p-1} ([p-1]!)^2
};

/// Coefficient form: alpha(rho_S) = q^{c(S)} [k]! E^{p-k-1} x_top and
/// beta(rho_S) = q^{c(S)} [2p-1-k]! F^{k-p} x_0 with
/// c(S) = k(2p-1) - (k^2-k)/2 - sum S. Negative powers give zero.
LinOp alpha_explicit(const Field& f);
LinOp beta_explicit(const Field& f);

/// The e_x / f_x form: alpha(x) = e_x E^{p-k-1} x_top where E^k x = e_x x_0,
/// beta(x) = f_x F^{k-p} x_0 where F^{2p-1-k} x = f_x x_top. The scalars are
/// read off by iterating the single-step operators.
LinOp alpha_simplified(const Field& f);
LinOp beta_simplified(const Field& f);

/// Builds both forms and throws std::logic_error if they disagree.
GeneratorSet make_generators(const Field& f);

CycloNum gamma_constant(const Field& f);

/// 1^{(x)(i-1)} (x) op (x) 1^{(x)rest} on n strands.
LinOp embed(const LinOp& op, int i, int n);

/// (1^{n-1} (x) cup) o (op (x) 1) o (1^{n-1} (x) cap).
LinOp partial_trace_right(const LinOp& op);
/// (cup (x) 1^{n-1}) o (1 (x) op) o (cap (x) 1^{n-1}).
LinOp partial_trace_left(const LinOp& op);

/// Closed form of the right partial trace of beta*alpha on X^{(x)(2p-2)}:
/// rho_S -> (-1)^p q^{1-p^2-(p^2-p)/2-sum S} [p-1]! F^{p-1} x_0 for |S| = p-1,
/// zero on every other weight.
LinOp pt_betaalpha_closed(const Field& f);
/// Same coefficients with E^{p-1} x_{2p-2,2p-2} as the image vector; the
/// right partial trace of alpha*beta.
LinOp pt_alphabeta_closed(const Field& f);

/// z nested caps applied to the empty word, and the dual z nested cups.
TensorVector nested_cap(const Field& f, int z);
LinOp nested_cup(const Field& f, int z);
/// sum over R subset {1..z}, n = |R|, of (-1)^{z-n} q^{-n} rho with v1 at R
/// and at the mirror images 2z+1-r of the positions r not in R.
TensorVector nested_cap_closed(const Field& f, int z);

}  // namespace uqpa
