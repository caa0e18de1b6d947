#include "uqpa/generators.hpp"

#include <stdexcept>

#include "uqpa/diagram.hpp"

namespace uqpa {

namespace {

long position_sum(Word w, int z) {
  long s = 0;
  for (int pos : occupied_positions(w, z)) s += pos;
  return s;
}

long coefficient_exponent(int k, int z, long sum) {
  return static_cast<long>(k) * z - static_cast<long>(k) * (k - 1) / 2 - sum;
}

TensorVector iterate(const LinOp& op, int times, TensorVector v) {
  for (int i = 0; i < times; ++i) v = op.apply(v);
  return v;
}

}  // namespace

CycloNum gamma_constant(const Field& f) {
  const CycloNum fact = f.qfact(f.p() - 1);
  const CycloNum sq = fact * fact;
  return (f.p() % 2 == 1) ? sq : -sq;
}

LinOp alpha_explicit(const Field& f) {
  const int p = f.p();
  const int z = 2 * p - 1;
  LinOp op(f, z, z);
  for (Word w = 0; w < op.in_dim(); ++w) {
    const int k = weight(w);
    if (k >= p) continue;
    TensorVector v = apply_e_power(f, p - k - 1, highest(f, z));
    v *= f.q_pow(coefficient_exponent(k, z, position_sum(w, z))) * f.qfact(k);
    op.set_column(w, std::move(v));
  }
  return op;
}

LinOp beta_explicit(const Field& f) {
  const int p = f.p();
  const int z = 2 * p - 1;
  LinOp op(f, z, z);
  for (Word w = 0; w < op.in_dim(); ++w) {
    const int k = weight(w);
    if (k < p) continue;
    TensorVector v = apply_f_power(f, k - p, lowest(f, z));
    v *= f.q_pow(coefficient_exponent(k, z, position_sum(w, z))) * f.qfact(2 * p - 1 - k);
    op.set_column(w, std::move(v));
  }
  return op;
}

LinOp alpha_simplified(const Field& f) {
  const int p = f.p();
  const int z = 2 * p - 1;
  const LinOp e = op_E(f, z);
  LinOp op(f, z, z);
  for (Word w = 0; w < op.in_dim(); ++w) {
    const int k = weight(w);
    if (k >= p) continue;
    const CycloNum e_x = iterate(e, k, TensorVector::basis(f, z, w)).coeff(0);
    TensorVector v = iterate(e, p - k - 1, highest(f, z));
    v *= e_x;
    op.set_column(w, std::move(v));
  }
  return op;
}

LinOp beta_simplified(const Field& f) {
  const int p = f.p();
  const int z = 2 * p - 1;
  const LinOp fop = op_F(f, z);
  const Word top = (Word{1} << z) - 1;
  LinOp op(f, z, z);
  for (Word w = 0; w < op.in_dim(); ++w) {
    const int k = weight(w);
    if (k < p) continue;
    const CycloNum f_x = iterate(fop, z - k, TensorVector::basis(f, z, w)).coeff(top);
    TensorVector v = iterate(fop, k - p, lowest(f, z));
    v *= f_x;
    op.set_column(w, std::move(v));
  }
  return op;
}

GeneratorSet make_generators(const Field& f) {
  GeneratorSet g{f.p(), alpha_explicit(f), beta_explicit(f), gamma_constant(f)};
  if (!(g.alpha == alpha_simplified(f)) || !(g.beta == beta_simplified(f))) {
    throw std::logic_error("make_generators: the two definitions disagree");
  }
  return g;
}

LinOp embed(const LinOp& op, int i, int n) {
  const int width = op.in_strands();
  if (op.out_strands() != width) throw std::invalid_argument("embed: operator must be square");
  if (i < 1 || i + width - 1 > n) {
    throw std::out_of_range("embed: position " + std::to_string(i) + " out of range");
  }
  return pad(op, i - 1, n - width - (i - 1));
}

LinOp partial_trace_right(const LinOp& op) {
  const Field& f = op.field();
  const int n = op.in_strands();
  if (n < 1 || op.out_strands() != n) throw std::invalid_argument("partial_trace_right: bad shape");
  return cup(f, n, n + 1) * pad(op, 0, 1) * cap(f, n, n + 1);
}

LinOp partial_trace_left(const LinOp& op) {
  const Field& f = op.field();
  const int n = op.in_strands();
  if (n < 1 || op.out_strands() != n) throw std::invalid_argument("partial_trace_left: bad shape");
  return cup(f, 1, n + 1) * pad(op, 1, 0) * cap(f, 1, n + 1);
}

namespace {

LinOp weight_pm1_map(const Field& f, const TensorVector& image) {
  const int p = f.p();
  const int z = 2 * p - 2;
  LinOp op(f, z, z);
  const long base = 1 - static_cast<long>(p) * p - (static_cast<long>(p) * p - p) / 2;
  const CycloNum sign = p % 2 == 0 ? f.one() : -f.one();
  for (Word w : words_of_weight(z, p - 1)) {
    TensorVector v = image;
    v *= sign * f.q_pow(base - position_sum(w, z)) * f.qfact(p - 1);
    op.set_column(w, std::move(v));
  }
  return op;
}

}  // namespace

LinOp pt_betaalpha_closed(const Field& f) {
  const int z = 2 * f.p() - 2;
  return weight_pm1_map(f, apply_f_power(f, f.p() - 1, lowest(f, z)));
}

LinOp pt_alphabeta_closed(const Field& f) {
  const int z = 2 * f.p() - 2;
  return weight_pm1_map(f, apply_e_power(f, f.p() - 1, highest(f, z)));
}

TensorVector nested_cap(const Field& f, int z) {
  if (z < 1) throw std::invalid_argument("nested_cap: z must be positive");
  TensorVector v(f, 0);
  v.add(0, f.one());
  for (int m = 0; m < z; ++m) v = cap(f, m + 1, 2 * m + 2).apply(v);
  return v;
}

LinOp nested_cup(const Field& f, int z) {
  if (z < 1) throw std::invalid_argument("nested_cup: z must be positive");
  LinOp op = cup(f, z, 2 * z);
  for (int m = z - 1; m >= 1; --m) op = cup(f, m, 2 * m) * op;
  return op;
}

TensorVector nested_cap_closed(const Field& f, int z) {
  TensorVector v(f, 2 * z);
  const int n_strands = 2 * z;
  for (Word r = 0; r < (Word{1} << z); ++r) {
    const int n = weight(r);
    std::vector<int> positions;
    for (int pos = 1; pos <= z; ++pos) {
      if (occupied(r, z, pos)) positions.push_back(pos);
      else positions.push_back(2 * z + 1 - pos);
    }
    const CycloNum sign = (z - n) % 2 == 0 ? f.one() : -f.one();
    v.add(word_from_positions(positions, n_strands), sign * f.q_pow(-n));
  }
  return v;
}

}  // namespace uqpa
