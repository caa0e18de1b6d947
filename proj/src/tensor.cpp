#include "uqpa/tensor.hpp"

#include <sstream>

namespace uqpa {

std::vector<int> occupied_positions(Word w, int strands) {
  std::vector<int> out;
  for (int pos = 1; pos <= strands; ++pos) {
    if (occupied(w, strands, pos)) out.push_back(pos);
  }
  return out;
}

Word word_from_positions(const std::vector<int>& positions, int strands) {
  Word w = 0;
  for (int pos : positions) {
    if (pos < 1 || pos > strands) throw std::out_of_range("word_from_positions: position out of range");
    w |= Word{1} << (strands - pos);
  }
  return w;
}

std::string word_label(Word w, int strands) {
  std::string s = "v";
  for (int pos = 1; pos <= strands; ++pos) s.push_back(occupied(w, strands, pos) ? '1' : '0');
  return s;
}

std::vector<Word> words_of_weight(int strands, int n) {
  std::vector<Word> out;
  for (Word w = 0; w < (Word{1} << strands); ++w) {
    if (weight(w) == n) out.push_back(w);
  }
  return out;
}

// ------------------------------------------------------------ TensorVector

TensorVector::TensorVector(const Field& field, int strands) : field_(&field), strands_(strands) {}

TensorVector TensorVector::basis(const Field& field, int strands, Word w) {
  TensorVector v(field, strands);
  v.terms_.emplace(w, field.one());
  return v;
}

CycloNum TensorVector::coeff(Word w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? field_->zero() : it->second;
}

void TensorVector::add(Word w, const CycloNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> TensorVector::homogeneous_weight() const {
  if (terms_.empty()) return std::nullopt;
  const int n = weight(terms_.begin()->first);
  for (const auto& [w, c] : terms_) {
    if (weight(w) != n) return std::nullopt;
  }
  return n;
}

TensorVector& TensorVector::operator+=(const TensorVector& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, -c);
  return *this;
}

TensorVector& TensorVector::operator*=(const CycloNum& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

std::string TensorVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string coef = c.str();
    bool negative = false;
    if (c.coeffs().size() <= 1 && coef.front() == '-') {
      negative = true;
      coef.erase(0, 1);
    } else if (coef.find_first_of("+-", 1) != std::string::npos) {
      coef = "(" + coef + ")";
    }
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    if (coef != "1") os << coef << "*";
    os << word_label(w, strands_);
  }
  return os.str();
}

TensorVector tensor(const TensorVector& a, const TensorVector& b) {
  TensorVector out(a.field(), a.strands() + b.strands());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) out.add((wa << b.strands()) | wb, ca * cb);
  }
  return out;
}

// ------------------------------------------------------------------- LinOp

LinOp::LinOp(const Field& field, int in_strands, int out_strands)
    : field_(&field), in_(in_strands), out_(out_strands) {
  if (in_strands < 0 || out_strands < 0 || in_strands > kMaxStrands || out_strands > kMaxStrands) {
    throw InfeasibleSize("LinOp: strand count outside [0, " + std::to_string(kMaxStrands) + "]");
  }
  columns_.assign(std::size_t{1} << in_strands, TensorVector(field, out_strands));
}

LinOp LinOp::identity(const Field& field, int strands) {
  LinOp op(field, strands, strands);
  for (Word w = 0; w < op.in_dim(); ++w) op.columns_[w] = TensorVector::basis(field, strands, w);
  return op;
}

void LinOp::set_column(Word w, TensorVector v) {
  if (v.strands() != out_) throw std::invalid_argument("LinOp::set_column: strand mismatch");
  columns_.at(w) = std::move(v);
}

void LinOp::add_to_column(Word w, const TensorVector& v) {
  if (v.strands() != out_) throw std::invalid_argument("LinOp::add_to_column: strand mismatch");
  columns_.at(w) += v;
}

TensorVector LinOp::apply(const TensorVector& v) const {
  if (v.strands() != in_) throw std::invalid_argument("LinOp::apply: strand mismatch");
  TensorVector out(*field_, out_);
  for (const auto& [w, c] : v.terms()) {
    for (const auto& [u, d] : columns_[w].terms()) out.add(u, c * d);
  }
  return out;
}

bool LinOp::is_zero() const {
  for (const auto& c : columns_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::size_t LinOp::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.terms().size();
  return n;
}

SparseVec LinOp::flatten() const {
  SparseVec out;
  for (Word w = 0; w < columns_.size(); ++w) {
    for (const auto& [u, c] : columns_[w].terms()) {
      out.emplace((static_cast<std::size_t>(w) << out_) | u, c);
    }
  }
  return out;
}

void LinOp::check_same_shape(const LinOp& rhs) const {
  if (in_ != rhs.in_ || out_ != rhs.out_) throw std::invalid_argument("LinOp: shape mismatch");
}

LinOp& LinOp::operator+=(const LinOp& rhs) {
  check_same_shape(rhs);
  for (std::size_t w = 0; w < columns_.size(); ++w) columns_[w] += rhs.columns_[w];
  return *this;
}

LinOp& LinOp::operator-=(const LinOp& rhs) {
  check_same_shape(rhs);
  for (std::size_t w = 0; w < columns_.size(); ++w) columns_[w] -= rhs.columns_[w];
  return *this;
}

LinOp& LinOp::operator*=(const CycloNum& s) {
  for (auto& c : columns_) c *= s;
  return *this;
}

LinOp operator*(const LinOp& a, const LinOp& b) {
  if (a.in_ != b.out_) throw std::invalid_argument("LinOp: composition strand mismatch");
  LinOp out(*a.field_, b.in_, a.out_);
  for (std::size_t w = 0; w < b.columns_.size(); ++w) out.columns_[w] = a.apply(b.columns_[w]);
  return out;
}

bool operator==(const LinOp& a, const LinOp& b) {
  return a.in_ == b.in_ && a.out_ == b.out_ && a.columns_ == b.columns_;
}

LinOp tensor(const LinOp& a, const LinOp& b) {
  LinOp out(a.field(), a.in_strands() + b.in_strands(), a.out_strands() + b.out_strands());
  for (Word wa = 0; wa < a.in_dim(); ++wa) {
    if (a.column(wa).is_zero()) continue;
    for (Word wb = 0; wb < b.in_dim(); ++wb) {
      if (b.column(wb).is_zero()) continue;
      out.set_column((wa << b.in_strands()) | wb, tensor(a.column(wa), b.column(wb)));
    }
  }
  return out;
}

LinOp pad(const LinOp& op, int left, int right) {
  const Field& f = op.field();
  LinOp out(f, op.in_strands() + left + right, op.out_strands() + left + right);
  const Word right_mask = (Word{1} << right) - 1;
  for (Word w = 0; w < out.in_dim(); ++w) {
    const Word lo = w & right_mask;
    const Word mid = (w >> right) & ((Word{1} << op.in_strands()) - 1);
    const Word hi = w >> (right + op.in_strands());
    TensorVector col(f, out.out_strands());
    for (const auto& [u, c] : op.column(mid).terms()) {
      col.add((((hi << op.out_strands()) | u) << right) | lo, c);
    }
    out.set_column(w, std::move(col));
  }
  return out;
}

LinOp power(const LinOp& op, int k) {
  LinOp acc = LinOp::identity(op.field(), op.in_strands());
  for (int i = 0; i < k; ++i) acc = op * acc;
  return acc;
}

std::string Witness::str() const {
  return "on " + word_label(input, strands) + ": lhs = " + lhs + ", rhs = " + rhs;
}

std::optional<Witness> first_difference(const LinOp& a, const LinOp& b) {
  if (a.in_strands() != b.in_strands() || a.out_strands() != b.out_strands()) {
    Witness w;
    w.lhs = "shape " + std::to_string(a.in_strands()) + "->" + std::to_string(a.out_strands());
    w.rhs = "shape " + std::to_string(b.in_strands()) + "->" + std::to_string(b.out_strands());
    return w;
  }
  for (Word w = 0; w < a.in_dim(); ++w) {
    if (!(a.column(w) == b.column(w))) {
      return Witness{a.in_strands(), w, a.column(w).str(), b.column(w).str()};
    }
  }
  return std::nullopt;
}

// ----------------------------------------------------- quantum group action

LinOp op_K(const Field& f, int z) {
  LinOp op(f, z, z);
  for (Word w = 0; w < op.in_dim(); ++w) {
    TensorVector v(f, z);
    v.add(w, f.q_pow(z - 2 * weight(w)));
    op.set_column(w, std::move(v));
  }
  return op;
}

LinOp op_K_inv(const Field& f, int z) {
  LinOp op(f, z, z);
  for (Word w = 0; w < op.in_dim(); ++w) {
    TensorVector v(f, z);
    v.add(w, f.q_pow(2 * weight(w) - z));
    op.set_column(w, std::move(v));
  }
  return op;
}

// Delta(E) = E (x) K + 1 (x) E: lowering position j picks up K from every
// factor to its right.
LinOp op_E(const Field& f, int z) {
  LinOp op(f, z, z);
  for (Word w = 0; w < op.in_dim(); ++w) {
    TensorVector v(f, z);
    for (int pos = 1; pos <= z; ++pos) {
      if (!occupied(w, z, pos)) continue;
      const Word right = w & ((Word{1} << (z - pos)) - 1);
      const int ones = weight(right);
      const int zeros = (z - pos) - ones;
      v.add(w & ~(Word{1} << (z - pos)), f.q_pow(zeros - ones));
    }
    op.set_column(w, std::move(v));
  }
  return op;
}

// Delta(F) = F (x) 1 + K^{-1} (x) F: raising position j picks up K^{-1} from
// every factor to its left.
LinOp op_F(const Field& f, int z) {
  LinOp op(f, z, z);
  for (Word w = 0; w < op.in_dim(); ++w) {
    TensorVector v(f, z);
    for (int pos = 1; pos <= z; ++pos) {
      if (occupied(w, z, pos)) continue;
      const Word left = w >> (z - pos + 1);
      const int ones = weight(left);
      const int zeros = (pos - 1) - ones;
      v.add(w | (Word{1} << (z - pos)), f.q_pow(ones - zeros));
    }
    op.set_column(w, std::move(v));
  }
  return op;
}

namespace {

// Iterates over all submasks of `mask` with exactly k bits.
template <typename Fn>
void for_each_submask(Word mask, int k, Fn&& fn) {
  if (k == 0) {
    fn(Word{0});
    return;
  }
  for (Word sub = mask;; sub = (sub - 1) & mask) {
    if (weight(sub) == k) fn(sub);
    if (sub == 0) break;
  }
}

TensorVector e_power_column(const Field& f, int k, int z, Word w) {
  TensorVector v(f, z);
  if (k < 0 || k > weight(w)) return v;
  const CycloNum scale = f.qfact(k);
  if (scale.is_zero()) return v;
  for_each_submask(w, k, [&](Word sub) {
    long exponent = static_cast<long>(k) * (k - 1) / 2;
    for (int pos = 1; pos <= z; ++pos) {
      if (!occupied(sub, z, pos)) continue;
      const Word right = w & ((Word{1} << (z - pos)) - 1);
      const int ones = weight(right);
      exponent += (z - pos - ones) - ones;
    }
    v.add(w & ~sub, f.q_pow(exponent) * scale);
  });
  return v;
}

TensorVector f_power_column(const Field& f, int k, int z, Word w) {
  TensorVector v(f, z);
  const Word full = (Word{1} << z) - 1;
  if (k < 0 || k > z - weight(w)) return v;
  const CycloNum scale = f.qfact(k);
  if (scale.is_zero()) return v;
  for_each_submask(full & ~w, k, [&](Word sub) {
    long exponent = static_cast<long>(k) * (k - 1) / 2;
    for (int pos = 1; pos <= z; ++pos) {
      if (!occupied(sub, z, pos)) continue;
      const int ones = weight(w >> (z - pos + 1));
      exponent += ones - ((pos - 1) - ones);
    }
    v.add(w | sub, f.q_pow(exponent) * scale);
  });
  return v;
}

}  // namespace

LinOp e_power(const Field& f, int k, int z) {
  LinOp op(f, z, z);
  for (Word w = 0; w < op.in_dim(); ++w) op.set_column(w, e_power_column(f, k, z, w));
  return op;
}

LinOp f_power(const Field& f, int k, int z) {
  LinOp op(f, z, z);
  for (Word w = 0; w < op.in_dim(); ++w) op.set_column(w, f_power_column(f, k, z, w));
  return op;
}

TensorVector lowest(const Field& f, int z) { return TensorVector::basis(f, z, 0); }

TensorVector highest(const Field& f, int z) {
  return TensorVector::basis(f, z, (Word{1} << z) - 1);
}

TensorVector apply_e_power(const Field& f, int k, const TensorVector& v) {
  TensorVector out(f, v.strands());
  for (const auto& [w, c] : v.terms()) out += c * e_power_column(f, k, v.strands(), w);
  return out;
}

TensorVector apply_f_power(const Field& f, int k, const TensorVector& v) {
  TensorVector out(f, v.strands());
  for (const auto& [w, c] : v.terms()) out += c * f_power_column(f, k, v.strands(), w);
  return out;
}

}  // namespace uqpa
