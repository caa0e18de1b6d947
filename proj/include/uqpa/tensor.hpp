#pragma once

// Tensor powers of the two-dimensional module X = span{v0, v1}.
//
// A basis state of X^{(x)z} is a z-bit occupancy word: position 1 (the
// leftmost tensor factor) is the most significant bit and a set bit means v1
// sits there. The number of set bits is the weight n, and K acts on the state
// by q^{z-2n}.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "uqpa/cyclo.hpp"
#include "uqpa/linalg.hpp"

namespace uqpa {

using Word = std::uint32_t;

/// Hard ceiling on materialized strand counts.
inline constexpr int kMaxStrands = 20;

struct InfeasibleSize : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool occupied(Word w, int strands, int pos) {
  return ((w >> (strands - pos)) & 1u) != 0;
}
inline int weight(Word w) { return std::popcount(w); }
/// Sorted 1-based positions carrying v1.
std::vector<int> occupied_positions(Word w, int strands);
Word word_from_positions(const std::vector<int>& positions, int strands);
/// "v0110"; the empty word renders as "v".
std::string word_label(Word w, int strands);
/// All words of the given strand count and weight, ascending.
std::vector<Word> words_of_weight(int strands, int n);

class TensorVector {
 public:
  TensorVector(const Field& field, int strands);
  static TensorVector basis(const Field& field, int strands, Word w);

  const Field& field() const { return *field_; }
  int strands() const { return strands_; }
  const std::map<Word, CycloNum>& terms() const { return terms_; }
  CycloNum coeff(Word w) const;
  void add(Word w, const CycloNum& c);

  bool is_zero() const { return terms_.empty(); }
  /// Weight shared by every term, if the vector is weight-homogeneous.
  std::optional<int> homogeneous_weight() const;

  TensorVector& operator+=(const TensorVector& rhs);
  TensorVector& operator-=(const TensorVector& rhs);
  TensorVector& operator*=(const CycloNum& s);
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
  friend TensorVector operator*(const CycloNum& s, TensorVector a) { return a *= s; }
  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    return a.strands_ == b.strands_ && a.terms_ == b.terms_;
  }

  /// "q^2*v01 + v10"; multi-term coefficients are parenthesised.
  std::string str() const;

 private:
  const Field* field_;
  int strands_;
  std::map<Word, CycloNum> terms_;
};

TensorVector tensor(const TensorVector& a, const TensorVector& b);

/// A linear map X^{(x)in} -> X^{(x)out}, stored column by column.
class LinOp {
 public:
  LinOp(const Field& field, int in_strands, int out_strands);
  static LinOp identity(const Field& field, int strands);

  const Field& field() const { return *field_; }
  int in_strands() const { return in_; }
  int out_strands() const { return out_; }
  std::size_t in_dim() const { return columns_.size(); }

  const TensorVector& column(Word w) const { return columns_[w]; }
  void set_column(Word w, TensorVector v);
  void add_to_column(Word w, const TensorVector& v);

  TensorVector apply(const TensorVector& v) const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  /// Entries flattened as (input word, output word) -> input * 2^out + output.
  SparseVec flatten() const;

  LinOp& operator+=(const LinOp& rhs);
  LinOp& operator-=(const LinOp& rhs);
  LinOp& operator*=(const CycloNum& s);
  /// Composition: (a * b)(v) = a(b(v)).
  friend LinOp operator*(const LinOp& a, const LinOp& b);
  friend LinOp operator+(LinOp a, const LinOp& b) { return a += b; }
  friend LinOp operator-(LinOp a, const LinOp& b) { return a -= b; }
  friend LinOp operator*(const CycloNum& s, LinOp a) { return a *= s; }
  friend bool operator==(const LinOp& a, const LinOp& b);

 private:
  void check_same_shape(const LinOp& rhs) const;

  const Field* field_;
  int in_;
  int out_;
  std::vector<TensorVector> columns_;
};

LinOp tensor(const LinOp& a, const LinOp& b);
/// 1^{(x)left} (x) op (x) 1^{(x)right}
LinOp pad(const LinOp& op, int left, int right);
LinOp power(const LinOp& op, int k);

/// First input basis word on which two maps of the same shape differ.
struct Witness {
  int strands = 0;
  Word input = 0;
  std::string lhs;
  std::string rhs;
  std::string str() const;
};
std::optional<Witness> first_difference(const LinOp& a, const LinOp& b);

// ----------------------------------------------------- quantum group action

/// Coproduct-lifted generators on X^{(x)z}.
LinOp op_K(const Field& f, int z);
LinOp op_K_inv(const Field& f, int z);
LinOp op_E(const Field& f, int z);
LinOp op_F(const Field& f, int z);

/// Closed forms for E^k and F^k: every v1 lowered (v0 raised) at most once,
/// with coefficient q^{...}[k]! summed over the chosen subsets.
LinOp e_power(const Field& f, int k, int z);
LinOp f_power(const Field& f, int k, int z);

/// x_{0,z} = v0...v0 and x_{z,z} = v1...v1.
TensorVector lowest(const Field& f, int z);
TensorVector highest(const Field& f, int z);

/// E^k / F^k applied to a vector; k < 0 gives zero.
TensorVector apply_e_power(const Field& f, int k, const TensorVector& v);
TensorVector apply_f_power(const Field& f, int k, const TensorVector& v);

}  // namespace uqpa
