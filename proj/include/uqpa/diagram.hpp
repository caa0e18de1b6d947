#pragma once

// Temperley-Lieb diagrams and their realization on tensor powers of X.
//
// cup:  v01 -> -q,  v10 -> 1,  v00, v11 -> 0
// cap:  1 -> q^{-1} v10 - v01
//
// With these maps a closed loop evaluates to delta = q + q^{-1} and a
// straightened zig-zag to -1, so diagrams are realized through words in the
// generators e_i = cap_i cup_i rather than by isotopy.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "uqpa/cyclo.hpp"
#include "uqpa/tensor.hpp"

namespace uqpa {

struct JWUndefined : std::domain_error {
  using std::domain_error::domain_error;
};

/// X^{(x)n} -> X^{(x)(n-2)}, contracting positions i, i+1.
LinOp cup(const Field& f, int i, int n);
/// X^{(x)(n-2)} -> X^{(x)n}, inserting the cap at positions i, i+1.
LinOp cap(const Field& f, int i, int n);
/// cap(i, n) * cup(i, n) on X^{(x)n}.
LinOp e_op(const Field& f, int i, int n);

/// A planar pairing of top (input) and bottom (output) boundary points.
/// Points 0..top-1 are the top row left to right, top..top+bottom-1 the
/// bottom row left to right.
class TLDiagram {
 public:
  TLDiagram(int top, int bottom, std::vector<int> partner);
  static TLDiagram identity(int n);
  /// e_i on n strands (1-based).
  static TLDiagram generator(int i, int n);
  /// Parses parenthesis notation, e.g. "()|()" for e_1 on two strands;
  /// see parens().
  static TLDiagram from_parens(const std::string& text);

  int top() const { return top_; }
  int bottom() const { return bottom_; }
  const std::vector<int>& partner() const { return partner_; }

  /// Balanced-parenthesis word read clockwise: top row left to right, then
  /// bottom row right to left, with '|' between the two rows.
  std::string parens() const;
  /// Pairs of (point, partner) with point < partner.
  std::vector<std::pair<int, int>> pairs() const;
  int through_strands() const;

  friend auto operator<=>(const TLDiagram&, const TLDiagram&) = default;

 private:
  int top_;
  int bottom_;
  std::vector<int> partner_;
};

struct Composite {
  TLDiagram diagram;
  int loops;
};

/// a o b: b is applied first, its bottom glued to a's top.
Composite compose(const TLDiagram& a, const TLDiagram& b);
/// Adds `extra` through strands on the right.
TLDiagram extend_right(const TLDiagram& d, int extra);

/// All planar endomorphism diagrams on n strands (Catalan(n) of them).
std::vector<TLDiagram> tl_basis(int n);

/// Formal linear combination of diagrams; loops are absorbed as powers of
/// delta on composition.
class TLElement {
 public:
  TLElement(const Field& field, int top, int bottom);
  static TLElement identity(const Field& field, int n);
  static TLElement generator(const Field& field, int i, int n);
  static TLElement from_diagram(const Field& field, const TLDiagram& d);

  const Field& field() const { return *field_; }
  int top() const { return top_; }
  int bottom() const { return bottom_; }
  const std::map<TLDiagram, CycloNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const TLDiagram& d, const CycloNum& c);

  TLElement& operator+=(const TLElement& rhs);
  TLElement& operator-=(const TLElement& rhs);
  TLElement& operator*=(const CycloNum& s);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  friend TLElement operator*(const CycloNum& s, TLElement a) { return a *= s; }
  friend bool operator==(const TLElement& a, const TLElement& b) {
    return a.top_ == b.top_ && a.bottom_ == b.bottom_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  const Field* field_;
  int top_;
  int bottom_;
  std::map<TLDiagram, CycloNum> terms_;
};

/// Bilinear composition a o b; throws std::invalid_argument on boundary
/// mismatch.
TLElement tl_compose(const TLElement& a, const TLElement& b);
TLElement extend_right(const TLElement& x, int extra);

/// Realizes endomorphism diagrams of TL_n as maps on X^{(x)n} via reduced
/// words in the e_i; the word table is built once per instance.
class TLRealizer {
 public:
  TLRealizer(const Field& field, int n);
  int strands() const { return n_; }
  const LinOp& matrix(const TLDiagram& d) const;
  LinOp matrix(const TLElement& x) const;
  /// Reduced word (left to right) in 1-based generator indices.
  const std::vector<int>& word(const TLDiagram& d) const;
  const std::vector<TLDiagram>& diagrams() const { return order_; }

 private:
  const Field* field_;
  int n_;
  std::vector<TLDiagram> order_;
  std::map<TLDiagram, std::pair<std::vector<int>, LinOp>> table_;
};

/// f_1 = 1, f_{n+1} = f_n (x) 1 - [n]/[n+1] f_n e_n f_n. Throws JWUndefined
/// when the recursion would divide by [m] = 0, i.e. for n >= p.
TLElement jw_recursive(const Field& f, int n);
/// rho_S -> q^{kn - (k^2-k)/2 - sum S} [n-k]!/[n]! F^k x_{0,n}, k = |S|.
/// Throws SingularRatio where that ratio is undefined (p <= n <= 2p-2).
LinOp jw_closed(const Field& f, int n);

/// One clockwise click: (cup (x) 1^n) o (1 (x) op (x) 1) o (1^n (x) cap).
LinOp rotation(const LinOp& op);
LinOp rotation_power(const LinOp& op, int clicks);

}  // namespace uqpa
