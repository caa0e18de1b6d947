#pragma once

// Exact arithmetic in Q(q), q a primitive 2p-th root of unity, together with
// the quantum-combinatorial scalars built from it.
//
// Elements are stored as rational coefficient vectors reduced modulo the
// 2p-th cyclotomic polynomial, so the representation is canonical and every
// nonzero element is invertible.

#include <gmpxx.h>

#include <iosfwd>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uqpa {

class Field;

/// Raised when a quantum-factorial ratio keeps an uncancelled [m] = 0 in its
/// denominator.
struct SingularRatio : std::domain_error {
  using std::domain_error::domain_error;
};

class CycloNum {
 public:
  CycloNum() = default;
  CycloNum(const Field& field, std::vector<mpq_class> coeffs);

  const Field* field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// Coefficients of 1, q, q^2, ... (trailing zeros trimmed).
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class coeff(std::size_t k) const;

  CycloNum& operator+=(const CycloNum& rhs);
  CycloNum& operator-=(const CycloNum& rhs);
  CycloNum& operator*=(const CycloNum& rhs);
  CycloNum& operator*=(const mpq_class& rhs);
  CycloNum& operator/=(const CycloNum& rhs);
  CycloNum operator-() const;

  /// Throws std::domain_error on zero.
  CycloNum inverse() const;
  /// Integer power; negative exponents invert.
  CycloNum pow(long e) const;

  /// Canonical rendering, highest power first: "1/2*q^3 - q + 2".
  std::string str() const;
  /// Floating-point value (diagnostics only).
  std::pair<double, double> approx() const;

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(CycloNum a, const mpq_class& b) { return a *= b; }
  friend CycloNum operator*(const mpq_class& b, CycloNum a) { return a *= b; }
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  friend class Field;
  void trim();
  void adopt(const CycloNum& other);

  const Field* field_ = nullptr;
  std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycloNum& x);

/// A symbolic product  sign * prod [n_i] / prod [d_j]  of quantum integers.
/// Identical indices are cancelled before anything is evaluated, which is
/// how ratios such as [2p-1-k]![k]!/[2p-1]! stay finite.
class QFactProduct {
 public:
  QFactProduct& times_qint(long n);
  QFactProduct& over_qint(long n);
  QFactProduct& times_qfact(long n);
  QFactProduct& over_qfact(long n);
  QFactProduct& negate();

  int sign() const { return sign_; }
  const std::multiset<long>& numerator() const { return num_; }
  const std::multiset<long>& denominator() const { return den_; }

  /// Removes indices present in both numerator and denominator.
  QFactProduct cancelled() const;
  /// Rewrites every index x in [0, p] as min(x, p - x) using [p-x] = [x].
  QFactProduct folded(int p) const;

 private:
  int sign_ = 1;
  std::multiset<long> num_;
  std::multiset<long> den_;
};

class Field {
 public:
  /// Throws std::invalid_argument for p < 2.
  explicit Field(int p);
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  int p() const { return p_; }
  int order() const { return 2 * p_; }
  /// Euler totient of 2p.
  int degree() const { return degree_; }
  /// Monic cyclotomic polynomial, lowest coefficient first.
  const std::vector<long>& modulus() const { return modulus_; }

  CycloNum zero() const { return rational(0); }
  CycloNum one() const { return integer(1); }
  CycloNum integer(long n) const;
  CycloNum rational(const mpq_class& r) const;
  CycloNum q() const { return q_pow(1); }
  CycloNum q_pow(long k) const;
  /// Loop value q + q^-1.
  const CycloNum& delta() const { return delta_; }

  /// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [-n] = -[n].
  CycloNum qint(long n) const;
  /// [n]! = [1][2]...[n]; [0]! = 1.
  CycloNum qfact(long n) const;
  /// Symmetric Gaussian binomial [k]!/([i]![k-i]!) evaluated from the
  /// q-Pascal recurrence, hence finite at every k.
  CycloNum qbinom(long k, long i) const;
  /// q^{i^2 - ik} [k]!/([i]![k-i]!), the coproduct coefficient of E^k.
  CycloNum lambda(long i, long k) const;
  /// q^{-n-nz} [z]!/([n]![z-n]!).
  CycloNum xi(long n, long z) const;

  /// Throws SingularRatio when a zero factor survives in the denominator.
  CycloNum eval(const QFactProduct& r) const;

  /// Inverse of str(); accepts any integer exponent of q.
  CycloNum parse(std::string_view text) const;

  /// Reduces a coefficient vector of arbitrary length modulo the modulus.
  void reduce(std::vector<mpq_class>& c) const;

 private:
  int p_;
  int degree_;
  std::vector<long> modulus_;
  std::vector<CycloNum> powers_;  // q^k, k in [0, 2p)
  CycloNum delta_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(int p);

/// Coefficients of the m-th cyclotomic polynomial, lowest first.
std::vector<long> cyclotomic_polynomial(int m);

}  // namespace uqpa
