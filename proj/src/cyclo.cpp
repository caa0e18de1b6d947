#include "uqpa/cyclo.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace uqpa {

namespace {

using Poly = std::vector<mpq_class>;

void trim_poly(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Integer polynomial long division by a monic divisor; exact.
std::vector<long> divide_exact(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long t = num[k];
    quot[k - dn] = t;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= t * den[i];
  }
  return quot;
}

// Polynomial division over Q: a = quot * b + rem.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim_poly(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly quot(a.size() - b.size() + 1);
  const mpq_class lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k] == 0) continue;
    const mpq_class t = a[k] / lead;
    quot[k - (b.size() - 1)] = t;
    for (std::size_t i = 0; i < b.size(); ++i) a[k - (b.size() - 1) + i] -= t * b[i];
    if (k == 0) break;
  }
  trim_poly(a);
  trim_poly(quot);
  return {quot, a};
}

Poly mul_poly(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Poly sub_poly(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim_poly(a);
  return a;
}

long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

// ---------------------------------------------------------------- CycloNum

CycloNum::CycloNum(const Field& field, std::vector<mpq_class> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  field.reduce(coeffs_);
  trim();
}

void CycloNum::trim() { trim_poly(coeffs_); }

void CycloNum::adopt(const CycloNum& other) {
  if (field_ == nullptr) field_ = other.field_;
}

bool CycloNum::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

mpq_class CycloNum::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : mpq_class(0);
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
  adopt(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) {
  adopt(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  CycloNum out;
  out.field_ = a.field_ ? a.field_ : b.field_;
  if (a.is_zero() || b.is_zero()) return out;
  if (a.coeffs_.size() == 1) {
    out.coeffs_ = b.coeffs_;
    for (auto& c : out.coeffs_) c *= a.coeffs_[0];
    return out;
  }
  if (b.coeffs_.size() == 1) {
    out.coeffs_ = a.coeffs_;
    for (auto& c : out.coeffs_) c *= b.coeffs_[0];
    return out;
  }
  out.coeffs_ = mul_poly(a.coeffs_, b.coeffs_);
  out.field_->reduce(out.coeffs_);
  out.trim();
  return out;
}

CycloNum& CycloNum::operator*=(const CycloNum& rhs) {
  *this = *this * rhs;
  return *this;
}

CycloNum& CycloNum::operator*=(const mpq_class& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

CycloNum& CycloNum::operator/=(const CycloNum& rhs) {
  adopt(rhs);
  if (rhs.coeffs_.size() == 1) {
    for (auto& c : coeffs_) c /= rhs.coeffs_[0];
    return *this;
  }
  return *this *= rhs.inverse();
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycloNum: inverse of zero");
  if (coeffs_.size() == 1) {
    CycloNum out = *this;
    out.coeffs_[0] = 1 / coeffs_[0];
    return out;
  }
  Poly modulus;
  for (long c : field_->modulus()) modulus.emplace_back(c);
  Poly r0 = modulus, r1 = coeffs_;
  Poly s0{}, s1{mpq_class(1)};
  while (!r1.empty()) {
    auto [quot, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly next = sub_poly(s0, mul_poly(quot, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  // r0 is the (constant) gcd since the modulus is irreducible.
  const mpq_class g = r0.at(0);
  for (auto& c : s0) c /= g;
  return CycloNum(*field_, std::move(s0));
}

CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum base = *this;
  CycloNum acc = field_ ? field_->one() : CycloNum();
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string CycloNum::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpq_class mag = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::pair<double, double> CycloNum::approx() const {
  if (field_ == nullptr) return {0.0, 0.0};
  double re = 0, im = 0;
  const double theta = std::numbers::pi / field_->p();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double c = coeffs_[k].get_d();
    re += c * std::cos(theta * static_cast<double>(k));
    im += c * std::sin(theta * static_cast<double>(k));
  }
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << x.str(); }

// ------------------------------------------------------------ QFactProduct

QFactProduct& QFactProduct::times_qint(long n) {
  if (n < 0) {
    sign_ = -sign_;
    n = -n;
  }
  num_.insert(n);
  return *this;
}

QFactProduct& QFactProduct::over_qint(long n) {
  if (n < 0) {
    sign_ = -sign_;
    n = -n;
  }
  den_.insert(n);
  return *this;
}

QFactProduct& QFactProduct::times_qfact(long n) {
  for (long i = 1; i <= n; ++i) num_.insert(i);
  return *this;
}

QFactProduct& QFactProduct::over_qfact(long n) {
  for (long i = 1; i <= n; ++i) den_.insert(i);
  return *this;
}

QFactProduct& QFactProduct::negate() {
  sign_ = -sign_;
  return *this;
}

QFactProduct QFactProduct::cancelled() const {
  QFactProduct out;
  out.sign_ = sign_;
  auto n = num_.begin();
  auto d = den_.begin();
  while (n != num_.end() && d != den_.end()) {
    if (*n < *d) {
      out.num_.insert(*n++);
    } else if (*d < *n) {
      out.den_.insert(*d++);
    } else {
      ++n;
      ++d;
    }
  }
  out.num_.insert(n, num_.end());
  out.den_.insert(d, den_.end());
  return out;
}

QFactProduct QFactProduct::folded(int p) const {
  QFactProduct out;
  out.sign_ = sign_;
  auto fold = [p](long x) { return (x >= 0 && x <= p) ? std::min<long>(x, p - x) : x; };
  for (long x : num_) out.num_.insert(fold(x));
  for (long x : den_) out.den_.insert(fold(x));
  return out;
}

// ------------------------------------------------------------------- Field

std::vector<long> cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  std::vector<long> poly(static_cast<std::size_t>(m) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) poly = divide_exact(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

Field::Field(int p) : p_(p) {
  if (p < 2) throw std::invalid_argument("make_field: p must be at least 2");
  modulus_ = cyclotomic_polynomial(2 * p);
  degree_ = static_cast<int>(modulus_.size()) - 1;
  powers_.reserve(static_cast<std::size_t>(2 * p));
  for (int k = 0; k < 2 * p; ++k) {
    std::vector<mpq_class> c(static_cast<std::size_t>(k) + 1);
    c[static_cast<std::size_t>(k)] = 1;
    powers_.emplace_back(*this, std::move(c));
  }
  delta_ = q_pow(1) + q_pow(-1);
}

void Field::reduce(std::vector<mpq_class>& c) const {
  const auto deg = static_cast<std::size_t>(degree_);
  for (std::size_t k = c.size(); k-- > deg;) {
    if (c[k] == 0) continue;
    const mpq_class t = c[k];
    c[k] = 0;
    for (std::size_t i = 0; i < deg; ++i) {
      if (modulus_[i] != 0) c[k - deg + i] -= t * modulus_[i];
    }
  }
  if (c.size() > deg) c.resize(deg);
}

CycloNum Field::integer(long n) const { return rational(mpq_class(n)); }

CycloNum Field::rational(const mpq_class& r) const {
  if (r == 0) {
    CycloNum z;
    z.field_ = this;
    return z;
  }
  return CycloNum(*this, {r});
}

CycloNum Field::q_pow(long k) const {
  return powers_[static_cast<std::size_t>(floor_mod(k, 2L * p_))];
}

CycloNum Field::qint(long n) const {
  if (n < 0) return -qint(-n);
  CycloNum acc = zero();
  for (long j = 0; j < n; ++j) acc += q_pow(n - 1 - 2 * j);
  if (acc.field_ == nullptr) acc.field_ = this;
  return acc;
}

CycloNum Field::qfact(long n) const {
  if (n < 0) throw std::invalid_argument("qfact: negative argument");
  CycloNum acc = one();
  for (long i = 1; i <= n && !acc.is_zero(); ++i) acc *= qint(i);
  return acc;
}

CycloNum Field::qbinom(long k, long i) const {
  if (i < 0 || k < 0 || i > k) return rational(0);
  // row[j] holds [m choose j]; recurrence
  // [m choose j] = q^{-j} [m-1 choose j] + q^{m-j} [m-1 choose j-1].
  std::vector<CycloNum> row{one()};
  for (long m = 1; m <= k; ++m) {
    std::vector<CycloNum> next(static_cast<std::size_t>(m) + 1);
    for (long j = 0; j <= m; ++j) {
      CycloNum v = rational(0);
      if (j < m) v += q_pow(-j) * row[static_cast<std::size_t>(j)];
      if (j > 0) v += q_pow(m - j) * row[static_cast<std::size_t>(j - 1)];
      next[static_cast<std::size_t>(j)] = std::move(v);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(i)];
}

CycloNum Field::lambda(long i, long k) const {
  if (i < 0 || i > k) throw std::invalid_argument("lambda: need 0 <= i <= k");
  return q_pow(i * i - i * k) * qbinom(k, i);
}

CycloNum Field::xi(long n, long z) const {
  if (n < 0 || n > z) throw std::invalid_argument("xi: need 0 <= n <= z");
  return q_pow(-n - n * z) * qbinom(z, n);
}

CycloNum Field::eval(const QFactProduct& r) const {
  const QFactProduct c = r.cancelled();
  auto vanishes = [this](long x) { return x % p_ == 0; };
  for (long x : c.denominator()) {
    if (vanishes(x)) {
      throw SingularRatio("quantum factorial ratio has an uncancelled [" +
                          std::to_string(x) + "] = 0 in its denominator");
    }
  }
  CycloNum num = integer(c.sign());
  for (long x : c.numerator()) {
    if (vanishes(x)) return rational(0);
    num *= qint(x);
  }
  CycloNum den = one();
  for (long x : c.denominator()) den *= qint(x);
  return num / den;
}

CycloNum Field::parse(std::string_view text) const {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("parse: empty input");
  CycloNum acc = rational(0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && !((s[end] == '+' || s[end] == '-') && s[end - 1] != '^')) ++end;
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("parse: empty term in '" + s + "'");
    pos = end;

    mpq_class coef(1);
    long exponent = 0;
    const auto qpos = term.find('q');
    std::string coef_text = qpos == std::string::npos ? term : term.substr(0, qpos);
    if (!coef_text.empty() && coef_text.back() == '*') coef_text.pop_back();
    if (!coef_text.empty()) {
      if (coef_text.find_first_not_of("0123456789/") != std::string::npos) {
        throw std::invalid_argument("parse: bad coefficient '" + coef_text + "'");
      }
      coef = mpq_class(coef_text);
      coef.canonicalize();
    }
    if (qpos != std::string::npos) {
      exponent = 1;
      if (qpos + 1 < term.size()) {
        if (term[qpos + 1] != '^') throw std::invalid_argument("parse: bad term '" + term + "'");
        std::size_t used = 0;
        exponent = std::stol(term.substr(qpos + 2), &used);
        if (qpos + 2 + used != term.size()) {
          throw std::invalid_argument("parse: bad exponent in '" + term + "'");
        }
      }
    }
    acc += q_pow(exponent) * mpq_class(sign * coef);
  }
  return acc;
}

FieldPtr make_field(int p) { return std::make_shared<const Field>(p); }

}  // namespace uqpa
