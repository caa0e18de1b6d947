#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "uqpa/cyclo.hpp"

using namespace uqpa;

namespace {

std::complex<double> numeric(const CycloNum& x) {
  auto [re, im] = x.approx();
  return {re, im};
}

std::complex<double> q_numeric(int p, double k) { return std::polar(1.0, M_PI * k / p); }

double qint_numeric(int p, long n) { return std::sin(M_PI * n / p) / std::sin(M_PI / p); }

}  // namespace

TEST_CASE("cyclotomic moduli") {
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(8) == std::vector<long>{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(10) == std::vector<long>{1, -1, 1, -1, 1});
  Field f2(2), f3(3), f5(5);
  CHECK(f2.degree() == 2);
  CHECK(f3.degree() == 2);
  CHECK(f5.degree() == 4);
  CHECK_THROWS_AS(Field(1), std::invalid_argument);
}

TEST_CASE("q is a primitive 2p-th root of unity") {
  for (int p : {2, 3, 4, 5, 7}) {
    Field f(p);
    CHECK(f.q_pow(2 * p).is_one());
    CHECK(f.q_pow(p) == f.integer(-1));
    for (int k = 1; k < 2 * p; ++k) CHECK_FALSE(f.q_pow(k).is_one());
    CHECK(f.q_pow(-1) * f.q() == f.one());
  }
}

TEST_CASE("loop value") {
  CHECK(Field(2).delta().is_zero());
  CHECK(Field(3).delta().is_one());
  Field f4(4);
  CHECK(f4.delta() * f4.delta() == f4.integer(2));
}

TEST_CASE("quantum integers against the sine ratio") {
  for (int p : {2, 3, 4, 5, 6}) {
    Field f(p);
    CHECK(f.qint(0).is_zero());
    CHECK(f.qint(1).is_one());
    CHECK(f.qint(p).is_zero());
    for (long n = -2 * p; n <= 2 * p; ++n) {
      auto z = numeric(f.qint(n));
      CHECK(z.real() == doctest::Approx(qint_numeric(p, n)).epsilon(1e-9));
      CHECK(std::abs(z.imag()) < 1e-9);
      CHECK(f.qint(-n) == -f.qint(n));
    }
    for (long x = 0; x <= p; ++x) CHECK(f.qint(p - x) == f.qint(x));
  }
}

TEST_CASE("arithmetic agrees with complex evaluation") {
  for (int p : {3, 5, 7}) {
    Field f(p);
    CycloNum a = f.q_pow(3) + f.rational(mpq_class(1, 2)) * f.q() - f.integer(4);
    CycloNum b = f.q_pow(-2) + f.integer(3);
    auto qa = q_numeric(p, 3) + 0.5 * q_numeric(p, 1) - 4.0;
    auto qb = q_numeric(p, -2) + 3.0;
    CHECK(std::abs(numeric(a * b) - qa * qb) < 1e-9);
    CHECK(std::abs(numeric(a / b) - qa / qb) < 1e-9);
    CHECK(std::abs(numeric(a.pow(-3)) - std::pow(qa, -3)) < 1e-9);
    CHECK((a / b) * b == a);
  }
  CHECK_THROWS_AS(Field(3).zero().inverse(), std::domain_error);
}

TEST_CASE("parse inverts str") {
  Field f(5);
  CycloNum x = f.q_pow(3) * f.rational(mpq_class(-7, 3)) + f.q() - f.integer(2);
  CHECK(f.parse(x.str()) == x);
  CHECK(f.parse("q^-1") == f.q_pow(-1));
  CHECK(f.parse("0").is_zero());
}

TEST_CASE("factorials") {
  Field f3(3);
  CHECK(f3.qfact(0).is_one());
  CHECK(f3.qfact(2).is_one());
  CHECK(f3.qfact(3).is_zero());
  for (int p : {2, 3, 4, 5}) {
    Field f(p);
    for (long x = 0; x <= p - 1; ++x) CHECK(f.qfact(x) * f.qfact(p - 1 - x) == f.qfact(p - 1));
  }
}

TEST_CASE("symbolic ratios cancel before evaluation") {
  for (int p : {2, 3, 4}) {
    Field f(p);
    for (long k = 0; k <= 2 * p - 1; ++k) {
      QFactProduct r;
      r.times_qfact(2 * p - 1 - k).times_qfact(k).over_qfact(2 * p - 1);
      CHECK_NOTHROW(f.eval(r));
    }
    for (long k = 1; k <= p - 1; ++k) {
      QFactProduct r;
      r.times_qfact(p - k).times_qfact(k).over_qfact(p);
      CHECK_THROWS_AS(f.eval(r), SingularRatio);
    }
    QFactProduct same;
    same.times_qfact(5).over_qfact(5);
    CHECK(f.eval(same).is_one());
  }
  // [p+1] = -1 survives in the denominator only.
  Field f2(2);
  QFactProduct r;
  r.times_qfact(2).times_qfact(1).over_qfact(3);
  CHECK(f2.eval(r) == f2.integer(-1));
}

TEST_CASE("lambda and xi") {
  for (int p : {2, 3, 5}) {
    Field f(p);
    for (long k = 0; k <= 2 * p; ++k) {
      CHECK(f.lambda(0, k).is_one());
      CHECK(f.lambda(k, k).is_one());
    }
    CHECK(f.lambda(1, 2) == f.q_pow(-1) * f.qint(2));
    for (long z = 0; z <= 2 * p; ++z) CHECK(f.xi(0, z).is_one());
    CHECK(f.xi(1, 2) == f.q_pow(-2) + f.q_pow(-4));
    for (long z = 1; z <= 2 * p; ++z)
      for (long n = 1; n <= z; ++n)
        CHECK(f.xi(n, z) == f.q_pow(-2 * z) * f.xi(n - 1, z - 1) + (n <= z - 1 ? f.xi(n, z - 1) : f.zero()));
  }
}

TEST_CASE("gaussian binomials are finite and symmetric") {
  for (int p : {2, 3}) {
    Field f(p);
    for (long k = 0; k <= 3 * p; ++k)
      for (long i = 0; i <= k; ++i) CHECK(f.qbinom(k, i) == f.qbinom(k, k - i));
  }
  Field f3(3);
  CHECK(std::abs(numeric(f3.qbinom(6, 3)) - std::complex<double>(-2.0, 0.0)) < 1e-9);
}
