#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqpa/diagram.hpp"
#include "uqpa/generators.hpp"

using namespace uqpa;

TEST_CASE("alpha on the lowest state at p = 2") {
  Field f(2);
  auto g = make_generators(f);
  TensorVector expect(f, 3);
  expect.add(0b011, f.q_pow(-2));
  expect.add(0b101, f.q_pow(-1));
  expect.add(0b110, f.one());
  CHECK(g.alpha.column(0) == expect);
  CHECK(g.alpha.column(0b111).is_zero());
}

TEST_CASE("gamma") {
  CHECK(gamma_constant(Field(2)) == Field(2).integer(-1));
  CHECK(gamma_constant(Field(3)) == Field(3).integer(1));
  Field f4(4);
  CHECK(gamma_constant(f4) == f4.integer(-2));
  for (int p : {2, 3, 4, 5}) {
    Field f(p);
    CycloNum s = f.qfact(p - 1);
    CHECK(gamma_constant(f) == ((p - 1) % 2 ? f.integer(-1) : f.one()) * s * s);
  }
}

TEST_CASE("weight shifts and nilpotency") {
  for (int p : {2, 3}) {
    Field f(p);
    auto g = make_generators(f);
    const int n = 2 * p - 1;
    for (Word w = 0; w < (Word{1} << n); ++w) {
      const int k = weight(w);
      if (k >= p) CHECK(g.alpha.column(w).is_zero());
      else if (auto s = g.alpha.column(w).homogeneous_weight()) CHECK(*s == k + p);
      if (k < p) CHECK(g.beta.column(w).is_zero());
      else if (auto s = g.beta.column(w).homogeneous_weight()) CHECK(*s == k - p);
    }
    CHECK((g.alpha * g.alpha).is_zero());
    CHECK((g.beta * g.beta).is_zero());
  }
}

TEST_CASE("alpha and beta commute with the action") {
  for (int p : {2, 3}) {
    Field f(p);
    auto g = make_generators(f);
    const int n = 2 * p - 1;
    for (const LinOp& x : {op_K(f, n), op_E(f, n), op_F(f, n)}) {
      CHECK(g.alpha * x == x * g.alpha);
      CHECK(g.beta * x == x * g.beta);
    }
  }
}

TEST_CASE("explicit and simplified forms agree") {
  for (int p : {2, 3, 4}) {
    Field f(p);
    CHECK(alpha_explicit(f) == alpha_simplified(f));
    CHECK(beta_explicit(f) == beta_simplified(f));
  }
}

TEST_CASE("products give gamma times the projection") {
  for (int p : {2, 3}) {
    Field f(p);
    auto g = make_generators(f);
    CHECK(g.alpha * g.beta + g.beta * g.alpha == g.gamma * jw_closed(f, 2 * p - 1));
    CHECK(g.alpha * g.beta * g.alpha == g.gamma * g.alpha);
    CHECK(g.beta * g.alpha * g.beta == g.gamma * g.beta);
  }
}

TEST_CASE("partial traces") {
  for (int p : {2, 3}) {
    Field f(p);
    auto g = make_generators(f);
    CHECK(partial_trace_right(g.alpha).is_zero());
    CHECK(partial_trace_right(g.beta).is_zero());
    CHECK(partial_trace_left(g.alpha).is_zero());
    CHECK(partial_trace_left(g.beta).is_zero());
    CHECK(partial_trace_right(g.beta * g.alpha) == pt_betaalpha_closed(f));
    CHECK(partial_trace_right(g.alpha * g.beta) == pt_alphabeta_closed(f));
    const int n = 2 * p - 1;
    CHECK(partial_trace_right(LinOp::identity(f, n)) == f.delta() * LinOp::identity(f, n - 1));
  }
}

TEST_CASE("nested caps") {
  Field f(3);
  TensorVector one(f, 2);
  one.add(0b10, f.q_pow(-1));
  one.add(0b01, f.integer(-1));
  CHECK(nested_cap(f, 1) == one);
  for (int z = 1; z <= 4; ++z) {
    CHECK(nested_cap(f, z) == nested_cap_closed(f, z));
    auto loop = nested_cup(f, z).apply(nested_cap(f, z));
    CHECK(loop.coeff(0) == f.delta().pow(z));
  }
}
