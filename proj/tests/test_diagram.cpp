#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqpa/diagram.hpp"
#include "uqpa/fusion.hpp"

using namespace uqpa;

TEST_CASE("cup and cap") {
  Field f(3);
  LinOp c = cup(f, 1, 2);
  CHECK(c.column(0b00).is_zero());
  CHECK(c.column(0b11).is_zero());
  CHECK(c.column(0b01).coeff(0) == -f.q());
  CHECK(c.column(0b10).coeff(0) == f.one());
  LinOp a = cap(f, 1, 2);
  TensorVector expect(f, 2);
  expect.add(0b10, f.q_pow(-1));
  expect.add(0b01, f.integer(-1));
  CHECK(a.column(0) == expect);
  // Closed loop.
  CHECK((c * a).column(0).coeff(0) == f.delta());
}

TEST_CASE("straightening a zig-zag gives minus the identity") {
  for (int p : {2, 3, 4}) {
    Field f(p);
    LinOp left = cup(f, 1, 3) * cap(f, 2, 3);
    LinOp right = cup(f, 2, 3) * cap(f, 1, 3);
    CHECK(left == f.integer(-1) * LinOp::identity(f, 1));
    CHECK(right == f.integer(-1) * LinOp::identity(f, 1));
  }
}

TEST_CASE("Temperley-Lieb relations as maps") {
  for (int p : {2, 3, 5}) {
    Field f(p);
    LinOp e1 = e_op(f, 1, 4), e2 = e_op(f, 2, 4), e3 = e_op(f, 3, 4);
    CHECK(e1 * e1 == f.delta() * e1);
    CHECK(e1 * e2 * e1 == e1);
    CHECK(e2 * e1 * e2 == e2);
    CHECK(e2 * e3 * e2 == e2);
    CHECK(e1 * e3 == e3 * e1);
  }
  // e: v01 -> q v01 - v10.
  Field f(3);
  TensorVector img(f, 2);
  img.add(0b01, f.q());
  img.add(0b10, f.integer(-1));
  CHECK(e_op(f, 1, 2).column(0b01) == img);
}

TEST_CASE("Temperley-Lieb relations as diagrams") {
  Field f(3);
  auto e1 = TLElement::generator(f, 1, 3), e2 = TLElement::generator(f, 2, 3);
  CHECK(tl_compose(e1, e1) == f.delta() * e1);
  CHECK(tl_compose(tl_compose(e1, e2), e1) == e1);
  CHECK(tl_compose(TLElement::identity(f, 3), e2) == e2);
  Field f2(2);
  auto g = TLElement::generator(f2, 1, 2);
  CHECK(tl_compose(g, g).is_zero());
  CHECK_THROWS_AS(tl_compose(TLElement::identity(f, 2), e1), std::invalid_argument);
}

TEST_CASE("diagram bases have Catalan size") {
  for (int n = 0; n <= 7; ++n) CHECK(mpz_class(tl_basis(n).size()) == catalan(n));
  auto d = TLDiagram::from_parens(TLDiagram::generator(1, 3).parens());
  CHECK(d == TLDiagram::generator(1, 3));
  CHECK(TLDiagram::identity(4).through_strands() == 4);
  CHECK(TLDiagram::generator(2, 4).through_strands() == 2);
}

TEST_CASE("realized diagrams compose like the abstract algebra") {
  Field f(3);
  TLRealizer r(f, 4);
  for (const auto& a : r.diagrams())
    for (const auto& b : r.diagrams()) {
      auto prod = tl_compose(TLElement::from_diagram(f, a), TLElement::from_diagram(f, b));
      CHECK(r.matrix(prod) == r.matrix(a) * r.matrix(b));
    }
}

TEST_CASE("Jones-Wenzl projections") {
  for (int p : {2, 3, 4}) {
    Field f(p);
    for (int n = 1; n <= p - 1; ++n) {
      TLRealizer r(f, n);
      LinOp jw = r.matrix(jw_recursive(f, n));
      CHECK(jw * jw == jw);
      for (int i = 1; i < n; ++i) CHECK((e_op(f, i, n) * jw).is_zero());
      CHECK(jw_closed(f, n) == jw);
    }
    CHECK_THROWS_AS(jw_recursive(f, p), JWUndefined);
    for (int n = p; n <= 2 * p - 2; ++n) CHECK_THROWS_AS(jw_closed(f, n), SingularRatio);
    LinOp top = jw_closed(f, 2 * p - 1);
    CHECK(top * top == top);
    for (int i = 1; i < 2 * p - 1; ++i) CHECK((e_op(f, i, 2 * p - 1) * top).is_zero());
  }
}

TEST_CASE("one rotation click") {
  Field f(3);
  LinOp id1 = LinOp::identity(f, 1);
  // One click on a through strand straightens a single zig-zag.
  CHECK(rotation(id1) == f.integer(-1) * id1);
  CHECK(rotation_power(id1, 2) == id1);
  CHECK(rotation_power(e_op(f, 1, 2), 2) == e_op(f, 1, 2));
}
