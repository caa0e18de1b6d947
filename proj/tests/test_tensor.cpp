#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqpa/tensor.hpp"

using namespace uqpa;

TEST_CASE("word helpers") {
  CHECK(word_label(0b0110, 4) == "v0110");
  CHECK(word_label(0, 0) == "v");
  CHECK(occupied(0b100, 3, 1));
  CHECK_FALSE(occupied(0b100, 3, 3));
  CHECK(occupied_positions(0b1011, 4) == std::vector<int>{1, 3, 4});
  CHECK(word_from_positions({1, 3, 4}, 4) == 0b1011u);
  CHECK(words_of_weight(4, 2).size() == 6);
  CHECK(words_of_weight(3, 1) == std::vector<Word>{0b001, 0b010, 0b100});
}

TEST_CASE("generators on small tensor powers") {
  Field f(3);
  // K on a weight-2 state of three strands.
  auto v = TensorVector::basis(f, 3, 0b101);
  CHECK(op_K(f, 3).apply(v) == f.q_pow(-1) * v);
  // E on v11 via E (x) K + 1 (x) E.
  auto e11 = op_E(f, 2).apply(TensorVector::basis(f, 2, 0b11));
  TensorVector expect(f, 2);
  expect.add(0b01, f.q_pow(-1));
  expect.add(0b10, f.one());
  CHECK(e11 == expect);
  // E^2 v11 = [2]! v00.
  CHECK(power(op_E(f, 2), 2).apply(TensorVector::basis(f, 2, 0b11)) ==
        f.qfact(2) * TensorVector::basis(f, 2, 0));
}

TEST_CASE("module relations hold on X^(x)z") {
  for (int p : {2, 3}) {
    Field f(p);
    for (int z = 1; z <= 5; ++z) {
      LinOp K = op_K(f, z), Ki = op_K_inv(f, z), E = op_E(f, z), F = op_F(f, z);
      CHECK(K * Ki == LinOp::identity(f, z));
      CHECK(K * E * Ki == f.q_pow(2) * E);
      CHECK(K * F * Ki == f.q_pow(-2) * F);
      CHECK((f.q() - f.q_pow(-1)) * (E * F - F * E) == K - Ki);
      CHECK(power(E, p).is_zero());
      CHECK(power(F, p).is_zero());
      CHECK(power(K, 2 * p) == LinOp::identity(f, z));
    }
  }
}

TEST_CASE("weight grading") {
  Field f(3);
  const int z = 5;
  LinOp E = op_E(f, z), F = op_F(f, z);
  for (Word w = 0; w < (Word{1} << z); ++w) {
    auto e = E.column(w).homogeneous_weight();
    if (e) CHECK(*e == weight(w) - 1);
    auto fw = F.column(w).homogeneous_weight();
    if (fw) CHECK(*fw == weight(w) + 1);
  }
}

TEST_CASE("closed powers agree with iteration") {
  for (int p : {2, 3}) {
    Field f(p);
    for (int z = 1; z <= 2 * p; ++z)
      for (int k = 0; k <= z; ++k) {
        CHECK(e_power(f, k, z) == power(op_E(f, z), k));
        CHECK(f_power(f, k, z) == power(op_F(f, z), k));
      }
  }
}

TEST_CASE("F^z on the lowest vector") {
  Field f(5);
  for (int z = 1; z <= 4; ++z)
    CHECK(apply_f_power(f, z, lowest(f, z)) == f.qfact(z) * highest(f, z));
  CHECK(apply_e_power(f, -1, highest(f, 3)).is_zero());
}

TEST_CASE("tensor products and padding") {
  Field f(3);
  LinOp E1 = op_E(f, 1);
  CHECK(tensor(E1, op_K(f, 1)) + pad(E1, 1, 0) == op_E(f, 2));
  CHECK(pad(LinOp::identity(f, 2), 1, 1) == LinOp::identity(f, 4));
  auto w = first_difference(op_E(f, 2), op_F(f, 2));
  REQUIRE(w);
  CHECK(w->strands == 2);
  CHECK_FALSE(first_difference(op_E(f, 3), op_E(f, 3)));
}
