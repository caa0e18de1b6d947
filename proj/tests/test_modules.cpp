#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqpa/modules.hpp"

using namespace uqpa;

TEST_CASE("simple modules") {
  Field f(3);
  auto triv = simple_module(f, 1, 1);
  CHECK(triv.dimension == 1);
  CHECK(triv.E.is_zero());
  CHECK(triv.F.is_zero());
  CHECK(triv.K == Matrix::identity(f, 1));

  auto x = simple_module(f, 1, 2);
  CHECK(x.K(0, 0) == f.q());
  CHECK(x.K(1, 1) == f.q_pow(-1));
  CHECK(x.E(0, 1) == f.one());
  CHECK(x.F(1, 0) == f.one());
  CHECK(x.E(1, 0).is_zero());

  auto top = simple_module(f, -1, 3);
  for (int n = 0; n < 3; ++n) CHECK(top.K(n, n) == -f.q_pow(2 - 2 * n));
  CHECK_THROWS_AS(simple_module(f, 1, 4), std::out_of_range);
}

TEST_CASE("every module satisfies the defining relations") {
  for (int p : {2, 3, 4}) {
    Field f(p);
    for (const auto& l : all_labels(p)) {
      auto m = make_module(f, l);
      CHECK_MESSAGE(module_defects(m).empty(), l.str());
      if (l.projective) CHECK(m.dimension == static_cast<std::size_t>(2 * p));
      else CHECK(m.dimension == static_cast<std::size_t>(l.s));
    }
    CHECK(all_labels(p).size() == static_cast<std::size_t>(2 * p + 2 * (p - 1)));
  }
  Field f(3);
  CHECK(make_module(f, {true, 1, 1}).E.pow(3).is_zero());
  CHECK_THROWS_AS(projective_module(f, 1, 3), std::out_of_range);
}

TEST_CASE("hom-space dimensions") {
  for (int p : {2, 3}) {
    Field f(p);
    for (int s = 1; s <= p; ++s) {
      for (int t = 1; t <= p; ++t) {
        auto a = simple_module(f, 1, s), b = simple_module(f, 1, t), c = simple_module(f, -1, t);
        CHECK(intertwiner_space(a, b).maps.size() == (s == t ? 1u : 0u));
        CHECK(intertwiner_space(a, c).maps.empty());
      }
    }
    for (int s = 1; s < p; ++s)
      for (int t = 1; t < p; ++t) {
        auto a = projective_module(f, 1, s);
        CHECK(intertwiner_space(a, projective_module(f, 1, t)).maps.size() == (s == t ? 2u : 0u));
        CHECK(intertwiner_space(a, projective_module(f, -1, t)).maps.size() == (t == p - s ? 2u : 0u));
      }
    for (const auto& a : all_labels(p))
      for (const auto& b : all_labels(p))
        CHECK(intertwiner_space(make_module(f, a), make_module(f, b)).maps.size() ==
              static_cast<std::size_t>(expected_hom_dim(p, a, b)));
  }
}

TEST_CASE("explicit maps") {
  for (int p : {2, 3}) {
    Field f(p);
    for (const auto& m : explicit_maps(f)) {
      CHECK_MESSAGE(is_intertwiner(make_module(f, m.source), make_module(f, m.target), m.map), m.name);
    }
    for (const auto& h : verify_hom_forms(f)) {
      CHECK_MESSAGE(h.intertwiner, h.name);
      CHECK_MESSAGE(h.in_span, h.name);
      CHECK_MESSAGE(h.independent_of_identity, h.name);
    }
    auto a = make_module(f, {true, 1, 1});
    CHECK(is_intertwiner(a, a, Matrix(f, a.dimension, a.dimension)));
  }
}

TEST_CASE("labels") {
  CHECK(ModuleLabel{false, 1, 2}.str() == "X+_2");
  CHECK(ModuleLabel{true, -1, 1}.str() == "P-_1");
}
