#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "uqpa/fusion.hpp"
#include "uqpa/relations.hpp"

using namespace uqpa;

TEST_CASE("relation catalogue") {
  const auto& ids = relation_ids();
  CHECK(ids.size() >= 25);
  CHECK(ids.front() == "eq1");
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  CHECK(is_relation_id("eq21"));
  CHECK_FALSE(is_relation_id("eq22"));
  CHECK(relation_strands("eq1", 3) == 5);
  CHECK(relation_strands("eq4", 3) == 8);
  CHECK(relation_strands("eq4", 2) == 5);
}

TEST_CASE("single checks") {
  auto r = verify("eq7", 2);
  CHECK(r.holds);
  CHECK_FALSE(r.skipped);
  CHECK(r.strands == 3);
  CHECK(verify("eq2", 2).holds);
  CHECK(verify("eq1", 3).holds);
  CHECK(verify("pt_betaalpha", 3).holds);
}

TEST_CASE("the rotation relations fail by a sign") {
  for (int p : {2, 3}) {
    auto r = verify("eq13", p);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK(r.detail.find("observed sign -1") != std::string::npos);
  }
}

TEST_CASE("budget") {
  auto r = verify("eq4", 3, 128);
  CHECK(r.skipped);
  CHECK_FALSE(r.holds);
  CHECK_FALSE(r.skip_reason.empty());
  CHECK_THROWS_AS(commutant_dim(2, 5, 256), InfeasibleSize);
}

TEST_CASE("parallel runs keep task order") {
  std::vector<VerifyTask> tasks{{"eq9", 2}, {"eq1", 3}, {"eq1", 2}, {"pt_alpha", 2}};
  auto out = verify_many(tasks, kDefaultBudget, 3);
  REQUIRE(out.size() == tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    CHECK(out[i].relation_id == tasks[i].id);
    CHECK(out[i].p == tasks[i].p);
  }
}

TEST_CASE("commutant dimensions match the fusion count") {
  const std::size_t d2[] = {0, 1, 2, 8, 32, 128};
  const std::size_t d3[] = {0, 1, 2, 5, 14, 45};
  for (int n = 1; n <= 5; ++n) {
    CHECK(commutant_dim(2, n) == d2[n]);
    CHECK(commutant_dim(3, n) == d3[n]);
    CHECK(mpz_class(commutant_dim(2, n)) == dimension(n, 2));
  }
}

TEST_CASE("rotation family") {
  for (int p : {2, 3}) {
    Field f(p);
    auto g = make_generators(f);
    auto s = rotation_span(f, g.alpha);
    CHECK(s.rank == static_cast<std::size_t>(4 * p - 2));
    CHECK(s.nullity == 2);
    CHECK(s.seeds_annihilate);
    CHECK(s.nullspace_is_seed_span);
    auto k = coefficient_vector(f, f.one(), f.zero());
    REQUIRE(k.size() == static_cast<std::size_t>(4 * p));
    const CycloNum sign = p % 2 ? f.one() : f.integer(-1);
    for (int i = 0; i + p < 4 * p; ++i) CHECK(k[i + p] == sign * k[i]);
    for (int i = 1; i + 1 < 4 * p; ++i) CHECK((k[i - 1] + f.delta() * k[i] + k[i + 1]).is_zero());
  }
}

TEST_CASE("basis list") {
  auto b3 = basis_check_2p(3);
  CHECK(b3.tl_count == 132);
  CHECK(b3.word_count == 30);
  CHECK(b3.rank == 162);
  CHECK(b3.commutant == 162);
  CHECK(b3.all_commute);

  // At p = 2 the loop value vanishes and the list has three relations.
  auto b2 = basis_check_2p(2);
  CHECK(b2.tl_count == 14);
  CHECK(b2.word_count == 18);
  CHECK(b2.commutant == 32);
  CHECK(b2.rank == 29);
  CHECK(b2.all_commute);
}

TEST_CASE("generator and projection suites") {
  for (int p : {2, 3}) {
    Field f(p);
    for (const auto& c : generator_checks(f)) CHECK_MESSAGE(c.holds, (c.name + ": " + c.detail));
    for (const auto& c : jw_checks(f)) CHECK_MESSAGE(c.holds, (c.name + ": " + c.detail));
  }
}

TEST_CASE("commuting-coefficient identity") {
  const std::size_t tuples[] = {0, 0, 6, 21, 56};
  for (int p : {2, 3, 4}) {
    Field f(p);
    auto ci = coefficient_identity(f);
    CHECK(ci.tuples == tuples[p]);
    CHECK(ci.expanded_agree == ci.tuples);
    CHECK(ci.literal_agree < ci.tuples);
  }
}
