#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqpa/fusion.hpp"

using namespace uqpa;

TEST_CASE("catalan and ballot numbers") {
  const long c[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (int n = 0; n <= 10; ++n) CHECK(catalan(n) == c[n]);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(3, 4) == 0);
  for (long n = 0; n <= 10; ++n) CHECK(ballot(2 * n, n) == catalan(n));
}

TEST_CASE("decompositions of tensor powers") {
  CHECK(multiset_str(multiplicities(0, 3)) == "X+_1");
  CHECK(multiset_str(multiplicities(1, 3)) == "X+_2");
  CHECK(multiset_str(multiplicities(2, 2)) == "P+_1");
  CHECK(multiset_str(multiplicities(3, 2)) == "2X-_2 + 2X+_2");
  CHECK(multiset_str(multiplicities(3, 3)) == "X+_2 + P+_2");
  CHECK(multiset_str(multiplicities(4, 3)) == "X+_1 + 3X+_3 + P+_1");
  for (int p : {2, 3, 4, 5})
    for (int n = 0; n <= 12; ++n) CHECK(total_dimension(multiplicities(n, p), p) == mpz_class(1) << n);
}

TEST_CASE("dimensions of the endomorphism algebras") {
  const long d2[] = {1, 1, 2, 8, 32, 128, 512, 2048};
  const long d3[] = {1, 1, 2, 5, 14, 45, 162, 621, 2446, 9733, 38866};
  for (int n = 0; n <= 7; ++n) CHECK(dimension(n, 2) == d2[n]);
  for (int n = 0; n <= 10; ++n) CHECK(dimension(n, 3) == d3[n]);
}

TEST_CASE("low-n pattern") {
  for (int p : {2, 3, 4, 5}) {
    for (int n = 0; n < 2 * p - 1; ++n) CHECK(dimension(n, p) == catalan(n));
    CHECK(dimension(2 * p - 1, p) == catalan(2 * p - 1) + 3);
    CHECK(dimension(2 * p, p) == catalan(2 * p) + 12 * p - 6);
  }
}

TEST_CASE("conjecture evaluator") {
  using FC = FloorConvention;
  CHECK(conjecture_eval(2, 2, FC::Euclidean) == 2);
  CHECK(conjecture_eval(2, 2, FC::Truncate) == 17);
  CHECK(conjecture_eval(2, 2, FC::ZeroForNegative) == 2);
  CHECK(conjecture_eval(3, 2, FC::Euclidean) == 29);
  CHECK(conjecture_eval(3, 2, FC::Truncate) == 53);
  CHECK(conjecture_eval(3, 2, FC::ZeroForNegative) == 5);
  CHECK(conjecture_eval(4, 2, FC::ZeroForNegative) == 224);
  for (int p : {2, 3, 4})
    for (int n = 0; n < 2 * p; ++n) CHECK(conjecture_eval(n, p, FC::ZeroForNegative) == catalan(n));
}

TEST_CASE("convention names round trip") {
  for (auto c : all_conventions()) CHECK(parse_convention(convention_name(c)) == c);
  CHECK(parse_convention("zero") == FloorConvention::ZeroForNegative);
  CHECK_FALSE(parse_convention("round"));
}
