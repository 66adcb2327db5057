#include "brauer/laurent.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace brauer;

namespace {

LaurentPoly d(int e, int c = 1) { return LaurentPoly::monomial(e, c); }

}  // namespace

TEST_CASE("addition cancels and merges like terms") {
  CHECK((d(1) + d(1, -1)).is_zero());
  CHECK(d(2) + d(0) + d(1) == d(2) + d(1) + d(0));
  CHECK((d(2) + d(0)) + d(1) == d(0) + d(1) + d(2));
  CHECK(d(-1, 3) + d(-1, -1) == d(-1, 2));
  CHECK((d(-1, 3) + d(-1, -1)).terms().size() == 1);
}

TEST_CASE("multiplication of small polynomials") {
  CHECK(d(1) * d(-1) == LaurentPoly::constant(1));
  CHECK((d(2) * LaurentPoly{}).is_zero());
  CHECK((d(1) + d(0)) * (d(1) - d(0)) == d(2) - d(0));
}

TEST_CASE("zero coefficients are never stored") {
  LaurentPoly p = LaurentPoly::monomial(3, 0);
  CHECK(p.is_zero());
  p += d(2, 5);
  p -= d(2, 5);
  CHECK(p.terms().empty());
  CHECK(p == LaurentPoly{});
}

TEST_CASE("coefficients beyond 64 bits stay exact") {
  LaurentPoly p = d(1, 1000000007);
  LaurentPoly q = p;
  for (int k = 0; k < 4; ++k) q *= p;
  BigInt expect = 1;
  for (int k = 0; k < 5; ++k) expect *= 1000000007;
  CHECK(q.coeff(5) == expect);
  CHECK(q.terms().size() == 1);
}

TEST_CASE("shift and coefficient lookup") {
  LaurentPoly p = d(2, 3) + d(-1, -2);
  CHECK(p.shifted(1) == d(3, 3) + d(0, -2));
  CHECK(p.shifted(-2).coeff(-3) == -2);
  CHECK(p.coeff(7) == 0);
}

TEST_CASE("to_string lists the highest degree first") {
  CHECK((d(2) + d(0, 3) + d(-1, -2)).to_string() == "d^2 + 3 - 2d^-1");
  CHECK(LaurentPoly{}.to_string() == "0");
  CHECK(d(1).to_string() == "d");
  CHECK(d(0, -1).to_string() == "-1");
}

TEST_CASE("sorted_terms ascends by exponent") {
  auto t = (d(4, 2) + d(-3, 1) + d(0, -5)).sorted_terms();
  REQUIRE(t.size() == 3);
  CHECK(t[0].first == -3);
  CHECK(t[1].first == 0);
  CHECK(t[2].first == 4);
  CHECK(t[1].second == -5);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(testing::kSeed);
  for (int trial = 0; trial < 500; ++trial) {
    LaurentPoly a = testing::random_laurent(rng);
    LaurentPoly b = testing::random_laurent(rng);
    LaurentPoly c = testing::random_laurent(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * LaurentPoly::constant(1) == a);
    CHECK(add(a, b) == a + b);
    CHECK(mul(a, b) == a * b);
  }
}

TEST_CASE("delta is a unit") {
  std::mt19937 rng(testing::kSeed + 1);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = testing::random_laurent(rng);
    CHECK(a * d(1) * d(-1) == a);
    CHECK(a * d(3) == a.shifted(3));
  }
}
