#include <doctest.h>

#include <cmath>

#include "k3neck/errors.hpp"
#include "k3neck/real_number.hpp"

using namespace k3neck;

TEST_CASE("parsing produces the right tier") {
  CHECK(RealNumberRep::parse("1/2").is_rational());
  CHECK(RealNumberRep::parse("-7").is_rational());
  CHECK(RealNumberRep::parse("sqrt(2)").is_irrational_exact());
  CHECK(RealNumberRep::parse("1+2*sqrt(5)").is_irrational_exact());
  CHECK(RealNumberRep::parse("3/4-sqrt(8)/2").is_irrational_exact());
  CHECK(RealNumberRep::parse("sqrt(9)").is_rational());
  CHECK_FALSE(RealNumberRep::parse("0.3").is_exact());
  CHECK_THROWS_AS(RealNumberRep::parse("sqrt(2)+sqrt(3)"), DomainError);
  CHECK_THROWS_AS(RealNumberRep::parse("1/0"), DomainError);
  CHECK_THROWS_AS(RealNumberRep::parse("abc"), DomainError);
}

TEST_CASE("square-free reduction") {
  const RealNumberRep x = RealNumberRep::quadratic(1, 3, 12);  // 1 + 6 sqrt(3)
  CHECK(x.d() == 3);
  CHECK(x.b() == 6);
  CHECK(x.to_double() == doctest::Approx(1 + 6 * std::sqrt(3.0)));
}

TEST_CASE("distance to nearest integer is exact for rationals and stable for surds") {
  const RealNumberRep third = RealNumberRep::rational(1, 3);
  CHECK(third.dist_to_integer(3) == 0.0);
  CHECK(third.dist_to_integer(2) == doctest::Approx(1.0 / 3.0));
  CHECK(third.multiple_is_integer(6));
  CHECK_FALSE(third.multiple_is_integer(4));
  const RealNumberRep s2 = RealNumberRep::parse("sqrt(2)");
  // 985^2 * 2 - 1393^2 = 1, so ||985 sqrt 2|| = 1/(985 sqrt2 + 1393)
  const double want = 1.0 / (985 * std::sqrt(2.0) + 1393.0);
  CHECK(s2.dist_to_integer(985) == doctest::Approx(want).epsilon(1e-13));
  CHECK(s2.dist_to_integer(80782) > 0.0);
}

TEST_CASE("continued fractions of surds are periodic") {
  const ContinuedFraction cf = continued_fraction(RealNumberRep::parse("sqrt(7)"), 20);
  REQUIRE(cf.terms.size() >= 5);
  CHECK(cf.terms[0] == 2);
  CHECK(cf.terms[1] == 1);
  CHECK(cf.terms[2] == 1);
  CHECK(cf.terms[3] == 1);
  CHECK(cf.terms[4] == 4);
  CHECK(cf.period_length == 4);
  CHECK(max_partial_quotient(cf) == 4);
  const ContinuedFraction r = continued_fraction(RealNumberRep::rational(43, 30), 20);
  CHECK(r.terminates);
  CHECK(r.terms == std::vector<BigInt>{1, 2, 3, 4});
}
