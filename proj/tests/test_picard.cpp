#include <doctest.h>

#include "k3neck/errors.hpp"
#include "k3neck/picard.hpp"

using namespace k3neck;

TEST_CASE("intersection form is diag(1, -1, ..., -1)") {
  CHECK(intersect(DivisorClass::H(), DivisorClass::H()) == 1);
  for (int i = 1; i <= 9; ++i) {
    CHECK(intersect(DivisorClass::E(i), DivisorClass::E(i)) == -1);
    CHECK(intersect(DivisorClass::H(), DivisorClass::E(i)) == 0);
    for (int j = i + 1; j <= 9; ++j) CHECK(intersect(DivisorClass::E(i), DivisorClass::E(j)) == 0);
  }
}

TEST_CASE("intersection is bilinear and symmetric") {
  const DivisorClass a = DivisorClass::uniform(5, 1) + DivisorClass::E(3);
  const DivisorClass b = DivisorClass::uniform(4, 2) - DivisorClass::H();
  const DivisorClass c = DivisorClass::E(7);
  CHECK(intersect(a, b) == intersect(b, a));
  CHECK(intersect(a + c, b) == intersect(a, b) + intersect(c, b));
}

TEST_CASE("anticanonical class") {
  const DivisorClass K = anticanonical();
  CHECK(intersect(K, K) == 0);
  CHECK(intersect(DivisorClass::uniform(7, 2), K) == 3);
  CHECK(intersect(DivisorClass::uniform(10, 3), K) == 3);
}

TEST_CASE("ampleness verdict reasons") {
  CHECK(certify_ampleness(DivisorClass::uniform(7, 2)).certified);
  CHECK(certify_ampleness(DivisorClass::uniform(6, 2)).reason == "d < 3k+1");
  CHECK(certify_ampleness(DivisorClass::uniform(5, 1)).reason == "k < 2");
  CHECK(certify_ampleness(DivisorClass::uniform(7, 3)).reason == "d < 3k+1");
  CHECK_FALSE(certify_ampleness(DivisorClass::uniform(7, 2) + DivisorClass::E(1)).certified);
}

TEST_CASE("large classes do not overflow") {
  CHECK(certify_ampleness(DivisorClass::uniform(4000000000LL, 1000000000LL)).certified);
}

TEST_CASE("matched pairs share d - 3k") {
  const auto m = match_pair(DivisorClass::uniform(7, 2), 20);
  REQUIRE(m.size() >= 3);
  for (const DivisorClass& L : m) CHECK(is_matched(L, DivisorClass::uniform(7, 2)));
  CHECK_THROWS_AS(match_pair(DivisorClass::uniform(6, 2)), DomainError);
}

TEST_CASE("Gram matrix has signature (1, 9)") {
  const auto s = signature(gram_matrix());
  CHECK(s.first == 1);
  CHECK(s.second == 9);
}
