#include <doctest.h>

#include "markov/perturbed.hpp"

using namespace markov;

TEST_CASE("perturbed rationals compare lexicographically") {
  PerturbedRational a(Rat(1, 2), Rat(0));
  PerturbedRational b(Rat(1, 2), Rat(1));
  PerturbedRational c(Rat(1, 2), Rat(-3));
  PerturbedRational d(Rat(2, 3), Rat(-100));

  CHECK(a < b);
  CHECK(c < a);
  CHECK(a < d);   // base dominates any eps
  CHECK(b < d);
  CHECK(a == PerturbedRational(Rat(1, 2)));
  CHECK(b >= a);
  CHECK(b > a);
}

TEST_CASE("perturbed arithmetic is linear in the infinitesimal") {
  PerturbedRational a(Rat(3), Rat(-1));
  PerturbedRational b(Rat(1, 4), Rat(2));

  auto sum = a + b;
  CHECK(sum.base == Rat(13, 4));
  CHECK(sum.eps == Rat(1));

  auto diff = a - b;
  CHECK(diff.base == Rat(11, 4));
  CHECK(diff.eps == Rat(-3));

  auto scaled = b.scaled(Rat(-2));
  CHECK(scaled.base == Rat(-1, 2));
  CHECK(scaled.eps == Rat(-4));

  auto divided = a.divided(Rat(3));
  CHECK(divided.base == Rat(1));
  CHECK(divided.eps == Rat(-1, 3));

  CHECK_THROWS_AS(a.divided(Rat(0)), DomainError);
  CHECK((-a).base == Rat(-3));
}
