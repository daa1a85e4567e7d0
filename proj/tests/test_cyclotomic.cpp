#include <random>

#include "doctest.h"
#include "scd/cyclotomic.hpp"

using namespace scd;

TEST_CASE("zeta powers reduce modulo the cyclotomic polynomial") {
  const CycValue z = CycValue::zeta_power(3, 1);
  CHECK(z.coeffs() == std::vector<mpq_class>{0, 1});
  // zeta^2 = -1 - zeta
  CHECK(CycValue::zeta_power(3, 2).coeffs() == std::vector<mpq_class>{-1, -1});
  CHECK(CycValue::zeta_power(3, 3) == CycValue::rational(3, 1));
  CHECK(CycValue::zeta_power(3, -1) == CycValue::zeta_power(3, 2));
  CHECK(z * z * z == CycValue::rational(3, 1));
}

TEST_CASE("the sum of all p-th roots of unity vanishes") {
  for (unsigned p : {3u, 5u, 7u}) {
    CycValue s(p);
    for (unsigned k = 0; k < p; ++k) s += CycValue::zeta_power(p, k);
    CHECK(s.is_zero());
  }
}

TEST_CASE("theta is an additive character") {
  const auto f = Field::of_order(9, {1, 0, 1});
  CycValue total(3);
  for (unsigned a = 0; a < 9; ++a) {
    total += theta(*f, static_cast<Code>(a));
    for (unsigned b = 0; b < 9; ++b)
      CHECK(theta(*f, f->add(static_cast<Code>(a), static_cast<Code>(b))) ==
            theta(*f, static_cast<Code>(a)) * theta(*f, static_cast<Code>(b)));
  }
  CHECK(total.is_zero());
  CHECK(theta(*f, 0) == CycValue::rational(3, 1));
}

TEST_CASE("ring laws on random values") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  auto random_value = [&](unsigned p) {
    std::vector<mpq_class> c(p - 1);
    for (auto& x : c) x = mpq_class(d(rng), 1 + (d(rng) + 5));
    for (auto& x : c) x.canonicalize();
    return CycValue(p, c);
  };
  for (int k = 0; k < 200; ++k) {
    const unsigned p = k % 2 ? 5 : 7;
    const CycValue a = random_value(p), b = random_value(p), c = random_value(p);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a * a.conj()).conj() == a * a.conj());
  }
}

TEST_CASE("content extracts a primitive integer vector") {
  const CycValue v(3, {mpq_class(2, 3), mpq_class(-4, 9)});
  const auto [s, prim] = v.content();
  CHECK(s == mpq_class(2, 9));
  CHECK(prim == std::vector<mpz_class>{3, -2});
  CHECK(CycValue(3).content().first == 0);
}

TEST_CASE("rational detection and mismatch") {
  CHECK(CycValue::rational(5, mpq_class(1, 2)).is_rational());
  CHECK_FALSE(CycValue::zeta_power(5, 1).is_rational());
  CHECK_THROWS_AS(CycValue::zeta_power(3, 1) + CycValue::zeta_power(5, 1), Error);
}
