#include <random>

#include "doctest.h"
#include "orthoweave/errors.hpp"
#include "orthoweave/exactnum.hpp"
#include "test_helpers.hpp"

using namespace orthoweave;
using testutil::q;
using testutil::r;

TEST_CASE("rat is canonical") {
  Rat x(mpz_class(6), mpz_class(-4));
  CHECK(x.num() == -3);
  CHECK(x.den() == 2);
  CHECK(x.to_string() == "-3/2");
  CHECK(Rat::parse("10/4") == r(5, 2));
  CHECK(Rat::parse("-7") == r(-7));
  CHECK_THROWS_AS(Rat::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rat::parse("x"), DomainError);
  CHECK_THROWS_AS(r(1) / r(0), DomainError);
}

TEST_CASE("arith examples") {
  CHECK(q(1, 1) * q(-1, 1) == q(1));
  CHECK(QuadExt(1) / QuadExt::sqrt2() == q(r(0), r(1, 2)));
  // bend of S1 is 1 + 1/sqrt2
  CHECK(QuadExt(1) + QuadExt(1) / QuadExt::sqrt2() == q(r(1), r(1, 2)));
  CHECK_THROWS_AS(QuadExt(1) / QuadExt(0), DomainError);
}

TEST_CASE("sign examples") {
  CHECK(sign(q(1, -1)) == -1);
  CHECK(sign(q(3, -2)) == 1);
  CHECK(sign(QuadExt()) == 0);
  CHECK(sign(q(-3, 2)) == -1);
  CHECK(sign(q(0, -5)) == -1);
}

TEST_CASE("conj examples") {
  QuadExt x = q(r(3, 4), r(-5, 7));
  CHECK(conj(q(1, 1)) == q(1, -1));
  CHECK(x * conj(x) == QuadExt(x.norm()));
  CHECK(conj(conj(x)) == x);
}

TEST_CASE("approx examples") {
  CHECK(approx(q(1, 1), 4) == "2.4142");
  CHECK(approx(QuadExt(1) - QuadExt(1) / QuadExt::sqrt2(), 3) == "0.293");
  CHECK(approx(QuadExt(), 2) == "0.00");
  CHECK(approx(q(r(-1, 8)), 2) == "-0.13");  // half away from zero
  CHECK(approx(q(r(1, 1000)), 2) == "0.00");
  CHECK(approx(q(r(-1, 1000)), 2) == "0.00");
  CHECK(approx(q(-1, -1), 3) == "-2.414");
}

TEST_CASE("floor is exact") {
  CHECK(q(0, 1).floor() == 1);
  CHECK(q(0, -1).floor() == -2);
  CHECK(q(3, -2).floor() == 0);
  CHECK(q(r(7)).floor() == 7);
  // 99 - 70 sqrt2 ~ 0.00505
  CHECK(q(99, -70).floor() == 0);
  CHECK(q(-99, 70).floor() == -1);
}

TEST_CASE("sqrt in the field") {
  CHECK(q(3, 2).sqrt() == q(1, 1));
  CHECK(q(3, -2).sqrt() == q(-1, 1));
  CHECK(q(2).sqrt() == q(0, 1));
  CHECK(q(r(9, 4)).sqrt() == q(r(3, 2)));
  CHECK_FALSE(q(3).sqrt().has_value());
  CHECK_FALSE(q(-4).sqrt().has_value());
  CHECK_FALSE(q(1, 1).sqrt().has_value());
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    QuadExt x = testutil::random_quad(rng), y = testutil::random_quad(rng), z = testutil::random_quad(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * x.inverse() == QuadExt(1));
    CHECK(conj(x * y) == conj(x) * conj(y));
    CHECK(conj(x + y) == conj(x) + conj(y));
  }
}

TEST_CASE("sign agrees with a 30-digit approximation") {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 10000) {
    QuadExt x = testutil::random_quad(rng, 1000);
    if (x.is_zero()) continue;
    std::string s = approx(x, 30);
    int approx_sign = s[0] == '-' ? -1 : 1;
    if (s.find_first_not_of("-0.") == std::string::npos) approx_sign = 0;
    CHECK(sign(x) == approx_sign);
    ++checked;
  }
}

TEST_CASE("approx is within half an ulp, checked exactly") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    QuadExt x = testutil::random_quad(rng, 10000);
    for (int d : {1, 5, 12}) {
      std::string s = approx(x, d);
      std::string digits = s;
      digits.erase(digits.find('.'), 1);
      Rat a(mpz_class(digits, 10), mpz_class("1" + std::string(d, '0'), 10));
      QuadExt err = x - QuadExt(a);
      if (err.sign() < 0) err = -err;
      CHECK(err <= QuadExt(Rat(mpz_class(1), mpz_class("2" + std::string(d, '0')))));
    }
  }
}
