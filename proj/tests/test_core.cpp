#include "sepinv/rational.hpp"
#include "sepinv/types.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace sepinv;
using sepinv::testing::pt;

TEST_CASE("rational_pow") {
  CHECK(rational_pow(Rational(0), 0) == Rational(1));
  CHECK(rational_pow(Rational(3, 2), 2) == Rational(9, 4));
  CHECK(rational_pow(Rational(-5), 3) == Rational(-125));
  CHECK(rational_pow(Rational(0), 4) == Rational(0));
  CHECK(rational_pow(Rational(-2, 3), 0) == Rational(1));
}

TEST_CASE("rational_cmp") {
  CHECK(rational_cmp(Rational(1, 2), Rational(2, 4)) == std::strong_ordering::equal);
  CHECK(rational_cmp(Rational(-1), Rational(0)) == std::strong_ordering::less);
  CHECK(rational_cmp(Rational(7, 3), Rational(9, 4)) == std::strong_ordering::greater);
}

TEST_CASE("rational normalization") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int t = 0; t < 2000; ++t) {
    const long a = dist(rng);
    long b = dist(rng);
    if (b == 0) b = 1;
    const Rational once(a, b);
    CHECK(once.denominator() > 0);
    CHECK(gcd(mpz_class(abs(once.numerator())), once.denominator()) == 1);
    const Rational twice(mpq_class(once.numerator(), once.denominator()));
    CHECK(twice == once);
    CHECK(twice.to_string() == once.to_string());
  }
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("-3/9").to_string() == "-1/3");
  CHECK(Rational::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1/-2", "+3", "1.5", "a", "1 ", "1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("BiIndex rejects (0,0) and orders pure sums first") {
  CHECK_THROWS_AS(BiIndex(0, 0), std::invalid_argument);
  CHECK(BiIndex(1, 0) < BiIndex(2, 0));
  CHECK(BiIndex(5, 0) < BiIndex(0, 1));
  CHECK(BiIndex(0, 9) < BiIndex(1, 1));
  CHECK(BiIndex(3, 1) < BiIndex(1, 2));
}

TEST_CASE("PointPair and Permutation validation") {
  CHECK_THROWS_AS(PointPair(testing::rats({1, 2}), testing::rats({1})), std::invalid_argument);
  CHECK_THROWS_AS(PointPair({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
  CHECK(Permutation::from_one_based({2, 1, 3}).to_one_line() == "[2 1 3]");
}

TEST_CASE("apply_permutation") {
  const PointPair p = pt({1, 2}, {5, 6});
  CHECK(apply_permutation(Permutation::identity(2), p) == p);
  CHECK(apply_permutation(Permutation({1, 0}), p) == pt({2, 1}, {6, 5}));

  // 1 -> 2 -> 3 -> 1, one-based.
  const Permutation cycle = Permutation::from_one_based({2, 3, 1});
  const PointPair q = pt({1, 2, 3}, {4, 5, 6});
  const PointPair moved = apply_permutation(cycle, q);
  CHECK(moved == pt({3, 1, 2}, {6, 4, 5}));
  CHECK(apply_permutation(cycle.inverse(), moved) == q);

  CHECK_THROWS_AS(apply_permutation(Permutation::identity(3), p), std::invalid_argument);
}

TEST_CASE("apply_permutation is a group action") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 7;
    const PointPair p = testing::random_point(rng, n);
    const Permutation s = testing::random_permutation(rng, n);
    const Permutation u = testing::random_permutation(rng, n);
    CHECK(apply_permutation(compose(s, u), p) == apply_permutation(s, apply_permutation(u, p)));
    CHECK(apply_permutation(s.inverse(), apply_permutation(s, p)) == p);
  }
}
