#include "ovalbound/arith.hpp"
#include "ovalbound/errors.hpp"

#include <doctest.h>

#include <random>

using namespace ovalbound;

TEST_CASE("rational formatting") {
  CHECK(to_string(Rational(9)) == "9");
  CHECK(to_string(Rational(7, 2)) == "7/2");
  CHECK(to_string(Rational(-200, 100)) == "-2");
}

TEST_CASE("bigint parsing") {
  CHECK(parse_bigint("552123") == 552123);
  CHECK(parse_bigint("-17") == -17);
  CHECK(parse_bigint("21454744417359036036350687193578045643").str() ==
        "21454744417359036036350687193578045643");
  CHECK_THROWS_AS(parse_bigint(""), SyntaxError);
  CHECK_THROWS_AS(parse_bigint("12x"), SyntaxError);
}

TEST_CASE("primality agrees with a sieve") {
  const int limit = 20000;
  std::vector<bool> composite(limit + 1, false);
  for (int p = 2; p * p <= limit; ++p)
    if (!composite[p])
      for (int q = p * p; q <= limit; q += p) composite[q] = true;
  for (int n = 0; n <= limit; ++n) CHECK(is_prime(n) == (n >= 2 && !composite[n]));
}

TEST_CASE("primality on large inputs") {
  CHECK(is_prime(BigInt("2305843009213693951")));       // 2^61 - 1
  CHECK_FALSE(is_prime(BigInt("2305843009213693953")));
  CHECK(is_prime(BigInt("170141183460469231731687303715884105727"))); // 2^127 - 1
}

TEST_CASE("factor reassembles the input") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    BigInt n = 1 + rng() % 1000000;
    BigInt product = 1;
    for (const auto& [p, e] : factor(n)) {
      CHECK(is_prime(p));
      product *= pow(p, e);
    }
    CHECK(product == n);
  }
}

TEST_CASE("p-adic valuation") {
  CHECK(p_adic_valuation(2, 12) == 2);
  CHECK(p_adic_valuation(3, 1287) == 2); // 1287 = 3^2 * 11 * 13
  CHECK(p_adic_valuation(5, 7) == 0);
  CHECK(p_adic_valuation(13, pow(BigInt(13), 40) * 6) == 40);
  CHECK_THROWS_AS(p_adic_valuation(6, 36), NotPrime);
  CHECK_THROWS_AS(p_adic_valuation(5, 0), OutOfDomain);
}

TEST_CASE("largest prime power") {
  CHECK(largest_prime_power(7) == 7);
  CHECK(largest_prime_power(15) == 5);
  CHECK(largest_prime_power(552123) == 169); // 3^3 * 11^2 * 13^2
  CHECK(largest_prime_power(pow(BigInt(2), 20)) == 1048576);
  CHECK_THROWS_AS(largest_prime_power(1), OutOfDomain);

  // h(m) divides m and the cofactor is coprime to it
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    BigInt m = 2 + rng() % 100000;
    BigInt h = largest_prime_power(m);
    CHECK(m % h == 0);
    CHECK(gcd(m / h, h) == 1);
  }
}
