#ifndef OVALBOUND_ARITH_HPP
#define OVALBOUND_ARITH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ovalbound {

// All degree-level arithmetic is exact. BigInt/Rational are value types
// backed by header-only boost::multiprecision.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Parses a decimal integer (optional leading '-'). Throws SyntaxError.
BigInt parse_bigint(const std::string& text);

/// Deterministic Miller-Rabin. The fixed witness set {2,3,...,41} is a
/// proven certificate for n < 3.3e24; larger inputs reuse the same
/// witnesses, which is far beyond any input this library factors.
bool is_prime(const BigInt& n);

/// Prime factorization by trial division (6k+-1 wheel up to 2^20),
/// followed by a primality / prime-square check on the cofactor.
/// Adequate for desk-scale smooth inputs; throws FactorizationLimit on
/// inputs outside that envelope (general semiprimes are a non-goal).
std::vector<std::pair<BigInt, unsigned>> factor(BigInt n);

/// nu_p(m) = max{ n : p^n | m }. Throws NotPrime, OutOfDomain (m < 1).
unsigned p_adic_valuation(const BigInt& p, const BigInt& m);

/// h(m) = max over primes p | m of p^{nu_p(m)}. Throws OutOfDomain (m <= 1).
BigInt largest_prime_power(const BigInt& m);

} // namespace ovalbound

#endif
