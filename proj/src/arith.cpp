#include "ovalbound/arith.hpp"
#include "ovalbound/errors.hpp"

#include <algorithm>
#include <cctype>

namespace ovalbound {

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw SyntaxError("empty integer literal");
  BigInt v = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw SyntaxError("invalid integer literal: '" + text + "'");
    v = v * 10 + (text[i] - '0');
  }
  return neg ? -v : v;
}

namespace {

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, unsigned r) {
  BigInt x = powm(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true; // a witnesses compositeness
}

constexpr std::uint32_t kFactorWheelLimit = 1u << 20;

} // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static const unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  unsigned r = 0;
  while (d % 2 == 0) {
    d >>= 1;
    ++r;
  }
  for (unsigned a : small)
    if (miller_rabin_witness(n, BigInt(a), d, r)) return false;
  return true;
}

std::vector<std::pair<BigInt, unsigned>> factor(BigInt n) {
  if (n < 1) throw OutOfDomain("factor: argument must be >= 1");
  std::vector<std::pair<BigInt, unsigned>> out;
  auto strip = [&](const BigInt& p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  strip(3);
  for (std::uint64_t p = 5; p <= kFactorWheelLimit; p += 6) {
    if (BigInt(p) * p > n) break;
    strip(BigInt(p));
    strip(BigInt(p + 2));
  }
  if (n > 1) {
    if (BigInt(kFactorWheelLimit) * kFactorWheelLimit > n || is_prime(n)) {
      // either below the wheel's square (hence prime) or a big prime
      out.emplace_back(n, 1);
    } else {
      BigInt s = sqrt(n);
      if (s * s == n && is_prime(s)) {
        out.emplace_back(s, 2);
      } else {
        throw FactorizationLimit("factor: cofactor " + n.str() +
                                 " is beyond the trial-division envelope");
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned p_adic_valuation(const BigInt& p, const BigInt& m) {
  if (!is_prime(p)) throw NotPrime("p_adic_valuation: " + p.str() + " is not prime");
  if (m < 1) throw OutOfDomain("p_adic_valuation: m must be >= 1");
  unsigned v = 0;
  BigInt n = m;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

BigInt largest_prime_power(const BigInt& m) {
  if (m <= 1) throw OutOfDomain("largest_prime_power: m must be >= 2");
  BigInt best = 1;
  for (const auto& [p, e] : factor(m)) {
    BigInt q = pow(p, e);
    if (q > best) best = q;
  }
  return best;
}

} // namespace ovalbound
