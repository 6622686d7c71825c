#include "ovalbound/bounds.hpp"
#include "ovalbound/errors.hpp"

namespace ovalbound {

namespace {

void require_odd(const BigInt& m, const char* who) {
  if (m % 2 == 0) throw ParityError(std::string(who) + ": degree must be odd, got " + m.str());
}

void require_at_least(const BigInt& m, int lo, const char* who) {
  if (m < lo) throw OutOfDomain(std::string(who) + ": degree must be >= " +
                                std::to_string(lo) + ", got " + m.str());
}

} // namespace

std::string bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::S: return "s";
    case BoundKind::VZ: return "vz";
    case BoundKind::Zvonilov: return "zvonilov";
    case BoundKind::Hyperboloid: return "hyperboloid";
    case BoundKind::Ellipsoid: return "ellipsoid";
    case BoundKind::NonOrientableVZ: return "novz";
    case BoundKind::HarnackOrientable: return "harnack";
    case BoundKind::HarnackNonOrientable: return "harnack-no";
  }
  return "?";
}

BoundValue evaluate_bound(BoundKind kind, const BoundParams& params) {
  switch (kind) {
    case BoundKind::S: return s_bound(params.m);
    case BoundKind::VZ: return vz_bound(params.m);
    case BoundKind::Zvonilov: return zvonilov_bound(params.m);
    case BoundKind::Hyperboloid: return hyperboloid_bound(params.a, params.b);
    case BoundKind::Ellipsoid: return ellipsoid_bound(params.m);
    case BoundKind::NonOrientableVZ: return nonorientable_vz_bound(params.m, params.chi);
    case BoundKind::HarnackOrientable: return harnack_orientable_bound(params.m);
    case BoundKind::HarnackNonOrientable: return harnack_nonorientable_bound(params.chi);
  }
  throw OutOfDomain("evaluate_bound: unknown kind");
}

BoundValue s_bound(const BigInt& m) {
  require_odd(m, "s_bound");
  require_at_least(m, 1, "s_bound");
  Rational v(((m - 1) * (m - 1)), 4);
  // (m-1)^2 is divisible by 4 for odd m
  if (denominator(v) != 1) throw OutOfDomain("s_bound: non-integer value");
  return {v, BoundKind::S, "non-empty ovals, Q-flexible curves of odd degree"};
}

BoundValue vz_bound(const BigInt& m) {
  require_odd(m, "vz_bound");
  require_at_least(m, 3, "vz_bound");
  BigInt h = largest_prime_power(m);
  Rational v = Rational((m - 3) * (m - 3), 4) + Rational(m * m - h * h, 4 * h * h);
  return {v, BoundKind::VZ, "non-empty ovals, flexible curves of odd degree"};
}

BoundValue zvonilov_bound(const BigInt& m) {
  require_odd(m, "zvonilov_bound");
  require_at_least(m, 3, "zvonilov_bound");
  return {Rational((m - 1) * (m - 3), 4), BoundKind::Zvonilov,
          "non-empty ovals, flexible curves meeting a real line generically"};
}

BoundValue hyperboloid_bound(const BigInt& a, const BigInt& b) {
  if (a % 2 == 0 || b % 2 == 0)
    throw ParityError("hyperboloid_bound: bidegree must be odd in both entries");
  if (a < 1 || b < 1) throw OutOfDomain("hyperboloid_bound: bidegree must be positive");
  return {Rational(a * b + 1, 2), BoundKind::Hyperboloid,
          "ovals bounding a non-positive region, bidegree (a,b) both odd"};
}

BoundValue ellipsoid_bound(const BigInt& m) {
  require_odd(m, "ellipsoid_bound");
  require_at_least(m, 1, "ellipsoid_bound");
  return {Rational(m * m + 1, 2), BoundKind::Ellipsoid,
          "complement components of non-positive Euler characteristic"};
}

BoundValue nonorientable_vz_bound(const BigInt& m, const BigInt& chi) {
  require_odd(m, "nonorientable_vz_bound");
  require_at_least(m, 1, "nonorientable_vz_bound");
  if (chi % 2 != 0)
    throw ParityError("nonorientable_vz_bound: chi(F) must be even, got " + chi.str());
  Rational v = Rational(-chi, 2) - Rational(m * m - 1, 4) + m;
  return {v, BoundKind::NonOrientableVZ, "non-empty ovals, non-orientable Q-flexible curves"};
}

BoundValue harnack_orientable_bound(const BigInt& m) {
  require_at_least(m, 1, "harnack_orientable_bound");
  return {Rational((m - 1) * (m - 2), 2) + 1, BoundKind::HarnackOrientable,
          "connected components of the real part (b0 <= g+1)"};
}

BoundValue harnack_nonorientable_bound(const BigInt& chi) {
  if (chi > 1) throw OutOfDomain("harnack_nonorientable_bound: chi must be <= 1");
  return {Rational(3 - chi), BoundKind::HarnackNonOrientable,
          "connected components of the real part (b0 <= 3-chi)"};
}

Rational vz_minus_s(const BigInt& m) {
  require_odd(m, "vz_minus_s");
  require_at_least(m, 3, "vz_minus_s");
  BigInt q = m / largest_prime_power(m);
  return Rational(q * q - 4 * m + 7, 4);
}

MpCertificate mp_sequence(unsigned p) {
  MpCertificate cert;
  cert.m = BigInt(1287) * pow(BigInt(429), 12 * p + 1);
  cert.nu5 = p_adic_valuation(5, cert.m + 2);
  cert.nu7 = p_adic_valuation(7, cert.m + 2);
  cert.h = largest_prime_power(cert.m);
  cert.vz_gap = vz_minus_s(cert.m);
  return cert;
}

} // namespace ovalbound
