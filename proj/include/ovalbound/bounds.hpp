#ifndef OVALBOUND_BOUNDS_HPP
#define OVALBOUND_BOUNDS_HPP

#include "ovalbound/arith.hpp"

#include <string>

namespace ovalbound {

enum class BoundKind {
  S,                     // (m-1)^2/4, non-empty ovals, Q-flexible odd degree
  VZ,                    // (m-3)^2/4 + (m^2-h^2)/(4h^2), flexible odd degree
  Zvonilov,              // (m-1)(m-3)/4, line-generic flexible odd degree
  Hyperboloid,           // (ab+1)/2, bidegree (a,b) both odd
  Ellipsoid,             // (m^2+1)/2, bidegree (m,m), m odd
  NonOrientableVZ,       // -chi/2 - (m^2-1)/4 + m, non-orientable odd degree
  HarnackOrientable,     // (m-1)(m-2)/2 + 1, b0 bound
  HarnackNonOrientable,  // 3 - chi, b0 bound
};

std::string bound_kind_name(BoundKind kind);

/// A bound together with what it bounds, with exact rational value.
struct BoundValue {
  Rational value;
  BoundKind kind;
  std::string note; // applicability, e.g. "counts non-empty ovals"
};

/// Parameters for the generic dispatcher; each kind reads what it needs.
struct BoundParams {
  BigInt m = 0;    // degree
  BigInt a = 0;    // hyperboloid bidegree
  BigInt b = 0;
  BigInt chi = 0;  // Euler characteristic, non-orientable kinds
};

BoundValue evaluate_bound(BoundKind kind, const BoundParams& params);

// Each evaluator validates the parity/positivity hypotheses of its theorem
// and throws OutOfDomain / ParityError when they fail.
BoundValue s_bound(const BigInt& m);
BoundValue vz_bound(const BigInt& m);
BoundValue zvonilov_bound(const BigInt& m);
BoundValue hyperboloid_bound(const BigInt& a, const BigInt& b);
BoundValue ellipsoid_bound(const BigInt& m);
BoundValue nonorientable_vz_bound(const BigInt& m, const BigInt& chi);
BoundValue harnack_orientable_bound(const BigInt& m);
BoundValue harnack_nonorientable_bound(const BigInt& chi);

/// VZ(m) - S(m) in closed form: ((m/h(m))^2 - 4m + 7)/4 for odd m >= 3.
Rational vz_minus_s(const BigInt& m);

/// The degree family m_p = 1287 * 429^(12p+1), packaged with the
/// divisibility facts that make S(m_p) beat VZ(m_p).
struct MpCertificate {
  BigInt m;           // m_p itself (always odd)
  unsigned nu5;       // nu_5(m_p + 2), >= 1
  unsigned nu7;       // nu_7(m_p + 2), >= 1
  BigInt h;           // h(m_p) = 13^(12p+2)
  Rational vz_gap;    // VZ(m_p) - S(m_p), positive
};

MpCertificate mp_sequence(unsigned p);

} // namespace ovalbound

#endif
