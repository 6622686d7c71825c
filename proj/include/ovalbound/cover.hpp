#ifndef OVALBOUND_COVER_HPP
#define OVALBOUND_COVER_HPP

#include "ovalbound/curve_spec.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ovalbound {

/// Normal Euler numbers, stored in half-units so the relative line-field
/// obstruction (twice the usual Euler number) stays exact integer
/// arithmetic. twice == 7 means the Euler number 7/2.
struct HalfInt {
  std::int64_t twice = 0;

  static HalfInt whole(std::int64_t e) { return {2 * e}; }
  static HalfInt halves(std::int64_t t) { return {t}; }

  bool is_integer() const { return twice % 2 == 0; }
  std::int64_t as_integer() const;  // throws NonIntegerEuler
  std::string str() const;

  friend HalfInt operator+(HalfInt a, HalfInt b) { return {a.twice + b.twice}; }
  friend HalfInt operator-(HalfInt a, HalfInt b) { return {a.twice - b.twice}; }
  bool operator==(const HalfInt&) const = default;
};

enum class LiftRelation { Transverse, InBranchLocus };

/// A surface being tracked through the cover calculus.
struct SurfaceData {
  std::int64_t chi = 0;
  HalfInt e;
  bool orientable = false;
  bool closed = true;

  void validate() const;  // closed => integer e; orientable closed => even chi
};

/// The invariant chain A(F) -> X(F) -> Y of one branched-cover pipeline.
struct CoverReport {
  std::int64_t chi_a = 0;  // Arnold surface
  HalfInt e_a;
  std::int64_t chi_x = 0;  // smoothed union X(F)
  HalfInt e_x;
  std::int64_t chi_y = 0;  // double cover Y
  std::int64_t sigma_y = 0;
  std::int64_t b2 = 0;      // chi_y - 2 (b1 = b3 = 0 is an input assumption)
  std::int64_t b2_plus = 0;
  std::int64_t b2_minus = 0;
};

/// Euler number of a lifted surface: doubled when the surface is
/// transverse to the branch locus, halved when it lies inside it.
HalfInt lift_euler(HalfInt e_base, LiftRelation relation);

/// chi of a double cover of chi_base branched over chi_branch.
std::int64_t riemann_hurwitz_chi(std::int64_t chi_base, std::int64_t chi_branch);

/// sigma(Y) = 2 sigma(X) - e(X,A)/2 for a 2-fold cover branched over A.
std::int64_t hirzebruch_signature(std::int64_t sigma_base, HalfInt e_branch);

/// Immersed union of two closed surfaces meeting in transverse double
/// points; chi is that of the image complex.
SurfaceData merge_transverse(const SurfaceData& a, const SurfaceData& b, std::int64_t crossings);

/// Replaces each transverse double point by a Hopf band: chi drops by one
/// per crossing, e moves by +-2 per the chosen sign.
SurfaceData smooth_crossings(const SurfaceData& s, const std::vector<int>& signs);

/// Arnold surface of an odd-degree curve in CP2-bar: (chi_F - m + 1, m^2 - 2).
SurfaceData arnold_surface_odd(std::int64_t m, std::int64_t chi_f);

/// Even-degree Arnold surface in S^4: e = 2k^2 - 2 chi(RP2_+).
HalfInt arnold_surface_even(std::int64_t k, std::int64_t chi_rp2_plus);

SurfaceData arnold_surface_hyperboloid(std::int64_t a, std::int64_t b);
SurfaceData arnold_surface_ellipsoid(std::int64_t m);

/// Runs the full chain for the given curve: Arnold surface, branch-surface
/// union, all-plus smoothing, then Riemann-Hurwitz and Hirzebruch over the
/// hard-coded base manifold invariants.
CoverReport pipeline(const CurveSpec& spec);

/// Self-intersection in Y of the lifted region surface over a complement
/// region of Euler characteristic chi_region.
std::int64_t region_surface_euler(std::int64_t chi_region);

} // namespace ovalbound

#endif
