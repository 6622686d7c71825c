#include "ovalbound/cover.hpp"

#include <cstdlib>

namespace ovalbound {

namespace {

// Keeps every quantity in the chain (notably 3m^2) inside int64.
constexpr std::int64_t kMaxPipelineDegree = 1000000000;

void require_pipeline_degree(std::int64_t m, const char* who) {
  if (m < 1) throw OutOfDomain(std::string(who) + ": degree must be >= 1");
  if (m > kMaxPipelineDegree)
    throw OutOfDomain(std::string(who) + ": degree exceeds the int64-exact range");
}

} // namespace

std::int64_t HalfInt::as_integer() const {
  if (twice % 2 != 0) throw NonIntegerEuler("Euler number " + str() + " is not an integer");
  return twice / 2;
}

std::string HalfInt::str() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

void SurfaceData::validate() const {
  if (closed && !e.is_integer())
    throw NonIntegerEuler("closed surface with non-integer Euler number " + e.str());
  if (closed && orientable && chi % 2 != 0)
    throw ParityError("closed orientable surface with odd chi");
}

HalfInt lift_euler(HalfInt e_base, LiftRelation relation) {
  if (relation == LiftRelation::Transverse) return {2 * e_base.twice};
  if (e_base.twice % 2 != 0)
    throw NonIntegerEuler("cannot halve the Euler number " + e_base.str() + " exactly");
  return {e_base.twice / 2};
}

std::int64_t riemann_hurwitz_chi(std::int64_t chi_base, std::int64_t chi_branch) {
  return 2 * chi_base - chi_branch;
}

std::int64_t hirzebruch_signature(std::int64_t sigma_base, HalfInt e_branch) {
  if (e_branch.twice % 4 != 0)
    throw NonIntegerSignature("signature 2*" + std::to_string(sigma_base) + " - (" +
                              e_branch.str() + ")/2 is not an integer");
  return 2 * sigma_base - e_branch.twice / 4;
}

SurfaceData merge_transverse(const SurfaceData& a, const SurfaceData& b, std::int64_t crossings) {
  a.validate();
  b.validate();
  if (!a.closed || !b.closed) throw OutOfDomain("merge_transverse: surfaces must be closed");
  SurfaceData out;
  out.chi = a.chi + b.chi - crossings;  // the image complex of the immersion
  out.e = a.e + b.e;
  out.orientable = false;
  out.closed = true;
  return out;
}

SurfaceData smooth_crossings(const SurfaceData& s, const std::vector<int>& signs) {
  s.validate();
  if (!s.closed) throw OutOfDomain("smooth_crossings: surface must be closed");
  std::int64_t sum = 0;
  for (int sign : signs) {
    if (sign != 1 && sign != -1) throw OutOfDomain("smooth_crossings: signs must be +-1");
    sum += sign;
  }
  SurfaceData out = s;
  out.chi -= static_cast<std::int64_t>(signs.size());
  out.e = out.e + HalfInt::whole(2 * sum);
  out.orientable = false;
  return out;
}

SurfaceData arnold_surface_odd(std::int64_t m, std::int64_t chi_f) {
  require_pipeline_degree(m, "arnold_surface_odd");
  if (m % 2 == 0) throw ParityError("arnold_surface_odd: degree must be odd");
  return {chi_f - m + 1, HalfInt::whole(m * m - 2), false, true};
}

HalfInt arnold_surface_even(std::int64_t k, std::int64_t chi_rp2_plus) {
  require_pipeline_degree(k, "arnold_surface_even");
  return HalfInt::whole(2 * k * k - 2 * chi_rp2_plus);
}

SurfaceData arnold_surface_hyperboloid(std::int64_t a, std::int64_t b) {
  require_pipeline_degree(a, "arnold_surface_hyperboloid");
  require_pipeline_degree(b, "arnold_surface_hyperboloid");
  if (a % 2 == 0 || b % 2 == 0)
    throw ParityError("arnold_surface_hyperboloid: bidegree must be odd in both entries");
  // lifted quotient surface plus half of the lifted branch torus
  return {-2 * a * b + a + b, HalfInt::whole(2 * a * b), false, true};
}

SurfaceData arnold_surface_ellipsoid(std::int64_t m) {
  require_pipeline_degree(m, "arnold_surface_ellipsoid");
  if (m % 2 == 0) throw ParityError("arnold_surface_ellipsoid: degree must be odd");
  return {-2 * m * m + 2 * m + 2, HalfInt::whole(2 * m * m - 4), false, true};
}

namespace {

CoverReport finish_report(SurfaceData arnold, SurfaceData branch_addend, std::int64_t crossings,
                          std::int64_t chi_base, std::int64_t sigma_base) {
  CoverReport report;
  report.chi_a = arnold.chi;
  report.e_a = arnold.e;
  SurfaceData merged = merge_transverse(arnold, branch_addend, crossings);
  SurfaceData smoothed = smooth_crossings(merged, std::vector<int>(crossings, +1));
  smoothed.validate();
  report.chi_x = smoothed.chi;
  report.e_x = smoothed.e;
  report.chi_y = riemann_hurwitz_chi(chi_base, smoothed.chi);
  report.sigma_y = hirzebruch_signature(sigma_base, smoothed.e);
  report.b2 = report.chi_y - 2;
  if ((report.b2 + report.sigma_y) % 2 != 0)
    throw NonIntegerSignature("b2 and sigma have mismatched parity");
  report.b2_plus = (report.b2 + report.sigma_y) / 2;
  report.b2_minus = (report.b2 - report.sigma_y) / 2;
  return report;
}

} // namespace

CoverReport pipeline(const CurveSpec& spec) {
  spec.validate();
  switch (spec.ambient) {
    case CurveAmbient::CP2: {
      std::int64_t m = spec.degree;
      require_pipeline_degree(m, "pipeline");
      if (m % 2 == 0) throw ParityError("pipeline: the CP2 chain needs odd degree");
      std::int64_t chi_f;
      if (spec.orientable) {
        chi_f = -m * m + 3 * m;
      } else {
        if (!spec.chi_f) throw MissingChi("pipeline: non-orientable curves need chi(F)");
        chi_f = *spec.chi_f;
      }
      SurfaceData rp2_bar{1, HalfInt::whole(1), false, true};
      // CP2-bar has (chi, sigma) = (3, -1)
      return finish_report(arnold_surface_odd(m, chi_f), rp2_bar, m, 3, -1);
    }
    case CurveAmbient::Hyperboloid: {
      std::int64_t a = spec.bidegree_a, b = spec.bidegree_b;
      // branch locus downstairs: Klein bottle with e = +4 over S^4 (2, 0);
      // the cover X-bar of S^4 then has (chi, sigma) = (4, -2)
      std::int64_t chi_base = riemann_hurwitz_chi(2, 0);
      std::int64_t sigma_base = hirzebruch_signature(0, HalfInt::whole(4));
      SurfaceData branch_torus{0, HalfInt::whole(2), false, true};
      return finish_report(arnold_surface_hyperboloid(a, b), branch_torus, a + b, chi_base,
                           sigma_base);
    }
    case CurveAmbient::Ellipsoid: {
      std::int64_t m = spec.degree;
      require_pipeline_degree(m, "pipeline");
      if (m % 2 == 0) throw ParityError("pipeline: the ellipsoid chain needs odd degree");
      // cover of CP2-bar (3, -1) branched over the e = +4 Klein bottle
      std::int64_t chi_base = riemann_hurwitz_chi(3, 0);
      std::int64_t sigma_base = hirzebruch_signature(-1, HalfInt::whole(4));
      SurfaceData branch_klein{0, HalfInt::whole(2), false, true};
      return finish_report(arnold_surface_ellipsoid(m), branch_klein, 2 * m, chi_base,
                           sigma_base);
    }
  }
  throw InvalidSpec("pipeline: unknown ambient");
}

std::int64_t region_surface_euler(std::int64_t chi_region) { return -4 * chi_region; }

} // namespace ovalbound
