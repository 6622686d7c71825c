#ifndef OVALBOUND_SCHEME_HPP
#define OVALBOUND_SCHEME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ovalbound {

enum class Ambient { ProjectivePlaneOdd, ProjectivePlaneEven, Hyperboloid, Ellipsoid };

std::string ambient_name(Ambient a);

/// One oval of a real scheme; children are the ovals immediately inside it.
/// Canonical order: children sorted by (subtree size descending, canonical
/// text ascending). Two schemes are equal iff their canonical forms match.
struct OvalNode {
  std::vector<OvalNode> children;

  bool operator==(const OvalNode&) const = default;
};

using Forest = std::vector<OvalNode>;

/// Parallel copies of an (alpha,beta) curve on the hyperboloid torus.
struct TorusClass {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  unsigned copies = 0;

  bool operator==(const TorusClass&) const = default;
};

/// The combinatorial type of the real point set of a curve.
struct RealScheme {
  Ambient ambient = Ambient::ProjectivePlaneEven;
  Forest forest;                          // CP2 and ellipsoid ovals
  bool pseudo_line = false;               // the J component, odd-degree CP2
  std::optional<TorusClass> torus_class;  // hyperboloid only
  std::vector<Forest> zones;              // hyperboloid: one forest per annulus

  bool operator==(const RealScheme&) const = default;
};

struct RegionChi {
  std::string id;
  std::int64_t chi = 0;
};

/// Census of the complement regions of a scheme.
struct RegionStats {
  std::int64_t total_ovals = 0;
  std::int64_t l_plus = 0;   // regions of positive Euler characteristic
  std::int64_t l_zero = 0;
  std::int64_t l_minus = 0;
  std::int64_t exterior_count = 0;           // ovals not inside any other
  std::optional<std::int64_t> chi_j;         // chi of the J region, odd CP2
  std::vector<RegionChi> region_chis;
};

/// Image of a scheme under the double cover of the real point set.
struct LiftedScheme {
  Ambient ambient = Ambient::ProjectivePlaneOdd;
  Forest hemisphere[2];                   // CP2: the two lifted copies
  std::vector<Forest> zones;              // hyperboloid: 2*copies annuli
  std::optional<TorusClass> torus_class;  // hyperboloid: copies doubled
  unsigned non_doubled = 0;               // curves covered non-trivially
};

std::int64_t subtree_size(const OvalNode& node);
std::int64_t forest_size(const Forest& forest);

/// Sorts every child list into canonical order, recursively.
void canonicalize(Forest& forest);
void canonicalize(RealScheme& scheme);

/// Parses ASCII Viro notation (see README for the grammar). Returns the
/// canonicalized scheme. Throws SyntaxError and AmbientMismatch.
RealScheme parse_scheme(const std::string& text, Ambient ambient);

/// Canonical text; parse_scheme(format_scheme(s), s.ambient) == s.
std::string format_scheme(const RealScheme& scheme);

RegionStats classify_regions(const RealScheme& scheme);

/// Doubles the scheme along the cover of the real locus: ovals double,
/// the pseudo-line does not, (alpha,beta) copies double. Throws
/// UnsupportedAmbient for ellipsoid schemes.
LiftedScheme lift_real_scheme(const RealScheme& scheme);

/// All canonical odd-degree CP2 schemes with exactly n_ovals ovals, in a
/// deterministic order. Only Ambient::ProjectivePlaneOdd is supported.
std::vector<RealScheme> enumerate_schemes(std::int64_t n_ovals, Ambient ambient);

} // namespace ovalbound

#endif
