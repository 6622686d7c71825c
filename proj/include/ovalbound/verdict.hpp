#ifndef OVALBOUND_VERDICT_HPP
#define OVALBOUND_VERDICT_HPP

#include "ovalbound/bounds.hpp"
#include "ovalbound/curve_spec.hpp"
#include "ovalbound/scheme.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ovalbound {

enum class ConstraintStatus { Pass, Fail, Equality };

struct ConstraintRecord {
  std::string id;
  Rational bound;
  std::int64_t observed = 0;
  ConstraintStatus status = ConstraintStatus::Pass;
};

/// Everything check_scheme concluded about one (curve, scheme) pair.
/// overall is true iff no constraint failed; a passing scheme is only
/// unobstructed, never asserted realizable.
struct Verdict {
  CurveSpec spec;
  std::string scheme_text;
  RegionStats stats;
  std::int64_t b0 = 0;
  std::vector<ConstraintRecord> constraints;
  std::vector<std::string> notes;
  std::optional<Rational> min_oval_bound;  // combined minimum of the l-bounds
  bool pass = true;
};

/// Constraint ids dispatched from the theorems' hypotheses, in the order
/// they will be reported.
std::vector<std::string> applicable_bounds(const CurveSpec& spec);

/// Evaluates every applicable constraint against the scheme's region
/// census. Throws AmbientMismatch when the scheme does not fit the curve
/// and MissingChi for non-orientable curves without chi data.
Verdict check_scheme(const CurveSpec& spec, const RealScheme& scheme);

/// Batch variant: one verdict per scheme, in input order. Parallelized
/// with OpenMP when available; output is identical to the serial loop.
std::vector<Verdict> check_batch(const CurveSpec& spec, const std::vector<RealScheme>& schemes);
std::vector<Verdict> check_batch_serial(const CurveSpec& spec,
                                        const std::vector<RealScheme>& schemes);

/// Serializes per the documented JSON schema.
std::string verdict_to_json(const Verdict& verdict, int indent = 2);

} // namespace ovalbound

#endif
