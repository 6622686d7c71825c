#include "ovalbound/verdict.hpp"
#include "ovalbound/genus.hpp"

#include <json.hpp>

#include <algorithm>
#include <exception>

namespace ovalbound {

namespace {

constexpr std::int64_t kMaxVerdictDegree = 1000000000;

bool wants_odd_plane_bounds(const CurveSpec& spec) {
  return spec.ambient == CurveAmbient::CP2 && spec.degree % 2 != 0;
}

std::int64_t resolve_chi(const CurveSpec& spec, std::vector<std::string>* notes) {
  if (spec.chi_f) return *spec.chi_f;
  if (!spec.extremal_chi)
    throw MissingChi("non-orientable curves need --chi or the extremal mode");
  if (spec.degree > kMaxVerdictDegree)
    throw OutOfDomain("extremal chi: degree exceeds the int64-exact range");
  GenusValue g = genus_tilde(spec.degree * spec.degree);
  if (notes && g.status == GenusStatus::LowerBoundOnly)
    notes->push_back("extremal chi uses the conjectured value of the non-orientable genus "
                     "function at m^2");
  return g.value;
}

} // namespace

std::vector<std::string> applicable_bounds(const CurveSpec& spec) {
  spec.validate();
  std::vector<std::string> ids;
  switch (spec.ambient) {
    case CurveAmbient::CP2:
      if (spec.orientable) {
        ids.push_back("harnack");
        if (wants_odd_plane_bounds(spec)) {
          if (spec.degree >= 3) {
            ids.push_back("vz");
            ids.push_back("zvonilov");
          }
          if (spec.q_flexible) ids.push_back("s");
        }
      } else {
        ids.push_back("harnack-no");
        if (wants_odd_plane_bounds(spec) && spec.q_flexible) ids.push_back("novz");
      }
      if (wants_odd_plane_bounds(spec)) ids.push_back("structural-J");
      break;
    case CurveAmbient::Hyperboloid:
      ids.push_back("hyperboloid");
      ids.push_back("structural");
      break;
    case CurveAmbient::Ellipsoid:
      if (spec.degree % 2 != 0) ids.push_back("ellipsoid");
      ids.push_back("structural");
      break;
  }
  return ids;
}

Verdict check_scheme(const CurveSpec& spec, const RealScheme& scheme) {
  spec.validate();
  if (scheme.ambient != spec.scheme_ambient())
    throw AmbientMismatch("scheme ambient " + ambient_name(scheme.ambient) +
                          " does not match the curve (" +
                          ambient_name(spec.scheme_ambient()) + ")");

  Verdict verdict;
  verdict.spec = spec;
  verdict.scheme_text = format_scheme(scheme);
  verdict.stats = classify_regions(scheme);

  const RegionStats& stats = verdict.stats;
  switch (scheme.ambient) {
    case Ambient::ProjectivePlaneOdd: verdict.b0 = stats.total_ovals + 1; break;
    case Ambient::ProjectivePlaneEven: verdict.b0 = stats.total_ovals; break;
    case Ambient::Hyperboloid:
      verdict.b0 = stats.total_ovals + scheme.torus_class->copies;
      break;
    case Ambient::Ellipsoid: verdict.b0 = stats.total_ovals; break;
  }
  const std::int64_t nonempty = stats.l_zero + stats.l_minus;

  std::optional<std::int64_t> chi_f;
  if (!spec.orientable) chi_f = resolve_chi(spec, &verdict.notes);

  const BigInt m = spec.degree;
  for (const std::string& id : applicable_bounds(spec)) {
    ConstraintRecord rec;
    rec.id = id;
    bool structural = false;
    if (id == "harnack") {
      rec.bound = harnack_orientable_bound(m).value;
      rec.observed = verdict.b0;
    } else if (id == "harnack-no") {
      rec.bound = harnack_nonorientable_bound(BigInt(*chi_f)).value;
      rec.observed = verdict.b0;
    } else if (id == "vz") {
      rec.bound = vz_bound(m).value;
      rec.observed = nonempty;
    } else if (id == "zvonilov") {
      rec.bound = zvonilov_bound(m).value;
      rec.observed = nonempty;
    } else if (id == "s") {
      rec.bound = s_bound(m).value;
      rec.observed = nonempty;
    } else if (id == "novz") {
      rec.bound = nonorientable_vz_bound(m, BigInt(*chi_f)).value;
      rec.observed = nonempty;
    } else if (id == "hyperboloid") {
      rec.bound = hyperboloid_bound(spec.bidegree_a, spec.bidegree_b).value;
      rec.observed = nonempty;
    } else if (id == "ellipsoid") {
      rec.bound = ellipsoid_bound(m).value;
      rec.observed = nonempty;
    } else { // structural conformance; holds for any scheme the parser accepts
      structural = true;
      rec.bound = 1;
      if (id == "structural-J")
        rec.observed = scheme.pseudo_line ? 1 : 0;
      else if (scheme.ambient == Ambient::Hyperboloid)
        rec.observed = scheme.torus_class ? 1 : 0;
      else
        rec.observed = 1;
      rec.status = rec.observed == 1 ? ConstraintStatus::Pass : ConstraintStatus::Fail;
    }
    if (!structural) {
      Rational observed(rec.observed);
      if (observed > rec.bound)
        rec.status = ConstraintStatus::Fail;
      else if (observed == rec.bound)
        rec.status = ConstraintStatus::Equality;
      else
        rec.status = ConstraintStatus::Pass;
      bool counts_ovals = id != "harnack" && id != "harnack-no";
      if (counts_ovals &&
          (!verdict.min_oval_bound || rec.bound < *verdict.min_oval_bound))
        verdict.min_oval_bound = rec.bound;
      if (rec.status == ConstraintStatus::Equality) {
        if (id == "s")
          verdict.notes.push_back("equality in the s bound: the curve is type I");
        else if (id == "harnack")
          verdict.notes.push_back("b0 attains the Harnack bound (M-curve): type I");
      }
      if (id == "zvonilov")
        verdict.notes.push_back(
            "zvonilov assumes generic intersection with a real line, a condition "
            "independent of Q-flexibility");
    }
    if (rec.status == ConstraintStatus::Fail) verdict.pass = false;
    verdict.constraints.push_back(std::move(rec));
  }
  return verdict;
}

std::vector<Verdict> check_batch_serial(const CurveSpec& spec,
                                        const std::vector<RealScheme>& schemes) {
  std::vector<Verdict> out;
  out.reserve(schemes.size());
  for (const auto& s : schemes) out.push_back(check_scheme(spec, s));
  return out;
}

std::vector<Verdict> check_batch(const CurveSpec& spec, const std::vector<RealScheme>& schemes) {
  std::vector<Verdict> out(schemes.size());
  std::exception_ptr first_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(schemes.size()); ++i) {
    try {
      out[i] = check_scheme(spec, schemes[i]);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        if (!first_error) first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

std::string verdict_to_json(const Verdict& verdict, int indent) {
  nlohmann::json doc;
  nlohmann::json spec;
  switch (verdict.spec.ambient) {
    case CurveAmbient::CP2:
      spec["ambient"] = "cp2";
      spec["degree"] = verdict.spec.degree;
      break;
    case CurveAmbient::Hyperboloid:
      spec["ambient"] = "hyperboloid";
      spec["bidegree"] = {verdict.spec.bidegree_a, verdict.spec.bidegree_b};
      break;
    case CurveAmbient::Ellipsoid:
      spec["ambient"] = "ellipsoid";
      spec["degree"] = verdict.spec.degree;
      break;
  }
  spec["orientable"] = verdict.spec.orientable;
  spec["q_flexible"] = verdict.spec.q_flexible;
  if (verdict.spec.chi_f) spec["chi"] = *verdict.spec.chi_f;
  if (verdict.spec.extremal_chi) spec["extremal"] = true;
  doc["spec"] = spec;
  doc["scheme"] = verdict.scheme_text;
  doc["stats"] = {{"l", verdict.stats.total_ovals},
                  {"l_plus", verdict.stats.l_plus},
                  {"l_zero", verdict.stats.l_zero},
                  {"l_minus", verdict.stats.l_minus},
                  {"b0", verdict.b0}};
  nlohmann::json constraints = nlohmann::json::array();
  for (const auto& rec : verdict.constraints) {
    const char* status = rec.status == ConstraintStatus::Pass      ? "pass"
                         : rec.status == ConstraintStatus::Equality ? "equality"
                                                                    : "fail";
    constraints.push_back({{"id", rec.id},
                           {"bound", to_string(rec.bound)},
                           {"observed", rec.observed},
                           {"status", status}});
  }
  doc["constraints"] = constraints;
  doc["notes"] = verdict.notes;
  if (verdict.min_oval_bound) doc["min_bound"] = to_string(*verdict.min_oval_bound);
  doc["overall"] = verdict.pass ? "pass" : "fail";
  return doc.dump(indent);
}

} // namespace ovalbound
