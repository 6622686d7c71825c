// ovalbound - decides which real schemes of plane and quadric curves are
// compatible with the topological bounds from branched-cover calculus.

#include "ovalbound/bounds.hpp"
#include "ovalbound/cover.hpp"
#include "ovalbound/errors.hpp"
#include "ovalbound/genus.hpp"
#include "ovalbound/quadform.hpp"
#include "ovalbound/scheme.hpp"
#include "ovalbound/verdict.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace ovalbound;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::int64_t to_int64(const BigInt& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw OutOfDomain(std::string(what) + " is out of the supported range");
  return static_cast<std::int64_t>(v);
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw SyntaxError("expected LO:HI, got '" + text + "'");
  std::int64_t lo = to_int64(parse_bigint(text.substr(0, colon)), "range");
  std::int64_t hi = to_int64(parse_bigint(text.substr(colon + 1)), "range");
  if (lo > hi) throw SyntaxError("empty range '" + text + "'");
  return {lo, hi};
}

std::pair<std::int64_t, std::int64_t> parse_bidegree(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw SyntaxError("expected A,B for a bidegree, got '" + text + "'");
  return {to_int64(parse_bigint(text.substr(0, comma)), "bidegree"),
          to_int64(parse_bigint(text.substr(comma + 1)), "bidegree")};
}

struct CurveArgs {
  std::string ambient = "cp2";
  std::string degree;
  std::string bidegree;
  bool nonorientable = false;
  std::int64_t chi = 0;
  bool has_chi = false;
  bool extremal = false;
  bool not_q_flexible = false;
};

void add_curve_options(CLI::App* cmd, CurveArgs& args, bool with_flexibility) {
  cmd->add_option("--ambient", args.ambient, "cp2, hyperboloid or ellipsoid")
      ->check(CLI::IsMember({"cp2", "hyperboloid", "ellipsoid"}));
  cmd->add_option("--degree", args.degree, "degree m (cp2, ellipsoid)");
  cmd->add_option("--bidegree", args.bidegree, "bidegree A,B (hyperboloid)");
  if (with_flexibility) {
    cmd->add_flag("--nonorientable", args.nonorientable, "non-orientable flexible curve");
    cmd->add_option("--chi", args.chi, "Euler characteristic of the curve surface")
        ->each([&args](const std::string&) { args.has_chi = true; });
    cmd->add_flag("--extremal", args.extremal, "use chi(F) = g~(m^2) (conjectural for odd m>=5)");
    cmd->add_flag("--no-q-flexible", args.not_q_flexible,
                  "drop the bounds that need Q-flexibility");
  }
}

CurveSpec build_spec(const CurveArgs& args) {
  CurveSpec spec;
  if (args.ambient == "cp2")
    spec.ambient = CurveAmbient::CP2;
  else if (args.ambient == "hyperboloid")
    spec.ambient = CurveAmbient::Hyperboloid;
  else
    spec.ambient = CurveAmbient::Ellipsoid;
  if (spec.ambient == CurveAmbient::Hyperboloid) {
    if (args.bidegree.empty()) throw InvalidSpec("hyperboloid curves need --bidegree A,B");
    auto [a, b] = parse_bidegree(args.bidegree);
    spec.bidegree_a = a;
    spec.bidegree_b = b;
  } else {
    if (args.degree.empty()) throw InvalidSpec("--degree is required for this ambient");
    spec.degree = to_int64(parse_bigint(args.degree), "degree");
  }
  spec.orientable = !args.nonorientable;
  if (args.has_chi) spec.chi_f = args.chi;
  spec.extremal_chi = args.extremal;
  spec.q_flexible = !args.not_q_flexible;
  spec.validate();
  return spec;
}

const char* status_text(ConstraintStatus s) {
  switch (s) {
    case ConstraintStatus::Pass: return "pass";
    case ConstraintStatus::Fail: return "FAIL";
    case ConstraintStatus::Equality: return "equality";
  }
  return "?";
}

int run_check(const CurveArgs& args, const std::string& scheme_text, bool as_json) {
  CurveSpec spec = build_spec(args);
  RealScheme scheme = parse_scheme(scheme_text, spec.scheme_ambient());
  Verdict verdict = check_scheme(spec, scheme);
  if (as_json) {
    std::cout << verdict_to_json(verdict) << "\n";
  } else {
    std::cout << "scheme   " << verdict.scheme_text << "\n";
    std::cout << "counts   l=" << verdict.stats.total_ovals << " l+=" << verdict.stats.l_plus
              << " l0=" << verdict.stats.l_zero << " l-=" << verdict.stats.l_minus
              << " b0=" << verdict.b0;
    if (verdict.stats.chi_j) std::cout << " chi(J)=" << *verdict.stats.chi_j;
    std::cout << "\n";
    for (const auto& rec : verdict.constraints)
      std::printf("  %-12s bound %-10s observed %-6lld %s\n", rec.id.c_str(),
                  to_string(rec.bound).c_str(), static_cast<long long>(rec.observed),
                  status_text(rec.status));
    if (verdict.min_oval_bound)
      std::cout << "combined non-empty-oval bound: " << to_string(*verdict.min_oval_bound)
                << "\n";
    for (const auto& note : verdict.notes) std::cout << "note: " << note << "\n";
    std::cout << "overall: " << (verdict.pass ? "pass" : "fail") << "\n";
  }
  return verdict.pass ? kExitPass : kExitFail;
}

int run_bounds(const std::string& degree_text, bool all, bool as_json) {
  BigInt m = parse_bigint(degree_text);
  if (m < 1) throw OutOfDomain("degree must be >= 1");
  const bool odd = m % 2 != 0;
  std::vector<std::pair<std::string, std::string>> rows;
  if (m >= 2) rows.emplace_back("h", largest_prime_power(m).str());
  rows.emplace_back("harnack", to_string(harnack_orientable_bound(m).value));
  if (odd) {
    if (m >= 3) {
      rows.emplace_back("vz", to_string(vz_bound(m).value));
      rows.emplace_back("zvonilov", to_string(zvonilov_bound(m).value));
    }
    rows.emplace_back("s", to_string(s_bound(m).value));
  }
  if (all && odd) {
    rows.emplace_back("ellipsoid", to_string(ellipsoid_bound(m).value));
    if (m >= 3) rows.emplace_back("vz_minus_s", to_string(vz_minus_s(m)));
    // extremal non-orientable companions: chi(F) = g~(m^2)
    std::int64_t mi = to_int64(m, "degree");
    GenusValue g = genus_tilde(mi * mi);
    rows.emplace_back("novz_extremal",
                      to_string(nonorientable_vz_bound(m, BigInt(g.value)).value));
    rows.emplace_back("harnack_no_extremal",
                      to_string(harnack_nonorientable_bound(BigInt(g.value)).value));
  }
  if (as_json) {
    json doc;
    doc["degree"] = degree_text;
    for (const auto& [k, v] : rows) doc[k] = v;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "degree " << m.str() << "\n";
    for (const auto& [k, v] : rows) std::printf("  %-20s %s\n", k.c_str(), v.c_str());
    if (!odd) std::cout << "  (odd-degree oval bounds do not apply)\n";
  }
  return kExitPass;
}

int run_compare(const std::string& range_text, int mp, bool as_json) {
  json doc = json::array();
  if (!range_text.empty()) {
    auto [lo, hi] = parse_range(range_text);
    if (!as_json)
      std::printf("%-8s %-10s %-14s %-14s %-14s %s\n", "m", "h(m)", "vz", "s", "zvonilov",
                  "min");
    for (std::int64_t m = lo; m <= hi; ++m) {
      if (m < 3 || m % 2 == 0) continue;
      BigInt bm(m);
      Rational vz = vz_bound(bm).value;
      Rational s = s_bound(bm).value;
      Rational zv = zvonilov_bound(bm).value;
      Rational min = std::min({vz, s, zv});
      if (as_json) {
        doc.push_back({{"m", m},
                       {"h", largest_prime_power(bm).str()},
                       {"vz", to_string(vz)},
                       {"s", to_string(s)},
                       {"zvonilov", to_string(zv)},
                       {"min", to_string(min)}});
      } else {
        std::printf("%-8lld %-10s %-14s %-14s %-14s %s\n", static_cast<long long>(m),
                    largest_prime_power(bm).str().c_str(), to_string(vz).c_str(),
                    to_string(s).c_str(), to_string(zv).c_str(), to_string(min).c_str());
      }
    }
  }
  if (mp >= 0) {
    MpCertificate cert = mp_sequence(static_cast<unsigned>(mp));
    if (as_json) {
      json entry;
      entry["p"] = mp;
      entry["m_p"] = cert.m.str();
      entry["nu5_of_m_plus_2"] = cert.nu5;
      entry["nu7_of_m_plus_2"] = cert.nu7;
      entry["h"] = cert.h.str();
      entry["vz_minus_s"] = to_string(cert.vz_gap);
      doc.push_back(entry);
    } else {
      std::cout << "m_" << mp << " = " << cert.m.str() << "\n";
      std::cout << "  5 | m+2: " << (cert.nu5 >= 1 ? "yes" : "NO") << " (nu5=" << cert.nu5
                << ")\n";
      std::cout << "  7 | m+2: " << (cert.nu7 >= 1 ? "yes" : "NO") << " (nu7=" << cert.nu7
                << ")\n";
      std::cout << "  h(m) = " << cert.h.str() << "\n";
      std::cout << "  vz - s = " << to_string(cert.vz_gap)
                << (cert.vz_gap > 0 ? " > 0" : "") << "\n";
    }
  }
  if (as_json) std::cout << doc.dump(2) << "\n";
  return kExitPass;
}

int run_pipeline(const CurveArgs& args, bool as_json) {
  CurveSpec spec = build_spec(args);
  CoverReport report = pipeline(spec);
  if (as_json) {
    json doc;
    doc["chi_a"] = report.chi_a;
    doc["e_a"] = report.e_a.str();
    doc["chi_x"] = report.chi_x;
    doc["e_x"] = report.e_x.str();
    doc["chi_y"] = report.chi_y;
    doc["sigma_y"] = report.sigma_y;
    doc["b2"] = report.b2;
    doc["b2_plus"] = report.b2_plus;
    doc["b2_minus"] = report.b2_minus;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "arnold surface   chi=" << report.chi_a << " e=" << report.e_a.str() << "\n";
    std::cout << "smoothed X(F)    chi=" << report.chi_x << " e=" << report.e_x.str() << "\n";
    std::cout << "double cover Y   chi=" << report.chi_y << " sigma=" << report.sigma_y
              << " b2=" << report.b2 << " b2+=" << report.b2_plus << " b2-=" << report.b2_minus
              << "\n";
  }
  return kExitPass;
}

QuadraticForm form_from_json(const json& doc) {
  QuadraticForm q;
  q.rank = doc.at("rank").get<unsigned>();
  const auto& matrix = doc.at("bilinear");
  if (matrix.size() != q.rank) throw DimensionMismatch("bilinear has wrong number of rows");
  for (const auto& row : matrix) {
    if (row.size() != q.rank) throw DimensionMismatch("bilinear has a wrong-sized row");
    std::uint32_t bits = 0;
    for (unsigned j = 0; j < q.rank; ++j) {
      unsigned v = row.at(j).get<unsigned>();
      if (v > 1) throw OutOfDomain("bilinear entries live in Z/2");
      bits |= (v & 1u) << j;
    }
    q.bilinear.push_back(bits);
  }
  if (doc.contains("phi"))
    for (const auto& v : doc.at("phi")) q.phi.push_back(v.get<std::uint8_t>());
  return q;
}

int run_brown(const std::string& preset, const std::string& form_file, bool enumerate,
              bool as_json) {
  QuadraticForm q;
  std::vector<std::vector<std::uint8_t>> choices;
  if (!preset.empty()) {
    if (preset == "rp2") {
      q = rp2_form();
      choices = rp2_phi_choices();
    } else if (preset == "klein") {
      q = klein_form();
      choices = klein_phi_choices();
    } else {
      throw OutOfDomain("unknown preset '" + preset + "' (rp2, klein)");
    }
  } else if (!form_file.empty()) {
    std::ifstream in(form_file);
    if (!in) throw Error("cannot open " + form_file);
    json doc = json::parse(in);
    q = form_from_json(doc);
    if (doc.contains("phi_choices")) {
      for (const auto& list : doc.at("phi_choices"))
        choices.push_back(list.get<std::vector<std::uint8_t>>());
    } else {
      // default choice lists: every residue of the forced parity
      for (unsigned i = 0; i < q.rank; ++i) {
        std::uint8_t parity = (q.bilinear[i] >> i) & 1;
        choices.push_back(parity ? std::vector<std::uint8_t>{1, 3}
                                 : std::vector<std::uint8_t>{0, 2});
      }
    }
  } else {
    throw Error("brown needs --preset or --form");
  }

  json doc;
  if (enumerate) {
    auto betas = enumerate_betas(q.bilinear, choices);
    if (as_json) {
      doc["betas"] = betas;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "beta set: {";
      bool first = true;
      for (auto b : betas) {
        std::cout << (first ? "" : ", ") << static_cast<int>(b);
        first = false;
      }
      std::cout << "}\n";
    }
  } else {
    if (q.phi.size() != q.rank)
      throw DimensionMismatch("the form file needs a 'phi' array (or use --enumerate)");
    BrownResult result = brown(q);
    if (as_json) {
      doc["beta"] = result.beta;
      doc["gauss_sum"] = {result.sum.re, result.sum.im};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "beta = " << static_cast<int>(result.beta) << "  (gauss sum "
                << result.sum.re << (result.sum.im < 0 ? " - " : " + ")
                << std::abs(result.sum.im) << "i)\n";
    }
  }
  return kExitPass;
}

int run_genus(const std::string& range_text, const std::string& construct_text, bool as_json) {
  json doc;
  if (!range_text.empty()) {
    auto [lo, hi] = parse_range(range_text);
    json table = json::array();
    for (std::int64_t m = lo; m <= hi; ++m) {
      GenusValue g = genus_tilde(m);
      const char* status = g.status == GenusStatus::Exact ? "exact" : "lower-bound";
      if (as_json)
        table.push_back({{"e", m}, {"g", g.value}, {"status", status}});
      else
        std::printf("g~(%lld) = %-6lld %s\n", static_cast<long long>(m),
                    static_cast<long long>(g.value), status);
    }
    if (as_json) doc["table"] = table;
  }
  if (!construct_text.empty()) {
    std::int64_t e = to_int64(parse_bigint(construct_text), "target");
    Construction c = plan_construction(e);
    if (as_json) {
      doc["construction"] = {{"e", e},
                             {"local_genus", c.local_genus},
                             {"local_self_int", c.local_self_int},
                             {"tube_partner", tube_partner_name(c.tube_partner)},
                             {"achieved_e", c.achieved_e},
                             {"achieved_chi", c.achieved_chi},
                             {"whitney_massey_admissible", c.local_pair_admissible()}};
    } else {
      std::cout << "target e = " << e << ": local surface of non-orientable genus "
                << c.local_genus << " with self-intersection " << c.local_self_int;
      if (c.tube_partner != TubePartner::None)
        std::cout << ", tubed to " << tube_partner_name(c.tube_partner);
      std::cout << "\nachieves (e, chi) = (" << c.achieved_e << ", " << c.achieved_chi
                << "), whitney-massey admissible: "
                << (c.local_pair_admissible() ? "yes" : "no") << "\n";
    }
  }
  if (as_json) std::cout << doc.dump(2) << "\n";
  return kExitPass;
}

int run_enumerate(std::int64_t ovals, const std::string& degree_text, const std::string& filter,
                  bool as_json) {
  std::vector<RealScheme> schemes = enumerate_schemes(ovals, Ambient::ProjectivePlaneOdd);
  std::vector<Verdict> verdicts;
  const bool filtered = !degree_text.empty() && filter == "pass";
  if (!degree_text.empty()) {
    CurveSpec spec;
    spec.ambient = CurveAmbient::CP2;
    spec.degree = to_int64(parse_bigint(degree_text), "degree");
    if (spec.degree % 2 == 0)
      throw InvalidSpec("enumerated schemes carry a pseudo-line; use an odd degree");
    verdicts = check_batch(spec, schemes);
  }
  json list = json::array();
  std::size_t shown = 0;
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    if (filtered && !verdicts[i].pass) continue;
    ++shown;
    std::string text = format_scheme(schemes[i]);
    if (as_json) {
      if (verdicts.empty())
        list.push_back(text);
      else
        list.push_back({{"scheme", text}, {"overall", verdicts[i].pass ? "pass" : "fail"}});
    } else {
      std::cout << text;
      if (!verdicts.empty() && !filtered)
        std::cout << "   " << (verdicts[i].pass ? "pass" : "fail");
      std::cout << "\n";
    }
  }
  if (as_json) {
    json doc;
    doc["ovals"] = ovals;
    doc["count"] = shown;
    doc["schemes"] = list;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << shown << " scheme(s)\n";
  }
  return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"topological bound checker for real schemes of plane and quadric curves"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit one JSON document on stdout");

  CurveArgs check_args;
  std::string check_scheme_text;
  auto* cmd_check = app.add_subcommand("check", "test a scheme against every applicable bound");
  add_curve_options(cmd_check, check_args, true);
  cmd_check->add_option("--scheme", check_scheme_text, "scheme in ASCII Viro notation")
      ->required();
  cmd_check->add_flag("--json", as_json, "emit the verdict as JSON");

  std::string bounds_degree;
  bool bounds_all = false;
  auto* cmd_bounds = app.add_subcommand("bounds", "print the bound values for one degree");
  cmd_bounds->add_option("--degree", bounds_degree)->required();
  cmd_bounds->add_flag("--all", bounds_all, "include ellipsoid and extremal variants");
  cmd_bounds->add_flag("--json", as_json);

  std::string compare_range;
  int compare_mp = -1;
  auto* cmd_compare = app.add_subcommand("compare", "tabulate vz / s / zvonilov across degrees");
  cmd_compare->add_option("--degrees", compare_range, "odd degrees LO:HI");
  cmd_compare->add_option("--mp", compare_mp, "certificate for m_p = 1287*429^(12p+1)")
      ->check(CLI::Range(0, 8));
  cmd_compare->add_flag("--json", as_json);

  CurveArgs pipeline_args;
  auto* cmd_pipeline = app.add_subcommand("pipeline", "branched-cover invariant chain");
  add_curve_options(cmd_pipeline, pipeline_args, true);
  cmd_pipeline->add_flag("--json", as_json);

  std::string brown_preset, brown_form;
  bool brown_enumerate = false;
  auto* cmd_brown = app.add_subcommand("brown", "Brown invariant of a quadratic refinement");
  cmd_brown->add_option("--preset", brown_preset, "rp2 or klein");
  cmd_brown->add_option("--form", brown_form, "JSON file with rank/bilinear/phi");
  cmd_brown->add_flag("--enumerate", brown_enumerate, "all betas over the allowed phi values");
  cmd_brown->add_flag("--json", as_json);

  std::string genus_range, genus_construct;
  auto* cmd_genus = app.add_subcommand("genus", "non-orientable genus function of CP2");
  cmd_genus->add_option("--range", genus_range, "table for e in LO:HI");
  cmd_genus->add_option("--construct", genus_construct, "realization certificate for one e");
  cmd_genus->add_flag("--json", as_json);

  std::int64_t enum_ovals = 0;
  std::string enum_degree, enum_filter;
  auto* cmd_enum = app.add_subcommand("enumerate", "all odd-degree schemes with N ovals");
  cmd_enum->add_option("--ovals", enum_ovals)->required()->check(CLI::Range(0, 18));
  cmd_enum->add_option("--degree", enum_degree, "also check each scheme at this degree");
  cmd_enum->add_option("--filter", enum_filter, "'pass' keeps only unobstructed schemes")
      ->check(CLI::IsMember({"pass"}));
  cmd_enum->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cmd_check) return run_check(check_args, check_scheme_text, as_json);
    if (*cmd_bounds) return run_bounds(bounds_degree, bounds_all, as_json);
    if (*cmd_compare) {
      if (compare_range.empty() && compare_mp < 0)
        throw Error("compare needs --degrees and/or --mp");
      return run_compare(compare_range, compare_mp, as_json);
    }
    if (*cmd_pipeline) return run_pipeline(pipeline_args, as_json);
    if (*cmd_brown) return run_brown(brown_preset, brown_form, brown_enumerate, as_json);
    if (*cmd_genus) {
      if (genus_range.empty() && genus_construct.empty())
        throw Error("genus needs --range and/or --construct");
      return run_genus(genus_range, genus_construct, as_json);
    }
    if (*cmd_enum) return run_enumerate(enum_ovals, enum_degree, enum_filter, as_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
