#include "ovalbound/verdict.hpp"
#include "ovalbound/errors.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <random>

using namespace ovalbound;

namespace {

CurveSpec cp2(std::int64_t m) {
  CurveSpec spec;
  spec.ambient = CurveAmbient::CP2;
  spec.degree = m;
  return spec;
}

const ConstraintRecord& find_record(const Verdict& v, const std::string& id) {
  auto it = std::find_if(v.constraints.begin(), v.constraints.end(),
                         [&](const ConstraintRecord& r) { return r.id == id; });
  REQUIRE(it != v.constraints.end());
  return *it;
}

// every way of adding one empty oval to the forest (top level or inside
// any oval), as full schemes
std::vector<RealScheme> with_one_more_oval(const RealScheme& base) {
  std::vector<RealScheme> out;
  RealScheme top = base;
  top.forest.push_back(OvalNode{});
  canonicalize(top);
  out.push_back(top);
  struct Walker {
    const RealScheme& base;
    std::vector<RealScheme>& out;
    void at(std::vector<std::size_t>& path) {
      RealScheme copy = base;
      Forest* forest = &copy.forest;
      for (std::size_t idx : path) forest = &(*forest)[idx].children;
      forest->push_back(OvalNode{});
      canonicalize(copy);
      out.push_back(copy);
    }
    void walk(const Forest& forest, std::vector<std::size_t>& path) {
      for (std::size_t i = 0; i < forest.size(); ++i) {
        path.push_back(i);
        at(path);
        walk(forest[i].children, path);
        path.pop_back();
      }
    }
  } walker{base, out};
  std::vector<std::size_t> path;
  walker.walk(base.forest, path);
  return out;
}

} // namespace

TEST_CASE("applicable bounds dispatch") {
  CHECK(applicable_bounds(cp2(7)) ==
        std::vector<std::string>{"harnack", "vz", "zvonilov", "s", "structural-J"});
  CHECK(applicable_bounds(cp2(2)) == std::vector<std::string>{"harnack"});

  CurveSpec hyp;
  hyp.ambient = CurveAmbient::Hyperboloid;
  hyp.bidegree_a = 1;
  hyp.bidegree_b = 1;
  CHECK(applicable_bounds(hyp) == std::vector<std::string>{"hyperboloid", "structural"});

  CurveSpec no_q = cp2(7);
  no_q.q_flexible = false;
  auto ids = applicable_bounds(no_q);
  CHECK(std::find(ids.begin(), ids.end(), "s") == ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "vz") != ids.end());

  CurveSpec non_or = cp2(5);
  non_or.orientable = false;
  non_or.chi_f = -10;
  CHECK(applicable_bounds(non_or) ==
        std::vector<std::string>{"harnack-no", "novz", "structural-J"});

  CurveSpec ell;
  ell.ambient = CurveAmbient::Ellipsoid;
  ell.degree = 5;
  CHECK(applicable_bounds(ell) == std::vector<std::string>{"ellipsoid", "structural"});
}

TEST_CASE("the example scheme passes every degree-7 bound") {
  Verdict v = check_scheme(cp2(7), parse_scheme("<J + 2 + 1<1>>", Ambient::ProjectivePlaneOdd));
  CHECK(v.pass);
  CHECK(v.b0 == 5);
  CHECK(find_record(v, "harnack").bound == 16);
  CHECK(find_record(v, "vz").bound == 4);
  CHECK(find_record(v, "s").bound == 9);
  CHECK(find_record(v, "zvonilov").bound == 6);
  CHECK(find_record(v, "vz").observed == 1);
  CHECK(v.min_oval_bound == Rational(4));
}

TEST_CASE("harnack failure at degree 3") {
  Verdict v = check_scheme(cp2(3), parse_scheme("<J + 5>", Ambient::ProjectivePlaneOdd));
  CHECK_FALSE(v.pass);
  CHECK(find_record(v, "harnack").status == ConstraintStatus::Fail);
  CHECK(find_record(v, "harnack").bound == 2);
  CHECK(find_record(v, "harnack").observed == 6);
}

TEST_CASE("equality in the s bound emits the type I note") {
  // degree 3: s = 1, one non-empty oval
  Verdict v = check_scheme(cp2(3), parse_scheme("<J + 1<1>>", Ambient::ProjectivePlaneOdd));
  CHECK(find_record(v, "s").status == ConstraintStatus::Equality);
  bool noted = false;
  for (const auto& n : v.notes) noted |= n.find("type I") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("even degrees keep only the harnack bound") {
  Verdict ok = check_scheme(cp2(2), parse_scheme("<1>", Ambient::ProjectivePlaneEven));
  CHECK(ok.pass);
  CHECK(ok.constraints.size() == 1);
  CHECK(ok.constraints[0].id == "harnack");

  Verdict too_many = check_scheme(cp2(2), parse_scheme("<3>", Ambient::ProjectivePlaneEven));
  CHECK_FALSE(too_many.pass); // a conic has at most one oval
}

TEST_CASE("non-orientable extremal mode") {
  CurveSpec spec = cp2(5);
  spec.orientable = false;
  spec.extremal_chi = true;
  Verdict v = check_scheme(spec, parse_scheme("<J + 2>", Ambient::ProjectivePlaneOdd));
  CHECK(find_record(v, "novz").bound == 4);        // m - 1
  CHECK(find_record(v, "harnack-no").bound == 13); // (m^2+1)/2
  bool conjecture_note = false;
  for (const auto& n : v.notes)
    conjecture_note |= n.find("conjectured") != std::string::npos;
  CHECK(conjecture_note);

  CurveSpec missing = cp2(5);
  missing.orientable = false;
  CHECK_THROWS_AS(check_scheme(missing, parse_scheme("<J>", Ambient::ProjectivePlaneOdd)),
                  MissingChi);
}

TEST_CASE("hyperboloid and ellipsoid verdicts") {
  CurveSpec hyp;
  hyp.ambient = CurveAmbient::Hyperboloid;
  hyp.bidegree_a = 1;
  hyp.bidegree_b = 1;
  Verdict v = check_scheme(hyp, parse_scheme("<1(1,1): 1>", Ambient::Hyperboloid));
  CHECK(v.pass);
  CHECK(find_record(v, "hyperboloid").bound == 1);
  CHECK(v.b0 == 2); // one oval plus one (1,1) copy

  Verdict fail = check_scheme(hyp, parse_scheme("<1(1,1): 2<1>>", Ambient::Hyperboloid));
  CHECK_FALSE(fail.pass); // two non-empty ovals against a bound of one

  CurveSpec ell;
  ell.ambient = CurveAmbient::Ellipsoid;
  ell.degree = 1;
  Verdict ev = check_scheme(ell, parse_scheme("<1>", Ambient::Ellipsoid));
  CHECK(ev.pass);
}

TEST_CASE("ambient mismatches are rejected") {
  CHECK_THROWS_AS(check_scheme(cp2(7), parse_scheme("<1>", Ambient::Ellipsoid)),
                  AmbientMismatch);
  CHECK_THROWS_AS(check_scheme(cp2(4), parse_scheme("<J>", Ambient::ProjectivePlaneOdd)),
                  AmbientMismatch);
}

TEST_CASE("reported minimum equals the arithmetic minimum") {
  for (std::int64_t m = 3; m <= 27; m += 2) {
    Verdict v = check_scheme(cp2(m), parse_scheme("<J + 1<1>>", Ambient::ProjectivePlaneOdd));
    Rational expected = std::min({vz_bound(m).value, s_bound(m).value, zvonilov_bound(m).value});
    CHECK(v.min_oval_bound == expected);
  }
}

TEST_CASE("adding an empty oval moves the counts monotonically") {
  std::mt19937_64 rng(77);
  auto schemes = enumerate_schemes(5, Ambient::ProjectivePlaneOdd);
  CurveSpec spec = cp2(9);
  for (const auto& base : schemes) {
    Verdict before = check_scheme(spec, base);
    std::int64_t nonempty_before = before.stats.l_zero + before.stats.l_minus;
    for (const auto& grown : with_one_more_oval(base)) {
      Verdict after = check_scheme(spec, grown);
      std::int64_t nonempty_after = after.stats.l_zero + after.stats.l_minus;
      CHECK(after.b0 == before.b0 + 1);
      CHECK(nonempty_after >= nonempty_before);
      CHECK(nonempty_after <= nonempty_before + 1);
    }
  }
}

TEST_CASE("batch checking matches the serial loop") {
  auto schemes = enumerate_schemes(6, Ambient::ProjectivePlaneOdd);
  CurveSpec spec = cp2(5);
  auto serial = check_batch_serial(spec, schemes);
  auto parallel = check_batch(spec, schemes);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].pass == parallel[i].pass);
    CHECK(serial[i].scheme_text == parallel[i].scheme_text);
    CHECK(verdict_to_json(serial[i]) == verdict_to_json(parallel[i]));
  }
}

TEST_CASE("verdict json follows the schema and parses back") {
  Verdict v = check_scheme(cp2(7), parse_scheme("<J + 2 + 1<1>>", Ambient::ProjectivePlaneOdd));
  nlohmann::json doc = nlohmann::json::parse(verdict_to_json(v));
  CHECK(doc["spec"]["ambient"] == "cp2");
  CHECK(doc["spec"]["degree"] == 7);
  CHECK(doc["scheme"] == "<J + 1<1> + 2>");
  CHECK(doc["stats"]["l"] == 4);
  CHECK(doc["stats"]["l_plus"] == 3);
  CHECK(doc["stats"]["l_zero"] == 1);
  CHECK(doc["stats"]["l_minus"] == 0);
  CHECK(doc["stats"]["b0"] == 5);
  CHECK(doc["overall"] == "pass");
  bool saw_s = false;
  for (const auto& c : doc["constraints"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("bound"));
    CHECK(c.contains("observed"));
    CHECK(c.contains("status"));
    if (c["id"] == "s") {
      saw_s = true;
      CHECK(c["bound"] == "9");
      CHECK(c["status"] == "pass");
    }
  }
  CHECK(saw_s);
}
