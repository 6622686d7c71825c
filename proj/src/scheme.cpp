#include "ovalbound/scheme.hpp"
#include "ovalbound/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace ovalbound {

std::string ambient_name(Ambient a) {
  switch (a) {
    case Ambient::ProjectivePlaneOdd: return "cp2-odd";
    case Ambient::ProjectivePlaneEven: return "cp2-even";
    case Ambient::Hyperboloid: return "hyperboloid";
    case Ambient::Ellipsoid: return "ellipsoid";
  }
  return "?";
}

std::int64_t subtree_size(const OvalNode& node) {
  std::int64_t n = 1;
  for (const auto& c : node.children) n += subtree_size(c);
  return n;
}

std::int64_t forest_size(const Forest& forest) {
  std::int64_t n = 0;
  for (const auto& t : forest) n += subtree_size(t);
  return n;
}

namespace {

std::string items_text(const Forest& forest);

// Canonical rendering of a node as a single item (count 1).
std::string item_text(const OvalNode& node) {
  if (node.children.empty()) return "1";
  return "1<" + items_text(node.children) + ">";
}

bool child_less(const OvalNode& a, const OvalNode& b) {
  std::int64_t sa = subtree_size(a), sb = subtree_size(b);
  if (sa != sb) return sa > sb;
  return item_text(a) < item_text(b);
}

// Runs of identical children collapse into a count prefix: "2" is two
// empty ovals, "2<1>" is two identical nests.
std::string items_text(const Forest& forest) {
  std::string out;
  std::size_t i = 0;
  while (i < forest.size()) {
    std::size_t j = i;
    while (j < forest.size() && forest[j] == forest[i]) ++j;
    if (!out.empty()) out += " + ";
    out += std::to_string(j - i);
    if (!forest[i].children.empty()) out += "<" + items_text(forest[i].children) + ">";
    i = j;
  }
  return out;
}

} // namespace

void canonicalize(Forest& forest) {
  for (auto& node : forest) canonicalize(node.children);
  std::stable_sort(forest.begin(), forest.end(), child_less);
}

void canonicalize(RealScheme& scheme) {
  canonicalize(scheme.forest);
  for (auto& zone : scheme.zones) canonicalize(zone);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { LT, GT, LParen, RParen, Colon, Pipe, Sep, J, Num, End };

struct Token {
  Tok kind;
  std::int64_t value = 0;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> toks;
  std::size_t i = 0;
  const auto n = text.size();
  while (i < n) {
    unsigned char c = text[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    switch (c) {
      case '<': toks.push_back({Tok::LT}); ++i; continue;
      case '>': toks.push_back({Tok::GT}); ++i; continue;
      case '(': toks.push_back({Tok::LParen}); ++i; continue;
      case ')': toks.push_back({Tok::RParen}); ++i; continue;
      case ':': toks.push_back({Tok::Colon}); ++i; continue;
      case '|': toks.push_back({Tok::Pipe}); ++i; continue;
      case '+': toks.push_back({Tok::Sep}); ++i; continue;
      case ',': toks.push_back({Tok::Sep}); ++i; continue;
      case 'J': toks.push_back({Tok::J}); ++i; continue;
      default: break;
    }
    if (c == 0xE2 && i + 2 < n && static_cast<unsigned char>(text[i + 1]) == 0x8A &&
        static_cast<unsigned char>(text[i + 2]) == 0x94) {
      toks.push_back({Tok::Sep}); // the disjoint-union sign, synonym of '+'
      i += 3;
      continue;
    }
    if (c == '-' || std::isdigit(c)) {
      bool neg = c == '-';
      if (neg) ++i;
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw SyntaxError("expected digits after '-' at offset " + std::to_string(i));
      std::int64_t v = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 100000000) throw SyntaxError("numeric literal too large");
        ++i;
      }
      toks.push_back({Tok::Num, neg ? -v : v});
      continue;
    }
    throw SyntaxError(std::string("unexpected character '") + static_cast<char>(c) +
                      "' at offset " + std::to_string(i));
  }
  toks.push_back({Tok::End});
  return toks;
}

constexpr std::int64_t kMaxOvals = 1000000;

class Parser {
public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  RealScheme parse(Ambient ambient) {
    expect(Tok::LT, "'<'");
    RealScheme scheme;
    scheme.ambient = ambient;
    const bool pair_form = peek().kind == Tok::Num && peek(1).kind == Tok::LParen;
    if (pair_form) {
      if (ambient != Ambient::Hyperboloid)
        throw AmbientMismatch("(alpha,beta) data only makes sense on the hyperboloid");
      parse_hyperboloid(scheme);
    } else {
      if (ambient == Ambient::Hyperboloid)
        throw AmbientMismatch("hyperboloid schemes need '<copies(alpha,beta): zones>'");
      unsigned j_count = 0;
      if (starts_item()) scheme.forest = parse_items(&j_count);
      expect(Tok::GT, "'>'");
      validate_plane(scheme, j_count);
    }
    expect(Tok::End, "end of input");
    canonicalize(scheme);
    return scheme;
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }

  Token take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw SyntaxError(std::string("expected ") + what);
    take();
  }

  std::int64_t take_nat(const char* what) {
    if (peek().kind != Tok::Num || peek().value < 0)
      throw SyntaxError(std::string("expected ") + what);
    return take().value;
  }

  bool starts_item() const {
    Tok k = peek().kind;
    return k == Tok::J || k == Tok::Num;
  }

  // items := item (('+'|','|'⊔') item)*
  Forest parse_items(unsigned* j_count) {
    Forest forest;
    std::int64_t total = 0;
    for (;;) {
      parse_item(forest, j_count, total);
      if (peek().kind == Tok::Sep) {
        take();
        continue;
      }
      break;
    }
    return forest;
  }

  void parse_item(Forest& forest, unsigned* j_count, std::int64_t& total) {
    if (peek().kind == Tok::J) {
      take();
      if (j_count == nullptr)
        throw AmbientMismatch("the pseudo-line J cannot appear nested or in a zone");
      ++*j_count;
      return;
    }
    std::int64_t count = take_nat("an oval count or 'J'");
    OvalNode node;
    if (peek().kind == Tok::LT) {
      take();
      node.children = parse_items(nullptr);
      expect(Tok::GT, "'>'");
    }
    total += count * std::max<std::int64_t>(subtree_size(node), 1);
    if (total > kMaxOvals) throw SyntaxError("scheme too large");
    for (std::int64_t i = 0; i < count; ++i) forest.push_back(node);
  }

  void parse_hyperboloid(RealScheme& scheme) {
    TorusClass tc;
    std::int64_t copies = take_nat("copy count");
    expect(Tok::LParen, "'('");
    if (peek().kind != Tok::Num) throw SyntaxError("expected alpha");
    tc.alpha = take().value;
    expect(Tok::Sep, "','");
    if (peek().kind != Tok::Num) throw SyntaxError("expected beta");
    tc.beta = take().value;
    expect(Tok::RParen, "')'");
    expect(Tok::Colon, "':'");
    if (copies < 1) throw AmbientMismatch("copy count must be >= 1");
    if (tc.alpha % 2 == 0 || tc.beta % 2 == 0)
      throw AmbientMismatch("(alpha,beta) must both be odd");
    if (std::gcd(tc.alpha, tc.beta) != 1)
      throw AmbientMismatch("(alpha,beta) must be coprime");
    tc.copies = static_cast<unsigned>(copies);
    scheme.torus_class = tc;

    // zones := items? ('|' items?)*
    for (;;) {
      Forest zone;
      if (starts_item()) zone = parse_items(nullptr);
      scheme.zones.push_back(std::move(zone));
      if (peek().kind == Tok::Pipe) {
        take();
        continue;
      }
      break;
    }
    expect(Tok::GT, "'>'");
    if (scheme.zones.size() != tc.copies)
      throw AmbientMismatch("expected " + std::to_string(tc.copies) + " zones, got " +
                            std::to_string(scheme.zones.size()));
  }

  void validate_plane(RealScheme& scheme, unsigned j_count) {
    switch (scheme.ambient) {
      case Ambient::ProjectivePlaneOdd:
        if (j_count != 1)
          throw AmbientMismatch("odd-degree schemes have exactly one pseudo-line J");
        scheme.pseudo_line = true;
        break;
      case Ambient::ProjectivePlaneEven:
      case Ambient::Ellipsoid:
        if (j_count != 0)
          throw AmbientMismatch("only odd-degree CP2 schemes contain a pseudo-line J");
        break;
      case Ambient::Hyperboloid:
        break; // handled in parse_hyperboloid
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

} // namespace

RealScheme parse_scheme(const std::string& text, Ambient ambient) {
  return Parser(text).parse(ambient);
}

std::string format_scheme(const RealScheme& scheme) {
  RealScheme s = scheme;
  canonicalize(s);
  switch (s.ambient) {
    case Ambient::ProjectivePlaneOdd: {
      std::string body = items_text(s.forest);
      return body.empty() ? "<J>" : "<J + " + body + ">";
    }
    case Ambient::ProjectivePlaneEven:
    case Ambient::Ellipsoid:
      return "<" + items_text(s.forest) + ">";
    case Ambient::Hyperboloid: {
      if (!s.torus_class) throw AmbientMismatch("hyperboloid scheme without torus data");
      const auto& tc = *s.torus_class;
      std::string out = "<" + std::to_string(tc.copies) + "(" + std::to_string(tc.alpha) +
                        "," + std::to_string(tc.beta) + "):";
      for (std::size_t i = 0; i < s.zones.size(); ++i) {
        if (i > 0) out += " |";
        std::string body = items_text(s.zones[i]);
        if (!body.empty()) out += " " + body;
      }
      out += ">";
      return out;
    }
  }
  throw AmbientMismatch("unknown ambient");
}

// ---------------------------------------------------------------------------
// Region census

namespace {

void classify_forest(const Forest& forest, const std::string& id_prefix, RegionStats& stats) {
  for (std::size_t i = 0; i < forest.size(); ++i) {
    const OvalNode& node = forest[i];
    std::string id = id_prefix + std::to_string(i);
    std::int64_t chi = 1 - static_cast<std::int64_t>(node.children.size());
    ++stats.total_ovals;
    if (chi > 0)
      ++stats.l_plus;
    else if (chi == 0)
      ++stats.l_zero;
    else
      ++stats.l_minus;
    stats.region_chis.push_back({id, chi});
    classify_forest(node.children, id + ".", stats);
  }
}

void count_region(RegionStats& stats, const std::string& id, std::int64_t chi) {
  if (chi > 0)
    ++stats.l_plus;
  else if (chi == 0)
    ++stats.l_zero;
  else
    ++stats.l_minus;
  stats.region_chis.push_back({id, chi});
}

} // namespace

RegionStats classify_regions(const RealScheme& scheme) {
  RealScheme s = scheme;
  canonicalize(s);
  RegionStats stats;
  switch (s.ambient) {
    case Ambient::ProjectivePlaneOdd: {
      classify_forest(s.forest, "", stats);
      stats.exterior_count = static_cast<std::int64_t>(s.forest.size());
      stats.chi_j = 1 - stats.exterior_count;
      stats.region_chis.push_back({"J", *stats.chi_j});
      break;
    }
    case Ambient::ProjectivePlaneEven: {
      classify_forest(s.forest, "", stats);
      stats.exterior_count = static_cast<std::int64_t>(s.forest.size());
      // the outer region is the punctured Moebius band; not one of the l counts
      stats.region_chis.push_back({"outer", 1 - stats.exterior_count});
      break;
    }
    case Ambient::Hyperboloid: {
      for (std::size_t z = 0; z < s.zones.size(); ++z) {
        std::string prefix = "z" + std::to_string(z) + ":";
        classify_forest(s.zones[z], prefix, stats);
        std::int64_t roots = static_cast<std::int64_t>(s.zones[z].size());
        stats.exterior_count += roots;
        // annulus minus its exterior ovals; never counted in l
        stats.region_chis.push_back({"z" + std::to_string(z), -roots});
      }
      break;
    }
    case Ambient::Ellipsoid: {
      classify_forest(s.forest, "", stats);
      stats.exterior_count = static_cast<std::int64_t>(s.forest.size());
      // on the sphere every complement component counts
      count_region(stats, "outer", 2 - stats.exterior_count);
      break;
    }
  }
  return stats;
}

LiftedScheme lift_real_scheme(const RealScheme& scheme) {
  RealScheme s = scheme;
  canonicalize(s);
  LiftedScheme lifted;
  lifted.ambient = s.ambient;
  switch (s.ambient) {
    case Ambient::ProjectivePlaneOdd:
      lifted.hemisphere[0] = s.forest;
      lifted.hemisphere[1] = s.forest;
      lifted.non_doubled = 1; // J is covered by the non-trivial double cover
      return lifted;
    case Ambient::Hyperboloid: {
      if (!s.torus_class) throw AmbientMismatch("hyperboloid scheme without torus data");
      lifted.torus_class = *s.torus_class;
      lifted.torus_class->copies *= 2;
      lifted.zones = s.zones;
      lifted.zones.insert(lifted.zones.end(), s.zones.begin(), s.zones.end());
      lifted.non_doubled = 0;
      return lifted;
    }
    case Ambient::ProjectivePlaneEven:
    case Ambient::Ellipsoid:
      throw UnsupportedAmbient("lift_real_scheme: only odd CP2 and hyperboloid schemes lift");
  }
  throw UnsupportedAmbient("unknown ambient");
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// All canonical rooted trees with a given oval count, sorted by canonical
// text; memoized. Mutually recursive with forest generation.
class TreeTable {
public:
  const std::vector<OvalNode>& trees(std::int64_t size) {
    while (static_cast<std::int64_t>(by_size_.size()) <= size) grow();
    return by_size_[size];
  }

  void forests(std::int64_t n, std::vector<Forest>& out) {
    Forest current;
    rec(n, n, 0, current, out);
  }

private:
  void grow() {
    std::int64_t size = static_cast<std::int64_t>(by_size_.size());
    std::vector<OvalNode> level;
    if (size >= 1) {
      std::vector<Forest> child_forests;
      forests(size - 1, child_forests);
      level.reserve(child_forests.size());
      for (auto& f : child_forests) {
        OvalNode node;
        node.children = std::move(f);
        level.push_back(std::move(node));
      }
      std::sort(level.begin(), level.end(),
                [](const OvalNode& a, const OvalNode& b) { return item_text(a) < item_text(b); });
    }
    by_size_.push_back(std::move(level));
  }

  // Canonical forests are exactly the non-increasing sequences in child
  // order (size desc, text asc): pick each tree no earlier than the last.
  void rec(std::int64_t n, std::int64_t max_size, std::size_t min_index, Forest& current,
           std::vector<Forest>& out) {
    if (n == 0) {
      out.push_back(current);
      return;
    }
    for (std::int64_t s = std::min(n, max_size); s >= 1; --s) {
      const auto& level = trees(s);
      std::size_t start = (s == max_size) ? min_index : 0;
      for (std::size_t i = start; i < level.size(); ++i) {
        current.push_back(level[i]);
        rec(n - s, s, i, current, out);
        current.pop_back();
      }
    }
  }

  std::vector<std::vector<OvalNode>> by_size_;
};

} // namespace

std::vector<RealScheme> enumerate_schemes(std::int64_t n_ovals, Ambient ambient) {
  if (ambient != Ambient::ProjectivePlaneOdd)
    throw UnsupportedAmbient("enumerate_schemes: only odd-degree CP2 schemes are enumerated");
  if (n_ovals < 0) throw OutOfDomain("enumerate_schemes: n_ovals must be >= 0");
  if (n_ovals > 18) throw OutOfDomain("enumerate_schemes: n_ovals > 18 is beyond desk scale");
  TreeTable table;
  std::vector<Forest> forests;
  table.forests(n_ovals, forests);
  std::vector<RealScheme> out;
  out.reserve(forests.size());
  for (auto& f : forests) {
    RealScheme s;
    s.ambient = Ambient::ProjectivePlaneOdd;
    s.pseudo_line = true;
    s.forest = std::move(f);
    out.push_back(std::move(s));
  }
  return out;
}

} // namespace ovalbound
