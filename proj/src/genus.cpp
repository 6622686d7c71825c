#include "ovalbound/genus.hpp"
#include "ovalbound/errors.hpp"

namespace ovalbound {

GenusValue genus_tilde(std::int64_t m) {
  if (m == 0) return {0, GenusStatus::Exact};
  if (m < 0) {
    std::int64_t k = -m;
    std::int64_t l = k & 1;
    return {2 - (k + l) / 2, GenusStatus::Exact};
  }
  if (m % 2 == 0) {
    if (m == 2) return {1, GenusStatus::Exact};
    if (m == 4) return {0, GenusStatus::Exact};
    if (m % 4 == 0) return {4 - 2 * (m / 4), GenusStatus::Exact};
    return {3 - 2 * ((m - 2) / 4), GenusStatus::Exact};
  }
  switch (m) {
    case 1: return {0, GenusStatus::Exact};
    case 3: return {1, GenusStatus::Exact};
    case 5: return {0, GenusStatus::Exact};
    case 7: return {-1, GenusStatus::Exact};
    case 9: return {-2, GenusStatus::Exact};
    default: break;
  }
  // conjecturally sharp beyond 9
  if (m % 4 == 1) return {2 - 2 * ((m - 1) / 4), GenusStatus::LowerBoundOnly};
  return {1 - 2 * ((m - 3) / 4), GenusStatus::LowerBoundOnly};
}

std::vector<std::int64_t> whitney_massey_admissible(std::int64_t chi) {
  if (chi >= 2)
    throw OutOfDomain("whitney_massey_admissible: non-orientable surfaces have chi <= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t e = 2 * chi - 4; e <= 4 - 2 * chi; e += 4) out.push_back(e);
  return out;
}

std::string tube_partner_name(TubePartner partner) {
  switch (partner) {
    case TubePartner::None: return "none";
    case TubePartner::Line: return "line";
    case TubePartner::Conic: return "conic";
    case TubePartner::StandardRP2: return "rp2";
  }
  return "?";
}

bool Construction::local_pair_admissible() const {
  if (local_genus < 1) return false;  // local piece must be non-orientable
  std::int64_t chi = 2 - local_genus;
  if (local_self_int < 2 * chi - 4 || local_self_int > 4 - 2 * chi) return false;
  return ((local_self_int - 2 * chi) % 4 + 4) % 4 == 0;
}

namespace {

Construction with_partner(std::int64_t genus, std::int64_t self_int, TubePartner partner) {
  Construction c;
  c.local_genus = genus;
  c.local_self_int = self_int;
  c.tube_partner = partner;
  std::int64_t partner_e = 0, partner_chi = 0;
  switch (partner) {
    case TubePartner::None: break;
    case TubePartner::Line: partner_e = 1; partner_chi = 2; break;
    case TubePartner::Conic: partner_e = 4; partner_chi = 2; break;
    case TubePartner::StandardRP2: partner_e = -1; partner_chi = 1; break;
  }
  c.achieved_e = self_int + partner_e;
  c.achieved_chi = 2 - genus;
  if (partner != TubePartner::None) c.achieved_chi += partner_chi - 2;  // tube kills a disk each
  return c;
}

} // namespace

Construction plan_construction(std::int64_t e_target) {
  // zero and small positive targets need the Klein bottle and RP2 seeds
  switch (e_target) {
    case 0: return with_partner(2, 0, TubePartner::None);
    case 1: return with_partner(2, 0, TubePartner::Line);
    case 2: return with_partner(1, 2, TubePartner::None);
    case 4: return with_partner(2, 4, TubePartner::None);
    default: break;
  }
  if (e_target < 0) {
    std::int64_t k = -e_target;
    if (k % 2 == 0) return with_partner(k / 2, -k, TubePartner::None);
    return with_partner((k + 1) / 2, -(k + 1), TubePartner::Line);
  }
  switch (e_target % 4) {
    case 0: {
      std::int64_t k = e_target / 4;  // k >= 2 here
      return with_partner(2 * (k - 1), 4 * (k - 1), TubePartner::Conic);
    }
    case 2: {
      std::int64_t k = (e_target - 2) / 4;
      return with_partner(2 * k - 1, 4 * k - 2, TubePartner::Conic);
    }
    case 1: {
      std::int64_t k = (e_target - 1) / 4;
      return with_partner(2 * k, 4 * k, TubePartner::Line);
    }
    default: {
      std::int64_t k = (e_target - 3) / 4;
      return with_partner(2 * k + 1, 4 * k + 2, TubePartner::Line);
    }
  }
}

} // namespace ovalbound
