#ifndef OVALBOUND_GENUS_HPP
#define OVALBOUND_GENUS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ovalbound {

enum class GenusStatus { Exact, LowerBoundOnly };

/// Value of the non-orientable genus function g~ of CP2: the maximal Euler
/// characteristic of a closed connected non-orientable surface with the
/// given self-intersection. Positive odd arguments >= 11 carry only the
/// conjectured lower bound.
struct GenusValue {
  std::int64_t value = 0;
  GenusStatus status = GenusStatus::Exact;
};

GenusValue genus_tilde(std::int64_t m);

/// Admissible normal Euler numbers of a closed non-orientable surface of
/// Euler characteristic chi in the 4-sphere: 2chi-4 to 4-2chi in steps of
/// 4. Throws OutOfDomain for chi >= 2.
std::vector<std::int64_t> whitney_massey_admissible(std::int64_t chi);

enum class TubePartner { None, Line, Conic, StandardRP2 };

std::string tube_partner_name(TubePartner partner);

/// A surface realizing (e, g~(e)): a local surface in a ball, optionally
/// tubed to a standard surface elsewhere in CP2.
struct Construction {
  std::int64_t local_genus = 0;     // non-orientable genus of the local piece
  std::int64_t local_self_int = 0;  // its normal Euler number in the ball
  TubePartner tube_partner = TubePartner::None;
  std::int64_t achieved_e = 0;
  std::int64_t achieved_chi = 0;

  /// Whitney-Massey admissibility of (local_self_int, 2 - local_genus).
  bool local_pair_admissible() const;
};

/// Certificate realizing (e_target, genus_tilde(e_target).value).
Construction plan_construction(std::int64_t e_target);

} // namespace ovalbound

#endif
