#ifndef OVALBOUND_QUADFORM_HPP
#define OVALBOUND_QUADFORM_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace ovalbound {

/// A Z/4-valued quadratic refinement of a Z/2 intersection pairing, given
/// on a basis. Subsets of the basis are bitmasks (rank <= 30).
struct QuadraticForm {
  unsigned rank = 0;
  std::vector<std::uint32_t> bilinear;  // row bitmasks of a symmetric matrix
  std::vector<std::uint8_t> phi;        // phi(e_i) mod 4, phi[i] = B[i][i] mod 2

  void validate() const;  // symmetry, sizes, refinement parity
};

struct GaussSum {
  std::int64_t re = 0;
  std::int64_t im = 0;

  bool operator==(const GaussSum&) const = default;
};

struct BrownResult {
  std::uint8_t beta = 0;  // mod 8
  GaussSum sum;           // equals 2^(b/2) * zeta_8^beta exactly
};

/// phi(x) by polarization: sum of phi over the bits of x plus twice the
/// pairing over pairs of bits. Throws DimensionMismatch if x has bits
/// outside the basis.
std::uint8_t evaluate_form(const QuadraticForm& q, std::uint32_t x);

/// B(x,y) mod 2.
std::uint8_t pairing(const QuadraticForm& q, std::uint32_t x, std::uint32_t y);

/// Reference Brown invariant: direct summation of i^phi(x) over all 2^b
/// subsets, one full phi evaluation per term. Exact Gaussian integers.
BrownResult brown_serial(const QuadraticForm& q);

/// Same result as brown_serial; large ranks walk the subsets in Gray-code
/// order, chunked across OpenMP threads. Exact, deterministic.
BrownResult brown(const QuadraticForm& q);

/// Brown invariants over the Cartesian product of allowed phi values per
/// basis vector. Throws ParityViolation if a choice breaks the refinement
/// parity.
std::set<std::uint8_t> enumerate_betas(const std::vector<std::uint32_t>& bilinear,
                                       const std::vector<std::vector<std::uint8_t>>& phi_choices);

struct GmCheck {
  bool contradiction = false;
  std::uint8_t required = 0;  // the residue mod 8 forced by the congruence
};

/// Guillou-Marin: sigma(X) - e(X,F) = 2 beta mod 16. Contradiction when
/// the forced beta is outside beta_set. Throws OddDifference.
GmCheck guillou_marin_check(std::int64_t sigma, std::int64_t e,
                            const std::set<std::uint8_t>& beta_set);

/// Yamada: (e + 2 chi) mod 4.
std::uint8_t yamada_residue(std::int64_t e, std::int64_t chi);
bool yamada_consistent(std::int64_t e, std::int64_t chi, std::uint8_t q_class);

/// -(m+1)^2 mod 8 for odd m; always lands in {0, 4}.
std::uint8_t ellipsoid_gm_residue(std::int64_t m);

// Built-in forms for the standard RP2 and Klein bottle in CP2.
QuadraticForm rp2_form();
QuadraticForm klein_form();
std::vector<std::vector<std::uint8_t>> rp2_phi_choices();
std::vector<std::vector<std::uint8_t>> klein_phi_choices();

} // namespace ovalbound

#endif
