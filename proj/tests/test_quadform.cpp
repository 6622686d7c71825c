#include "ovalbound/quadform.hpp"
#include "ovalbound/errors.hpp"

#include <doctest.h>

#include <random>

using namespace ovalbound;

namespace {

unsigned z2_rank(std::vector<std::uint32_t> rows) {
  unsigned rank = 0;
  for (unsigned col = 0; col < 32 && rank < rows.size(); ++col) {
    std::uint32_t bit = 1u << col;
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

QuadraticForm random_nondegenerate_form(std::mt19937_64& rng, unsigned rank) {
  for (;;) {
    QuadraticForm q;
    q.rank = rank;
    q.bilinear.assign(rank, 0);
    for (unsigned i = 0; i < rank; ++i)
      for (unsigned j = 0; j <= i; ++j)
        if (rng() & 1) {
          q.bilinear[i] |= 1u << j;
          q.bilinear[j] |= 1u << i;
        }
    if (rank > 0 && z2_rank(q.bilinear) != rank) continue;
    q.phi.resize(rank);
    for (unsigned i = 0; i < rank; ++i)
      q.phi[i] = static_cast<std::uint8_t>((((q.bilinear[i] >> i) & 1) + 2 * (rng() & 1)) & 3);
    return q;
  }
}

QuadraticForm direct_sum(const QuadraticForm& a, const QuadraticForm& b) {
  QuadraticForm q;
  q.rank = a.rank + b.rank;
  for (unsigned i = 0; i < a.rank; ++i) q.bilinear.push_back(a.bilinear[i]);
  for (unsigned i = 0; i < b.rank; ++i) q.bilinear.push_back(b.bilinear[i] << a.rank);
  q.phi = a.phi;
  q.phi.insert(q.phi.end(), b.phi.begin(), b.phi.end());
  return q;
}

// transport the form through an invertible Z/2 matrix (columns = new basis)
QuadraticForm change_basis(const QuadraticForm& q, const std::vector<std::uint32_t>& cols) {
  QuadraticForm out;
  out.rank = q.rank;
  out.bilinear.assign(q.rank, 0);
  out.phi.resize(q.rank);
  for (unsigned i = 0; i < q.rank; ++i) {
    out.phi[i] = evaluate_form(q, cols[i]);
    for (unsigned j = 0; j < q.rank; ++j)
      if (pairing(q, cols[i], cols[j])) out.bilinear[i] |= 1u << j;
  }
  return out;
}

std::vector<std::uint32_t> random_invertible(std::mt19937_64& rng, unsigned rank) {
  for (;;) {
    std::vector<std::uint32_t> cols(rank);
    std::uint32_t mask = (rank >= 32) ? ~0u : ((1u << rank) - 1);
    for (auto& c : cols) c = static_cast<std::uint32_t>(rng()) & mask;
    if (rank == 0 || z2_rank(cols) == rank) return cols;
  }
}

} // namespace

TEST_CASE("form evaluation by polarization") {
  QuadraticForm klein = klein_form();
  CHECK(evaluate_form(klein, 0b00) == 0);
  CHECK(evaluate_form(klein, 0b01) == 1);       // phi(a)
  CHECK(evaluate_form(klein, 0b10) == 0);       // phi(b)
  CHECK(evaluate_form(klein, 0b11) == 3);       // phi(a)+phi(b)+2 a.b
  CHECK_THROWS_AS(evaluate_form(klein, 0b100), DimensionMismatch);
}

TEST_CASE("polarization identity holds exhaustively") {
  std::mt19937_64 rng(101);
  for (unsigned rank = 0; rank <= 8; ++rank) {
    QuadraticForm q = random_nondegenerate_form(rng, rank);
    const std::uint32_t n = 1u << rank;
    for (std::uint32_t x = 0; x < n; ++x) {
      CHECK(evaluate_form(q, x) % 2 == pairing(q, x, x));
      for (std::uint32_t y = 0; y < n; ++y)
        CHECK(evaluate_form(q, x ^ y) ==
              (evaluate_form(q, x) + evaluate_form(q, y) + 2 * pairing(q, x, y)) % 4);
    }
  }
}

TEST_CASE("form validation") {
  QuadraticForm bad_parity{1, {0b1}, {2}};
  CHECK_THROWS_AS(bad_parity.validate(), ParityViolation);
  QuadraticForm asym{2, {0b10, 0b00}, {0, 0}};
  CHECK_THROWS_AS(asym.validate(), DimensionMismatch);
  CHECK_NOTHROW(klein_form().validate());
}

TEST_CASE("brown invariants of the small standard forms") {
  CHECK(brown(QuadraticForm{0, {}, {}}).beta == 0);

  QuadraticForm klein = klein_form();
  BrownResult k10 = brown(klein);
  CHECK(k10.beta == 0);
  CHECK(k10.sum == GaussSum{2, 0});

  klein.phi = {3, 2};
  BrownResult k32 = brown(klein);
  CHECK(k32.beta == 6);
  CHECK(k32.sum == GaussSum{0, -2});

  BrownResult rp2 = brown(rp2_form());
  CHECK(rp2.beta == 1);
  CHECK(rp2.sum == GaussSum{1, 1});

  QuadraticForm hyperbolic{2, {0b10, 0b01}, {0, 0}};
  CHECK(brown(hyperbolic).beta == 0);
  CHECK(brown(hyperbolic).sum == GaussSum{2, 0});
}

TEST_CASE("degenerate forms are rejected by the gauss-sum pattern") {
  QuadraticForm rad0{1, {0}, {0}};
  CHECK_THROWS_AS(brown(rad0), DegenerateForm);
  QuadraticForm rad2{1, {0}, {2}};
  CHECK_THROWS_AS(brown(rad2), DegenerateForm);
}

TEST_CASE("gauss sum magnitude and serial/parallel agreement") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 300; ++trial) {
    unsigned rank = 1 + static_cast<unsigned>(rng() % 12);
    QuadraticForm q = random_nondegenerate_form(rng, rank);
    BrownResult ref = brown_serial(q);
    BrownResult fast = brown(q);
    CHECK(ref.beta == fast.beta);
    CHECK(ref.sum == fast.sum);
    // |sum|^2 = 2^rank
    CHECK(ref.sum.re * ref.sum.re + ref.sum.im * ref.sum.im == std::int64_t{1} << rank);
  }
  // at least one case over the parallel threshold
  QuadraticForm big = random_nondegenerate_form(rng, 19);
  BrownResult ref = brown_serial(big);
  BrownResult fast = brown(big);
  CHECK(ref.beta == fast.beta);
  CHECK(ref.sum == fast.sum);
}

TEST_CASE("direct sums add brown invariants mod 8") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 300; ++trial) {
    QuadraticForm a = random_nondegenerate_form(rng, 1 + static_cast<unsigned>(rng() % 6));
    QuadraticForm b = random_nondegenerate_form(rng, 1 + static_cast<unsigned>(rng() % 6));
    CHECK(brown(direct_sum(a, b)).beta == (brown(a).beta + brown(b).beta) % 8);
  }
}

TEST_CASE("brown invariant survives any change of basis") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 300; ++trial) {
    unsigned rank = 1 + static_cast<unsigned>(rng() % 8);
    QuadraticForm q = random_nondegenerate_form(rng, rank);
    QuadraticForm moved = change_basis(q, random_invertible(rng, rank));
    CHECK_NOTHROW(moved.validate());
    CHECK(brown(moved).beta == brown(q).beta);
  }
}

TEST_CASE("beta sets of the standard surfaces") {
  CHECK(enumerate_betas(klein_form().bilinear, klein_phi_choices()) ==
        std::set<std::uint8_t>{0, 2, 6});
  CHECK(enumerate_betas(rp2_form().bilinear, rp2_phi_choices()) ==
        std::set<std::uint8_t>{1, 7});
  CHECK(enumerate_betas({0b10, 0b01}, {{0}, {0}}) == std::set<std::uint8_t>{0});
  CHECK_THROWS_AS(enumerate_betas({0b1}, {{0, 2}}), ParityViolation);
}

TEST_CASE("guillou-marin congruence checks") {
  GmCheck g7 = guillou_marin_check(1, 7, {1, 7});
  CHECK(g7.contradiction);
  CHECK(g7.required == 5);

  GmCheck g9 = guillou_marin_check(1, 9, {0, 2, 6});
  CHECK(g9.contradiction);
  CHECK(g9.required == 4);

  GmCheck ok = guillou_marin_check(0, 0, {0});
  CHECK_FALSE(ok.contradiction);
  CHECK(ok.required == 0);

  CHECK_THROWS_AS(guillou_marin_check(1, 2, {0}), OddDifference);
}

TEST_CASE("yamada residues") {
  CHECK(yamada_residue(25, 0) == 1);
  CHECK(yamada_consistent(25, -4, 1));
  CHECK(yamada_residue(3, 1) == 1);
  CHECK(yamada_consistent(3, 1, 1));
  CHECK(yamada_residue(0, 0) == 0);
  CHECK_FALSE(yamada_consistent(2, 0, 1));
}

TEST_CASE("ellipsoid guillou-marin residue") {
  CHECK(ellipsoid_gm_residue(1) == 4);
  CHECK(ellipsoid_gm_residue(3) == 0);
  CHECK(ellipsoid_gm_residue(5) == 4);
  for (std::int64_t m = 1; m <= 99; m += 2) {
    std::uint8_t r = ellipsoid_gm_residue(m);
    CHECK((r == 0 || r == 4));
  }
  CHECK_THROWS_AS(ellipsoid_gm_residue(2), ParityError);
}
