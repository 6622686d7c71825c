#include "ovalbound/quadform.hpp"
#include "ovalbound/errors.hpp"

#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ovalbound {

namespace {

constexpr unsigned kMaxRank = 30;
constexpr unsigned kParallelRankThreshold = 18;

void accumulate(GaussSum& acc, std::uint8_t phi) {
  switch (phi & 3) {
    case 0: ++acc.re; break;
    case 1: ++acc.im; break;
    case 2: --acc.re; break;
    case 3: --acc.im; break;
  }
}

std::uint8_t extract_beta(const GaussSum& sum, unsigned rank) {
  if (rank % 2 == 0) {
    const std::int64_t half = std::int64_t{1} << (rank / 2);
    if (sum == GaussSum{half, 0}) return 0;
    if (sum == GaussSum{0, half}) return 2;
    if (sum == GaussSum{-half, 0}) return 4;
    if (sum == GaussSum{0, -half}) return 6;
  } else {
    const std::int64_t q = std::int64_t{1} << (rank / 2);
    if (sum == GaussSum{q, q}) return 1;
    if (sum == GaussSum{-q, q}) return 3;
    if (sum == GaussSum{-q, -q}) return 5;
    if (sum == GaussSum{q, -q}) return 7;
  }
  throw DegenerateForm("Gauss sum (" + std::to_string(sum.re) + ", " + std::to_string(sum.im) +
                       ") matches no eighth-root pattern at rank " + std::to_string(rank));
}

// Subsets visited in Gray-code order; phi updated per single-bit flip.
// The flip rule phi(x^e_i) = phi(x) + phi_i + 2 B(x, e_i) holds in both
// directions because phi_i and B[i][i] share parity.
GaussSum gray_walk(const QuadraticForm& q, std::uint64_t k_begin, std::uint64_t k_end) {
  GaussSum acc;
  std::uint32_t x = static_cast<std::uint32_t>(k_begin ^ (k_begin >> 1));
  std::uint8_t phi = evaluate_form(q, x);
  accumulate(acc, phi);
  for (std::uint64_t k = k_begin + 1; k < k_end; ++k) {
    unsigned bit = std::countr_zero(k);
    phi = static_cast<std::uint8_t>(
        (phi + q.phi[bit] + 2 * (std::popcount(q.bilinear[bit] & x) & 1)) & 3);
    x ^= std::uint32_t{1} << bit;
    accumulate(acc, phi);
  }
  return acc;
}

} // namespace

void QuadraticForm::validate() const {
  if (rank > kMaxRank)
    throw DimensionMismatch("rank " + std::to_string(rank) + " exceeds the supported " +
                            std::to_string(kMaxRank));
  if (bilinear.size() != rank || phi.size() != rank)
    throw DimensionMismatch("bilinear/phi sizes do not match the rank");
  const std::uint32_t mask = rank == 32 ? ~0u : (std::uint32_t{1} << rank) - 1;
  for (unsigned i = 0; i < rank; ++i) {
    if (bilinear[i] & ~mask)
      throw DimensionMismatch("bilinear row " + std::to_string(i) + " has out-of-range bits");
    if (phi[i] > 3) throw OutOfDomain("phi values live in Z/4");
    if ((phi[i] & 1) != ((bilinear[i] >> i) & 1))
      throw ParityViolation("phi(e_" + std::to_string(i) + ") must match B[i][i] mod 2");
    for (unsigned j = 0; j < i; ++j)
      if (((bilinear[i] >> j) & 1) != ((bilinear[j] >> i) & 1))
        throw DimensionMismatch("bilinear form is not symmetric");
  }
}

std::uint8_t evaluate_form(const QuadraticForm& q, std::uint32_t x) {
  const std::uint32_t mask = q.rank >= 32 ? ~0u : (std::uint32_t{1} << q.rank) - 1;
  if (x & ~mask) throw DimensionMismatch("vector has bits outside the basis");
  unsigned total = 0;
  std::uint32_t rest = x;
  while (rest) {
    unsigned j = std::countr_zero(rest);
    rest &= rest - 1;
    std::uint32_t lower = x & ((std::uint32_t{1} << j) - 1);
    total += q.phi[j] + 2 * (std::popcount(q.bilinear[j] & lower) & 1);
  }
  return static_cast<std::uint8_t>(total & 3);
}

std::uint8_t pairing(const QuadraticForm& q, std::uint32_t x, std::uint32_t y) {
  unsigned total = 0;
  std::uint32_t rest = x;
  while (rest) {
    unsigned j = std::countr_zero(rest);
    rest &= rest - 1;
    total += std::popcount(q.bilinear[j] & y);
  }
  return static_cast<std::uint8_t>(total & 1);
}

BrownResult brown_serial(const QuadraticForm& q) {
  q.validate();
  GaussSum acc;
  const std::uint64_t n = std::uint64_t{1} << q.rank;
  for (std::uint64_t x = 0; x < n; ++x)
    accumulate(acc, evaluate_form(q, static_cast<std::uint32_t>(x)));
  return {extract_beta(acc, q.rank), acc};
}

BrownResult brown(const QuadraticForm& q) {
  q.validate();
  const std::uint64_t n = std::uint64_t{1} << q.rank;
  GaussSum acc;
#ifdef _OPENMP
  if (q.rank >= kParallelRankThreshold) {
    std::int64_t re = 0, im = 0;
#pragma omp parallel reduction(+ : re, im)
    {
      const int threads = omp_get_num_threads();
      const int tid = omp_get_thread_num();
      const std::uint64_t chunk = (n + threads - 1) / threads;
      const std::uint64_t lo = std::min<std::uint64_t>(n, chunk * tid);
      const std::uint64_t hi = std::min<std::uint64_t>(n, lo + chunk);
      if (lo < hi) {
        GaussSum local = gray_walk(q, lo, hi);
        re += local.re;
        im += local.im;
      }
    }
    acc = {re, im};
    return {extract_beta(acc, q.rank), acc};
  }
#endif
  acc = gray_walk(q, 0, n);
  return {extract_beta(acc, q.rank), acc};
}

std::set<std::uint8_t> enumerate_betas(const std::vector<std::uint32_t>& bilinear,
                                       const std::vector<std::vector<std::uint8_t>>& phi_choices) {
  QuadraticForm q;
  q.rank = static_cast<unsigned>(bilinear.size());
  q.bilinear = bilinear;
  q.phi.assign(q.rank, 0);
  if (phi_choices.size() != q.rank)
    throw DimensionMismatch("one choice list per basis vector is required");

  std::uint64_t combinations = 1;
  for (unsigned i = 0; i < q.rank; ++i) {
    if (phi_choices[i].empty()) throw OutOfDomain("empty phi choice list");
    for (std::uint8_t v : phi_choices[i]) {
      if (v > 3) throw OutOfDomain("phi values live in Z/4");
      if ((v & 1) != ((bilinear[i] >> i) & 1))
        throw ParityViolation("allowed residue " + std::to_string(v) + " at index " +
                              std::to_string(i) + " breaks the refinement parity");
    }
    combinations *= phi_choices[i].size();
    if (combinations > (std::uint64_t{1} << 20))
      throw OutOfDomain("too many phi combinations to enumerate");
  }

  std::set<std::uint8_t> betas;
  std::vector<std::size_t> idx(q.rank, 0);
  for (;;) {
    for (unsigned i = 0; i < q.rank; ++i) q.phi[i] = phi_choices[i][idx[i]];
    betas.insert(brown(q).beta);
    unsigned i = 0;
    while (i < q.rank && ++idx[i] == phi_choices[i].size()) idx[i++] = 0;
    if (i == q.rank) break;
    if (q.rank == 0) break;
  }
  return betas;
}

GmCheck guillou_marin_check(std::int64_t sigma, std::int64_t e,
                            const std::set<std::uint8_t>& beta_set) {
  std::int64_t diff = sigma - e;
  if (diff % 2 != 0)
    throw OddDifference("sigma - e must be even, got " + std::to_string(diff));
  std::uint8_t required = static_cast<std::uint8_t>(((diff / 2) % 8 + 8) % 8);
  return {beta_set.find(required) == beta_set.end(), required};
}

std::uint8_t yamada_residue(std::int64_t e, std::int64_t chi) {
  return static_cast<std::uint8_t>(((e + 2 * chi) % 4 + 4) % 4);
}

bool yamada_consistent(std::int64_t e, std::int64_t chi, std::uint8_t q_class) {
  return yamada_residue(e, chi) == (q_class & 3);
}

std::uint8_t ellipsoid_gm_residue(std::int64_t m) {
  if (m % 2 == 0) throw ParityError("ellipsoid_gm_residue: degree must be odd");
  std::int64_t v = -(m + 1) * (m + 1);
  return static_cast<std::uint8_t>((v % 8 + 8) % 8);
}

QuadraticForm rp2_form() { return {1, {0b1}, {1}}; }

QuadraticForm klein_form() { return {2, {0b11, 0b01}, {1, 0}}; }

std::vector<std::vector<std::uint8_t>> rp2_phi_choices() { return {{1, 3}}; }

std::vector<std::vector<std::uint8_t>> klein_phi_choices() { return {{1, 3}, {0, 2}}; }

} // namespace ovalbound
