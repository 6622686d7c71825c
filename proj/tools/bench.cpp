// Compares the serial reference implementations against the OpenMP kernels
// (Brown invariant Gauss sum, batch scheme checking) and reports timings.

#include "ovalbound/quadform.hpp"
#include "ovalbound/scheme.hpp"
#include "ovalbound/verdict.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace ovalbound;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

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

QuadraticForm random_nondegenerate_form(unsigned rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
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
    if (z2_rank(q.bilinear) != rank) continue;
    q.phi.resize(rank);
    for (unsigned i = 0; i < rank; ++i)
      q.phi[i] = static_cast<std::uint8_t>((((q.bilinear[i] >> i) & 1) + 2 * (rng() & 1)) & 3);
    return q;
  }
}

} // namespace

int main(int argc, char** argv) {
  unsigned rank = 22;
  std::int64_t ovals = 11;
  std::int64_t degree = 9;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      rank = 14;
      ovals = 8;
    } else if (std::strcmp(argv[i], "--rank") == 0 && i + 1 < argc) {
      rank = static_cast<unsigned>(std::atoi(argv[++i]));
    } else if (std::strcmp(argv[i], "--ovals") == 0 && i + 1 < argc) {
      ovals = std::atoll(argv[++i]);
    } else if (std::strcmp(argv[i], "--degree") == 0 && i + 1 < argc) {
      degree = std::atoll(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--quick] [--rank N] [--ovals N] [--degree M]\n", argv[0]);
      return 2;
    }
  }

#ifdef _OPENMP
  std::printf("openmp: %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("openmp: not compiled in\n");
#endif

  // Brown invariant: 2^rank Gauss-sum terms
  QuadraticForm q = random_nondegenerate_form(rank, 20240917);
  auto t0 = Clock::now();
  BrownResult serial = brown_serial(q);
  double serial_ms = ms_since(t0);
  t0 = Clock::now();
  BrownResult parallel = brown(q);
  double parallel_ms = ms_since(t0);
  bool brown_ok = serial.beta == parallel.beta && serial.sum == parallel.sum;
  std::printf("brown rank %-2u     serial %10.2f ms   parallel %10.2f ms   x%.2f   %s\n", rank,
              serial_ms, parallel_ms, serial_ms / parallel_ms, brown_ok ? "match" : "MISMATCH");

  // batch verdicts over every scheme with the given oval count
  std::vector<RealScheme> schemes = enumerate_schemes(ovals, Ambient::ProjectivePlaneOdd);
  CurveSpec spec;
  spec.ambient = CurveAmbient::CP2;
  spec.degree = degree;
  t0 = Clock::now();
  std::vector<Verdict> ref = check_batch_serial(spec, schemes);
  serial_ms = ms_since(t0);
  t0 = Clock::now();
  std::vector<Verdict> par = check_batch(spec, schemes);
  parallel_ms = ms_since(t0);
  bool batch_ok = ref.size() == par.size();
  std::size_t passing = 0;
  for (std::size_t i = 0; i < ref.size() && batch_ok; ++i) {
    batch_ok = ref[i].pass == par[i].pass && ref[i].scheme_text == par[i].scheme_text;
    passing += ref[i].pass;
  }
  std::printf("check %-6zu x m=%lld serial %8.2f ms   parallel %10.2f ms   x%.2f   %s (%zu pass)\n",
              schemes.size(), static_cast<long long>(degree), serial_ms, parallel_ms,
              serial_ms / parallel_ms, batch_ok ? "match" : "MISMATCH", passing);

  return brown_ok && batch_ok ? 0 : 1;
}
