// riverlink: batch studies — intersection loci along a fixed closed
// geodesic, angle histograms, the normalized C statistic, and the
// naive-vs-fast scan benchmark. All randomness comes from an explicit
// 64-bit splitmix generator so runs are reproducible from a seed.
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "riverlink/geometry.hpp"
#include "riverlink/grosszagier.hpp"

namespace riverlink {

/// Deterministic 64-bit generator (splitmix64): state advances by the
/// golden-gamma constant and is finalized by two xor-multiply rounds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  /// Next raw 64-bit value.
  std::uint64_t next();

  /// Uniform value in [0, n) by rejection (unbiased). Requires n >= 1.
  std::uint64_t below(std::uint64_t n);

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit();

 private:
  std::uint64_t state_;
};

/// Uniformly random valid discriminant in [lo, hi] (positive, 0 or 1 mod 4,
/// nonsquare), by rejection. Throws std::invalid_argument when the range
/// contains none.
Integer random_valid_discriminant(SplitMix64& rng, std::int64_t lo,
                                  std::int64_t hi);

/// Uniformly random fundamental discriminant in [lo, hi]; same contract.
Integer random_fundamental_discriminant(SplitMix64& rng, std::int64_t lo,
                                        std::int64_t hi);

/// Uniformly random class representative of discriminant d.
Pibqf random_class_rep(SplitMix64& rng, const Integer& d);

/// One realized crossing on the closed geodesic of a fixed form: the class
/// of discriminant D it comes from, the crossing record, and the position
/// along the geodesic. arc_distance duplicates record.arc_distance.
struct LocusSample {
  Pibqf partner_class;
  IntersectionRecord record;
  double arc_distance = 0.0;
};

/// All crossings of q's closed geodesic with the geodesics of every class
/// of discriminant D, realized as points with angles, signs, and arc
/// positions measured from `base` (default: the apex of q's semicircle).
/// The number of samples from each class equals the classwise intersection
/// number. Requires D != discriminant(q) (std::domain_error otherwise) and
/// a base point on the geodesic when given.
std::vector<LocusSample> intersection_locus(
    const Pibqf& q, const Integer& d,
    const std::optional<std::complex<double>>& base = std::nullopt);

/// One histogram bin over the angle interval [0, pi].
struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  double mass = 0.0;  // fraction of samples in [lo, hi); masses sum to 1
};

/// Equal-width histogram of the sample angles over [0, pi]. Bin masses are
/// sample fractions (the density height is mass / width). Empty input
/// yields an empty bin list. Requires bins >= 1.
std::vector<HistogramBin> angle_histogram(
    const std::vector<LocusSample>& samples, std::size_t bins);

/// The normalized intersection statistic of a discriminant pair.
struct CStat {
  Integer d1;
  Integer d2;
  std::int64_t int_total = 0;
  std::int64_t h1 = 0;
  std::int64_t h2 = 0;
  double r1 = 0.0;  // log(T + U*sqrt(D1)) for the minimal (T, U)
  double r2 = 0.0;
  double c = 0.0;   // int_total / (h1 * h2 * r1 * r2)
};

/// Computes the statistic, using the counting formula when the pair is
/// distinct, coprime, and fundamental, and the class-pair sum otherwise.
CStat c_statistic(const Integer& d1, const Integer& d2);

/// Seeded batch: draws `trials` pairs of distinct coprime fundamental
/// discriminants from the two ranges (redrawing until distinct and
/// coprime), then evaluates them. The draw order is fixed up front, so the
/// result is deterministic for a seed regardless of worker scheduling.
std::vector<CStat> c_statistic_batch(std::size_t trials, std::uint64_t seed,
                                     std::int64_t d1_lo, std::int64_t d1_hi,
                                     std::int64_t d2_lo, std::int64_t d2_hi);

/// Benchmark aggregates for one range pair.
struct BenchResult {
  std::int64_t d1_lo = 0, d1_hi = 0, d2_lo = 0, d2_hi = 0;
  double p1_avg = 0.0;       // mean river period, first form
  double p2_avg = 0.0;       // mean river period, second form
  double intrs_avg = 0.0;    // mean right-same count
  double t_river_ms = 0.0;   // mean time to build both rivers
  double t_naive_ms = 0.0;   // mean naive scan time, rivers precomputed
  double t_fast_ms = 0.0;    // mean fast scan time, rivers precomputed
};

/// Times the two scan engines on seeded random strongly inequivalent class
/// pairs with discriminants drawn from the given ranges. Counts (periods,
/// scan values) are reproducible from the seed; only timings vary.
/// Requires trials >= 1 and ranges containing valid discriminants.
BenchResult bench_compare(std::int64_t d1_lo, std::int64_t d1_hi,
                          std::int64_t d2_lo, std::int64_t d2_hi,
                          std::size_t trials, std::uint64_t seed);

}  // namespace riverlink
