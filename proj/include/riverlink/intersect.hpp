// riverlink: combinatorial intersection engines over river words — the
// naive pairwise scan, the fast refinement algorithm, component counts, and
// full intersection numbers of strongly inequivalent classes.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "riverlink/river.hpp"

namespace riverlink {

/// The four behaviour counts of crossings between two closed geodesics.
/// Always rs == ls and ro == lo, so the signed total vanishes and the full
/// intersection number is 2 * (rs + ro).
struct IntersectionComponents {
  std::int64_t rs = 0;
  std::int64_t ro = 0;
  std::int64_t ls = 0;
  std::int64_t lo = 0;
};

/// The right-same count by direct scanning: over all cyclic index pairs
/// (i, j) with x_i = L and y_j = R, advance k = 1, 2, ... until
/// x_{i+k} != y_{j+k} and count the pair when x_{i+k} = R. The divergence
/// index is bounded by period(x) + period(y).
std::int64_t int_rs_naive(const RiverSequence& r1, const RiverSequence& r2);

/// The same count by branchwise refinement of common-subsequence index
/// sets; equals int_rs_naive on every input, typically much faster for
/// long words. Runs iteratively with an explicit stack.
std::int64_t int_rs_fast(const RiverSequence& r1, const RiverSequence& r2);

/// The counted (i, j) index pairs of the naive scan over raw cyclic words
/// (bits: 1 = R, 0 = L), in scan order. Indices refer to the given
/// rotations, which lets callers anchor them to concrete river edges.
/// Throws std::invalid_argument if either word is empty or single-lettered.
std::vector<std::pair<std::size_t, std::size_t>> rs_scan_pairs(
    const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y);

/// All four behaviour counts for strongly inequivalent classes:
/// rs from the two river words, ro from the reciprocal partner's word
/// scanned against the first, and the mirrored equalities ls = rs, lo = ro.
/// Throws std::domain_error when the classes are not strongly inequivalent
/// and std::invalid_argument for invalid forms.
IntersectionComponents components(const Pibqf& q1, const Pibqf& q2);

/// The full intersection number 2 * (rs + ro). Even, at least 4, at most
/// the product of the river periods, and divisible by 4 when either class
/// is reciprocal. Errors as in components.
std::int64_t intersection_number(const Pibqf& q1, const Pibqf& q2);

}  // namespace riverlink
