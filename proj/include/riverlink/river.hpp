// riverlink: Conway-topograph river words — construction from continued
// fractions, anchored walks with edge forms, automorph reconstruction,
// reciprocal reversal, and river-form enumeration.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "riverlink/forms.hpp"

namespace riverlink {

/// A cyclic word over {L, R} stored at minimal period in its canonical
/// rotation (lexicographically least with R < L), so equality of classes
/// becomes plain equality of words. Bits: 1 = R, 0 = L.
class RiverSequence {
 public:
  /// Builds from raw bits (1 = R, 0 = L). Reduces to the minimal period and
  /// canonical rotation. Throws std::invalid_argument if the word is empty,
  /// contains a value other than 0/1, or lacks one of the two letters.
  static RiverSequence from_bits(std::vector<std::uint8_t> bits);

  /// Builds from a string over {R, L}; same normalization and errors.
  static RiverSequence from_string(std::string_view word);

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::size_t period() const { return bits_.size(); }

  /// The word as a string of 'R' and 'L'.
  std::string str() const;

  friend bool operator==(const RiverSequence& x, const RiverSequence& y) {
    return x.bits_ == y.bits_;
  }
  friend bool operator!=(const RiverSequence& x, const RiverSequence& y) {
    return !(x == y);
  }

 private:
  RiverSequence() = default;
  std::vector<std::uint8_t> bits_;
};

/// The river word of q's class, built from the periodic continued fraction
/// of the first root (-B + sqrt(D)) / (2A). A class invariant: equivalent
/// forms give equal words. Throws std::length_error if the word would
/// exceed 2^31 letters.
RiverSequence river_of(const Pibqf& q);

/// Product of the R/L generator matrices over one period of seq, starting
/// at rotation index `anchor` (taken modulo the period). Hyperbolic with
/// |trace| = pell_minimal(D).t for the discriminant the word belongs to.
UniModularMatrix river_automorph(const RiverSequence& seq,
                                 std::size_t anchor = 0);

/// The river word of the negated (reciprocal partner) class: letters
/// complemented and the word reversed, then re-canonicalized.
RiverSequence river_reverse(const RiverSequence& seq);

/// True iff the word equals its own reversal-complement, i.e. the class is
/// equivalent to its negation.
bool is_reciprocal_river(const RiverSequence& seq);

/// One full river period anchored at a concrete starting edge, with the
/// matrix carrying the input form onto the anchor and the travel form at
/// every edge. Used to realize combinatorial crossings as explicit forms.
struct RiverWalk {
  Pibqf anchor;                // travel form (A > 0) at the starting edge
  UniModularMatrix to_anchor;  // act(to_anchor, input) == anchor
  std::vector<std::uint8_t> word;  // letter leaving edge k (1 = R, 0 = L)
  std::vector<Pibqf> edge_forms;   // travel form at edge k; [0] == anchor

  /// Product of the first k letters; act(prefix(k), anchor) is the travel
  /// form at edge k, and prefix(period) is the anchor's automorph.
  UniModularMatrix prefix(std::size_t k) const;
};

/// Walks one period of q's river starting at the reduction of q.
RiverWalk river_walk(const Pibqf& q);

/// The forms with A*C < 0 along one river period in flow direction, one per
/// edge, starting from reduce(q). Each is normalized to B >= 0 (the edge's
/// other orientation otherwise); ties B = 0 keep the travel orientation.
std::vector<Pibqf> river_forms(const Pibqf& q);

}  // namespace riverlink
