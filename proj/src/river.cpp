// riverlink: implementation of river words, walks, and river-form
// enumeration.

#include "riverlink/river.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace riverlink {

namespace {

constexpr std::size_t kWalkCap = 10'000'000;

Pibqf sflip(const Pibqf& q) { return Pibqf{q.c, -q.b, q.a}; }

// KMP-based minimal period of the cyclic word represented by s.
std::size_t minimal_period(const std::vector<std::uint8_t>& s) {
  std::size_t n = s.size();
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t j = pi[i - 1];
    while (j > 0 && s[i] != s[j]) j = pi[j - 1];
    if (s[i] == s[j]) ++j;
    pi[i] = j;
  }
  std::size_t p = n - pi[n - 1];
  return (n % p == 0) ? p : n;
}

// Booth's least-rotation algorithm under the letter order R < L (run on a
// complemented copy so that R maps to the smaller symbol).
std::size_t canonical_rotation_index(const std::vector<std::uint8_t>& s) {
  std::size_t n = s.size();
  std::vector<std::uint8_t> ss(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) ss[i] = 1 - s[i % n];
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    std::uint8_t sj = ss[j];
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != ss[k + static_cast<std::size_t>(i) + 1]) {
      if (sj < ss[k + static_cast<std::size_t>(i) + 1]) {
        k = j - static_cast<std::size_t>(i) - 1;
      }
      i = f[i];
    }
    if (i == -1 && sj != ss[k]) {
      if (sj < ss[k]) k = j;
      f[j - k] = -1;
    } else if (i == -1) {
      f[j - k] = 0;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k;
}

}  // namespace

RiverSequence RiverSequence::from_bits(std::vector<std::uint8_t> bits) {
  if (bits.empty()) {
    throw std::invalid_argument("river word must be nonempty");
  }
  bool has0 = false, has1 = false;
  for (std::uint8_t b : bits) {
    if (b > 1) {
      throw std::invalid_argument("river word bits must be 0 or 1");
    }
    (b ? has1 : has0) = true;
  }
  if (!has0 || !has1) {
    throw std::invalid_argument(
        "river word must contain both letters R and L");
  }
  bits.resize(minimal_period(bits));
  std::size_t k = canonical_rotation_index(bits);
  std::rotate(bits.begin(),
              bits.begin() + static_cast<std::ptrdiff_t>(k), bits.end());
  RiverSequence out;
  out.bits_ = std::move(bits);
  return out;
}

RiverSequence RiverSequence::from_string(std::string_view word) {
  std::vector<std::uint8_t> bits;
  bits.reserve(word.size());
  for (char ch : word) {
    if (ch == 'R') {
      bits.push_back(1);
    } else if (ch == 'L') {
      bits.push_back(0);
    } else {
      throw std::invalid_argument(
          "river word strings use only the letters R and L");
    }
  }
  return from_bits(std::move(bits));
}

std::string RiverSequence::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (std::uint8_t b : bits_) out.push_back(b ? 'R' : 'L');
  return out;
}

RiverSequence river_of(const Pibqf& q) {
  validate(q);
  Integer d = discriminant(q);
  PeriodicCF cf = cf_quadratic(-q.b, 2 * q.a, d);
  // Parity rule: continued-fraction digit s+k contributes a_{s+k} copies of
  // R when s+k is odd and of L when even, over the smallest even period p.
  std::ptrdiff_t s = static_cast<std::ptrdiff_t>(cf.preperiod.size()) - 1;
  std::size_t per = cf.period.size();
  std::size_t p = (per % 2 == 1) ? 2 * per : per;
  Integer total = 0;
  for (std::size_t k = 1; k <= p; ++k) total += cf.period[(k - 1) % per];
  if (total > (Integer(1) << 31)) {
    throw std::length_error("river word longer than 2^31 letters");
  }
  std::vector<std::uint8_t> bits;
  bits.reserve(total.convert_to<std::size_t>());
  for (std::size_t k = 1; k <= p; ++k) {
    auto bit = static_cast<std::uint8_t>(
        ((s + static_cast<std::ptrdiff_t>(k)) % 2 + 2) % 2);
    auto count = cf.period[(k - 1) % per].convert_to<std::size_t>();
    bits.insert(bits.end(), count, bit);
  }
  return RiverSequence::from_bits(std::move(bits));
}

UniModularMatrix river_automorph(const RiverSequence& seq,
                                 std::size_t anchor) {
  const std::vector<std::uint8_t>& bits = seq.bits();
  std::size_t n = bits.size();
  anchor %= n;
  UniModularMatrix m = identity_matrix();
  for (std::size_t i = 0; i < n; ++i) {
    m = m * (bits[(anchor + i) % n] ? mat_R() : mat_L());
  }
  return m;
}

RiverSequence river_reverse(const RiverSequence& seq) {
  std::vector<std::uint8_t> bits(seq.bits().rbegin(), seq.bits().rend());
  for (std::uint8_t& b : bits) b = static_cast<std::uint8_t>(1 - b);
  return RiverSequence::from_bits(std::move(bits));
}

bool is_reciprocal_river(const RiverSequence& seq) {
  return seq == river_reverse(seq);
}

UniModularMatrix RiverWalk::prefix(std::size_t k) const {
  if (k > word.size()) {
    throw std::invalid_argument("prefix length exceeds the river period");
  }
  UniModularMatrix m = identity_matrix();
  for (std::size_t i = 0; i < k; ++i) {
    m = m * (word[i] ? mat_R() : mat_L());
  }
  return m;
}

RiverWalk river_walk(const Pibqf& q) {
  ReductionResult red = reduce(q);
  RiverWalk out;
  if (red.form.a > 0) {
    out.anchor = red.form;
    out.to_anchor = red.witness;
  } else {
    out.anchor = sflip(red.form);
    out.to_anchor = red.witness * mat_S();
  }
  Pibqf t = out.anchor;
  for (std::size_t i = 0; i < kWalkCap; ++i) {
    out.edge_forms.push_back(t);
    bool right = t.a + t.b + t.c > 0;
    out.word.push_back(right ? 1 : 0);
    t = act(right ? mat_R() : mat_L(), t);
    if (t == out.anchor) return out;
  }
  throw std::logic_error("river_walk: walk failed to close");
}

std::vector<Pibqf> river_forms(const Pibqf& q) {
  RiverWalk walk = river_walk(q);
  std::vector<Pibqf> out;
  out.reserve(walk.edge_forms.size());
  for (const Pibqf& f : walk.edge_forms) {
    out.push_back(f.b >= 0 ? f : sflip(f));
  }
  return out;
}

}  // namespace riverlink
