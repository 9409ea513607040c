// riverlink: implementation of the combinatorial intersection engines.

#include "riverlink/intersect.hpp"

#include <stdexcept>

namespace riverlink {

namespace {

void check_word(const std::vector<std::uint8_t>& w) {
  bool h0 = false, h1 = false;
  for (std::uint8_t b : w) (b ? h1 : h0) = true;
  if (!h0 || !h1) {
    throw std::invalid_argument(
        "scan words must be nonempty and contain both letters");
  }
}

// Core of the naive scan: for each (i, j) with x_i = L, y_j = R, find the
// first divergence k >= 1 of the cyclic suffixes and count when x wins with
// an R. Divergence occurs within period(x) + period(y) steps for words that
// are not powers of a common word, which canonical river words never are.
template <class OnPair>
std::int64_t scan_words(const std::vector<std::uint8_t>& x,
                        const std::vector<std::uint8_t>& y, OnPair&& on_pair) {
  const std::size_t m = x.size(), n = y.size();
  std::int64_t count = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] != 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] != 1) continue;
      for (std::size_t k = 1;; ++k) {
        if (k > m + n) {
          throw std::logic_error(
              "rs scan: no divergence within the period bound");
        }
        std::uint8_t xv = x[(i + k) % m];
        std::uint8_t yv = y[(j + k) % n];
        if (xv != yv) {
          if (xv == 1) {
            ++count;
            on_pair(i, j);
          }
          break;
        }
      }
    }
  }
  return count;
}

}  // namespace

std::int64_t int_rs_naive(const RiverSequence& r1, const RiverSequence& r2) {
  return scan_words(r1.bits(), r2.bits(),
                    [](std::size_t, std::size_t) {});
}

std::vector<std::pair<std::size_t, std::size_t>> rs_scan_pairs(
    const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y) {
  check_word(x);
  check_word(y);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  scan_words(x, y, [&](std::size_t i, std::size_t j) {
    out.emplace_back(i, j);
  });
  return out;
}

std::int64_t int_rs_fast(const RiverSequence& r1, const RiverSequence& r2) {
  const std::vector<std::uint8_t>& x = r1.bits();
  const std::vector<std::uint8_t>& y = r2.bits();
  const std::size_t m = x.size(), n = y.size();
  struct Level {
    std::vector<std::uint32_t> t1, t2;
    int next_branch = 0;
  };
  // One reusable buffer pair per depth; the refinement depth is below
  // m + n, since each level pins one more letter of a common subsequence.
  const std::size_t max_depth = m + n + 2;
  std::vector<Level> levels(max_depth);
  Level& root = levels[0];
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] == 0) root.t1.push_back(static_cast<std::uint32_t>((i + 1) % m));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (y[j] == 1) root.t2.push_back(static_cast<std::uint32_t>((j + 1) % n));
  }
  auto contrib = [&](const Level& lv) {
    std::int64_t c1 = 0, c2 = 0;
    for (std::uint32_t t : lv.t1) c1 += x[t] == 1;
    for (std::uint32_t t : lv.t2) c2 += y[t] == 0;
    return c1 * c2;
  };
  std::int64_t total = contrib(root);
  std::size_t d = 0;
  for (;;) {
    if (levels[d].next_branch > 1) {
      if (d == 0) break;
      --d;
      continue;
    }
    const int b = levels[d].next_branch++;
    if (d + 1 >= max_depth) {
      throw std::logic_error("rs fast: refinement depth bound exceeded");
    }
    Level& parent = levels[d];
    Level& child = levels[d + 1];
    child.t1.clear();
    child.t2.clear();
    for (std::uint32_t t : parent.t1) {
      if (x[t] == b) child.t1.push_back((t + 1) % m);
    }
    if (child.t1.empty()) continue;
    for (std::uint32_t t : parent.t2) {
      if (y[t] == b) child.t2.push_back((t + 1) % n);
    }
    if (child.t2.empty()) continue;
    child.next_branch = 0;
    total += contrib(child);
    ++d;
  }
  return total;
}

IntersectionComponents components(const Pibqf& q1, const Pibqf& q2) {
  validate(q1);
  validate(q2);
  if (!strongly_inequivalent(q1, q2)) {
    throw std::domain_error(
        "components requires strongly inequivalent classes");
  }
  RiverSequence w1 = river_of(q1);
  RiverSequence w2 = river_of(q2);
  RiverSequence w2m = river_of(-q2);
  std::int64_t rs = int_rs_fast(w1, w2);
  std::int64_t ro = int_rs_fast(w2m, w1);
  return IntersectionComponents{rs, ro, rs, ro};
}

std::int64_t intersection_number(const Pibqf& q1, const Pibqf& q2) {
  IntersectionComponents c = components(q1, q2);
  return 2 * (c.rs + c.ro);
}

}  // namespace riverlink
