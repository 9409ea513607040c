// riverlink: implementation of batch studies (locus, histogram, C
// statistic, benchmark) with reproducible seeding.

#include "riverlink/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "riverlink/intersect.hpp"

namespace riverlink {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Runs fn(0) .. fn(n-1), split in contiguous chunks over worker threads.
// Thread count: RIVERLINK_THREADS if set and positive, else the hardware
// count. Exceptions are captured and rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned nt = 0;
  if (const char* env = std::getenv("RIVERLINK_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) nt = static_cast<unsigned>(v);
  }
  if (nt == 0) nt = std::max(1u, std::thread::hardware_concurrency());
  if (n < nt) nt = static_cast<unsigned>(n);
  if (nt <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr err;
  std::mutex err_mutex;
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (unsigned t = 0; t < nt; ++t) {
    std::size_t lo = n * t / nt;
    std::size_t hi = n * (t + 1) / nt;
    pool.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

double elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

// Uniform discriminant draw shared by the two public samplers.
template <class Accept>
Integer draw_discriminant(SplitMix64& rng, std::int64_t lo, std::int64_t hi,
                          Accept&& accept, const char* who) {
  if (lo > hi) {
    throw std::invalid_argument(std::string(who) + ": empty range");
  }
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span <= 4096) {
    std::vector<std::int64_t> pool;
    for (std::int64_t v = lo; v <= hi; ++v) {
      if (accept(Integer(v))) pool.push_back(v);
    }
    if (pool.empty()) {
      throw std::invalid_argument(std::string(who) +
                                  ": range contains no such discriminant");
    }
    return Integer(pool[rng.below(pool.size())]);
  }
  // Wide ranges always contain admissible values; plain rejection.
  for (std::size_t attempt = 0; attempt < 1'000'000; ++attempt) {
    Integer v(lo + static_cast<std::int64_t>(rng.below(span)));
    if (accept(v)) return v;
  }
  throw std::logic_error(std::string(who) + ": rejection sampling stalled");
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("SplitMix64::below requires n >= 1");
  }
  std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % n;
  }
}

double SplitMix64::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Integer random_valid_discriminant(SplitMix64& rng, std::int64_t lo,
                                  std::int64_t hi) {
  return draw_discriminant(
      rng, lo, hi, [](const Integer& v) { return is_valid_discriminant(v); },
      "random_valid_discriminant");
}

Integer random_fundamental_discriminant(SplitMix64& rng, std::int64_t lo,
                                        std::int64_t hi) {
  return draw_discriminant(
      rng, lo, hi,
      [](const Integer& v) { return is_fundamental_discriminant(v); },
      "random_fundamental_discriminant");
}

Pibqf random_class_rep(SplitMix64& rng, const Integer& d) {
  std::vector<Pibqf> reps = narrow_class_group(d);
  return reps[rng.below(reps.size())];
}

std::vector<LocusSample> intersection_locus(
    const Pibqf& q, const Integer& d,
    const std::optional<std::complex<double>>& base) {
  validate(q);
  if (!is_valid_discriminant(d)) {
    throw std::invalid_argument(
        "intersection_locus requires a valid discriminant");
  }
  if (d == discriminant(q)) {
    throw std::domain_error(
        "intersection_locus requires a discriminant different from the "
        "form's (its own class is never strongly inequivalent to itself)");
  }
  if (base) arc_distance(q, *base);  // validates the base point early
  RiverWalk walk1 = river_walk(q);
  const std::vector<std::uint8_t>& w1 = walk1.word;
  const std::size_t m = w1.size();
  // pu[k] carries q onto the travel form at edge k of its river.
  std::vector<UniModularMatrix> pu(m + 1);
  pu[0] = walk1.to_anchor;
  for (std::size_t k = 1; k <= m; ++k) {
    pu[k] = pu[k - 1] * (w1[k - 1] ? mat_R() : mat_L());
  }
  std::vector<LocusSample> out;
  for (const Pibqf& qc : narrow_class_group(d)) {
    RiverWalk walk2 = river_walk(qc);
    RiverWalk walk2m = river_walk(-qc);
    const std::size_t n2 = walk2.word.size();
    const std::size_t n2m = walk2m.word.size();
    // Each counted scan pair is realized as a concrete partner form pulled
    // into q's frame; its geodesic then crosses q's with the stated sign.
    auto emit = [&](const UniModularMatrix& p_u, const Pibqf& v,
                    int expected_sign) {
      Pibqf vp = act(inverse(p_u), v);
      IntersectionRecord rec = crossing_point(q, vp);
      if (rec.sign != expected_sign) {
        throw std::logic_error(
            "intersection_locus: realized crossing has unexpected sign");
      }
      rec.arc_distance = arc_distance(q, rec.point, base);
      out.push_back(LocusSample{qc, rec, rec.arc_distance});
    };
    for (const auto& [i, j] : rs_scan_pairs(w1, walk2.word)) {
      emit(pu[i + 1], walk2.edge_forms[(j + 1) % n2], +1);
    }
    for (const auto& [i, j] : rs_scan_pairs(walk2m.word, w1)) {
      emit(pu[j + 1], -walk2m.edge_forms[(i + 1) % n2m], +1);
    }
    for (const auto& [i, j] : rs_scan_pairs(walk2.word, w1)) {
      emit(pu[j + 1], walk2.edge_forms[(i + 1) % n2], -1);
    }
    for (const auto& [i, j] : rs_scan_pairs(w1, walk2m.word)) {
      emit(pu[i + 1], -walk2m.edge_forms[(j + 1) % n2m], -1);
    }
  }
  return out;
}

std::vector<HistogramBin> angle_histogram(
    const std::vector<LocusSample>& samples, std::size_t bins) {
  if (bins < 1) {
    throw std::invalid_argument("angle_histogram requires bins >= 1");
  }
  if (samples.empty()) return {};
  std::vector<HistogramBin> out(bins);
  double width = kPi / static_cast<double>(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    out[b].lo = width * static_cast<double>(b);
    out[b].hi = (b + 1 == bins) ? kPi : width * static_cast<double>(b + 1);
  }
  double unit = 1.0 / static_cast<double>(samples.size());
  for (const LocusSample& s : samples) {
    auto idx = static_cast<std::size_t>(s.record.angle / width);
    if (idx >= bins) idx = bins - 1;
    out[idx].mass += unit;
  }
  return out;
}

CStat c_statistic(const Integer& d1, const Integer& d2) {
  CStat out;
  out.d1 = d1;
  out.d2 = d2;
  bool formula_scope = d1 != d2 && gcd(d1, d2) == 1 &&
                       is_fundamental_discriminant(d1) &&
                       is_fundamental_discriminant(d2);
  out.int_total = formula_scope ? total_intersection_formula(d1, d2)
                                : total_intersection_classes(d1, d2);
  out.h1 = static_cast<std::int64_t>(narrow_class_group(d1).size());
  out.h2 = static_cast<std::int64_t>(narrow_class_group(d2).size());
  out.r1 = pell_log(d1);
  out.r2 = pell_log(d2);
  out.c = static_cast<double>(out.int_total) /
          (static_cast<double>(out.h1) * static_cast<double>(out.h2) *
           out.r1 * out.r2);
  return out;
}

std::vector<CStat> c_statistic_batch(std::size_t trials, std::uint64_t seed,
                                     std::int64_t d1_lo, std::int64_t d1_hi,
                                     std::int64_t d2_lo, std::int64_t d2_hi) {
  if (trials == 0) {
    throw std::invalid_argument("c_statistic_batch requires trials >= 1");
  }
  auto collect = [](std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = lo; v <= hi; ++v) {
      if (is_fundamental_discriminant(Integer(v))) out.push_back(v);
    }
    if (out.empty()) {
      throw std::invalid_argument(
          "c_statistic_batch: range contains no fundamental discriminant");
    }
    return out;
  };
  std::vector<std::int64_t> pool1 = collect(d1_lo, d1_hi);
  std::vector<std::int64_t> pool2 = collect(d2_lo, d2_hi);
  // Pairs are drawn up front on one thread; workers only evaluate, and the
  // output is merged by trial index, so a seed fixes the whole result.
  SplitMix64 rng(seed);
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  pairs.reserve(trials);
  while (pairs.size() < trials) {
    std::int64_t a = pool1[rng.below(pool1.size())];
    std::int64_t b = pool2[rng.below(pool2.size())];
    if (a == b || std::gcd(a, b) != 1) continue;
    pairs.emplace_back(a, b);
  }
  std::vector<CStat> out(trials);
  parallel_for(trials, [&](std::size_t t) {
    out[t] = c_statistic(Integer(pairs[t].first), Integer(pairs[t].second));
  });
  return out;
}

BenchResult bench_compare(std::int64_t d1_lo, std::int64_t d1_hi,
                          std::int64_t d2_lo, std::int64_t d2_hi,
                          std::size_t trials, std::uint64_t seed) {
  if (trials == 0) {
    throw std::invalid_argument("bench_compare requires trials >= 1");
  }
  SplitMix64 rng(seed);
  std::vector<std::pair<Pibqf, Pibqf>> cases;
  cases.reserve(trials);
  while (cases.size() < trials) {
    Integer da = random_valid_discriminant(rng, d1_lo, d1_hi);
    Pibqf qa = random_class_rep(rng, da);
    Integer db = random_valid_discriminant(rng, d2_lo, d2_hi);
    Pibqf qb = random_class_rep(rng, db);
    if (!strongly_inequivalent(qa, qb)) continue;
    cases.emplace_back(std::move(qa), std::move(qb));
  }
  BenchResult res;
  res.d1_lo = d1_lo;
  res.d1_hi = d1_hi;
  res.d2_lo = d2_lo;
  res.d2_hi = d2_hi;
  std::vector<std::pair<RiverSequence, RiverSequence>> rivers;
  rivers.reserve(trials);
  double t_river = 0.0, t_naive = 0.0, t_fast = 0.0;
  double p1_sum = 0.0, p2_sum = 0.0, int_sum = 0.0;
  for (const auto& [qa, qb] : cases) {
    auto t0 = std::chrono::steady_clock::now();
    RiverSequence ra = river_of(qa);
    RiverSequence rb = river_of(qb);
    t_river += elapsed_ms(t0);
    p1_sum += static_cast<double>(ra.period());
    p2_sum += static_cast<double>(rb.period());
    rivers.emplace_back(std::move(ra), std::move(rb));
  }
  for (const auto& [ra, rb] : rivers) {
    auto t0 = std::chrono::steady_clock::now();
    std::int64_t naive = int_rs_naive(ra, rb);
    t_naive += elapsed_ms(t0);
    auto t1 = std::chrono::steady_clock::now();
    std::int64_t fast = int_rs_fast(ra, rb);
    t_fast += elapsed_ms(t1);
    if (naive != fast) {
      throw std::logic_error("bench_compare: scan engines disagree");
    }
    int_sum += static_cast<double>(fast);
  }
  auto n = static_cast<double>(trials);
  res.p1_avg = p1_sum / n;
  res.p2_avg = p2_sum / n;
  res.intrs_avg = int_sum / n;
  res.t_river_ms = t_river / n;
  res.t_naive_ms = t_naive / n;
  res.t_fast_ms = t_fast / n;
  return res;
}

}  // namespace riverlink
