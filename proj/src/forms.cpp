// riverlink: implementation of binary quadratic form arithmetic and
// reduction theory.

#include "riverlink/forms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace riverlink {

namespace {

constexpr std::size_t kWalkCap = 10'000'000;

Integer content(const Pibqf& q) {
  return gcd(gcd(abs(q.a), abs(q.b)), abs(q.c));
}

// The S-image [C, -B, A]: same edge of the topograph, opposite flow side.
Pibqf sflip(const Pibqf& q) {
  return Pibqf{q.c, -q.b, q.a};
}

// River step at a travel form with A > 0: turn right iff A + B + C > 0.
UniModularMatrix river_step(const Pibqf& t) {
  return (t.a + t.b + t.c > 0) ? mat_R() : mat_L();
}

bool rep_key_less(const Pibqf& x, const Pibqf& y) {
  Integer ax = abs(x.a), ay = abs(y.a);
  if (ax != ay) return ax < ay;
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

struct PibqfLess {
  bool operator()(const Pibqf& x, const Pibqf& y) const {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.c < y.c;
  }
};

std::vector<Integer> divisors_of(const Integer& n) {
  std::vector<Integer> out{1};
  if (n == 1) return out;
  for (const auto& [p, e] : factorize(n)) {
    std::size_t sz = out.size();
    Integer pe = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pe);
    }
  }
  return out;
}

}  // namespace

bool operator==(const Pibqf& x, const Pibqf& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c;
}

bool operator!=(const Pibqf& x, const Pibqf& y) { return !(x == y); }

Pibqf operator-(const Pibqf& q) { return Pibqf{-q.a, -q.b, -q.c}; }

void validate(const Pibqf& q) {
  Integer d = discriminant(q);
  if (d <= 0 || is_square(d)) {
    throw std::invalid_argument(
        "form must have positive nonsquare discriminant");
  }
  if (content(q) != 1) {
    throw std::invalid_argument("form must be primitive (gcd(A,B,C) = 1)");
  }
}

Integer discriminant(const Pibqf& q) {
  return q.b * q.b - 4 * q.a * q.c;
}

Pibqf principal_form(const Integer& d) {
  if (!is_valid_discriminant(d)) {
    throw std::invalid_argument(
        "principal_form requires D > 0, D = 0 or 1 (mod 4), D nonsquare");
  }
  Integer r = (d % 2 == 0) ? 0 : 1;
  return Pibqf{1, r, (r * r - d) / 4};
}

bool operator==(const UniModularMatrix& x, const UniModularMatrix& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

bool operator!=(const UniModularMatrix& x, const UniModularMatrix& y) {
  return !(x == y);
}

UniModularMatrix canonical(const UniModularMatrix& m) {
  if (m.a * m.d - m.b * m.c != 1) {
    throw std::invalid_argument("matrix must have determinant 1");
  }
  const Integer* first = &m.a;
  if (*first == 0) first = &m.b;
  if (*first == 0) first = &m.c;
  if (*first == 0) first = &m.d;
  if (*first < 0) {
    return UniModularMatrix{-m.a, -m.b, -m.c, -m.d};
  }
  return m;
}

UniModularMatrix operator*(const UniModularMatrix& x,
                           const UniModularMatrix& y) {
  return canonical(UniModularMatrix{
      x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
      x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d});
}

UniModularMatrix identity_matrix() { return UniModularMatrix{1, 0, 0, 1}; }

UniModularMatrix inverse(const UniModularMatrix& m) {
  return canonical(UniModularMatrix{m.d, -m.b, -m.c, m.a});
}

Integer trace(const UniModularMatrix& m) { return m.a + m.d; }

Integer determinant(const UniModularMatrix& m) {
  return m.a * m.d - m.b * m.c;
}

UniModularMatrix mat_L() { return UniModularMatrix{1, 1, 0, 1}; }
UniModularMatrix mat_R() { return UniModularMatrix{1, 0, 1, 1}; }
UniModularMatrix mat_S() { return UniModularMatrix{0, 1, -1, 0}; }
UniModularMatrix mat_T() { return mat_L(); }

UniModularMatrix path_to_matrix(std::string_view path) {
  UniModularMatrix m = identity_matrix();
  for (char ch : path) {
    switch (ch) {
      case 'L':
        m = m * mat_L();
        break;
      case 'R':
        m = m * mat_R();
        break;
      case 'S':
        m = m * mat_S();
        break;
      case 'T':
        m = m * mat_T();
        break;
      default:
        throw std::invalid_argument(
            "path_to_matrix accepts only the letters L, R, S, T");
    }
  }
  return m;
}

Pibqf act(const UniModularMatrix& m, const Pibqf& q) {
  Integer na = q.a * m.a * m.a + q.b * m.a * m.c + q.c * m.c * m.c;
  Integer nb = 2 * q.a * m.a * m.b + q.b * (m.a * m.d + m.b * m.c) +
               2 * q.c * m.c * m.d;
  Integer nc = q.a * m.b * m.b + q.b * m.b * m.d + q.c * m.d * m.d;
  return Pibqf{std::move(na), std::move(nb), std::move(nc)};
}

Integer b_delta(const Pibqf& q1, const Pibqf& q2) {
  return q1.b * q2.b - 2 * q1.a * q2.c - 2 * q2.a * q1.c;
}

UniModularMatrix automorph(const Pibqf& q) {
  validate(q);
  PellSolution sol = pell_minimal(discriminant(q));
  return canonical(UniModularMatrix{(sol.t - q.b * sol.u) / 2, -q.c * sol.u,
                                    q.a * sol.u, (sol.t + q.b * sol.u) / 2});
}

Pibqf form_from_matrix(const UniModularMatrix& m) {
  Integer tr = trace(m);
  if (abs(tr) <= 2) {
    throw std::invalid_argument("form_from_matrix requires |trace| > 2");
  }
  // Use the trace-positive lift so the fixed form's orientation is
  // determined by m itself, not by the PSL sign convention.
  UniModularMatrix n = tr > 0 ? m : UniModularMatrix{-m.a, -m.b, -m.c, -m.d};
  Integer g = gcd(gcd(abs(n.c), abs(n.d - n.a)), abs(n.b));
  Pibqf q{n.c / g, (n.d - n.a) / g, -n.b / g};
  validate(q);  // guaranteed by |trace| > 2; guards internal errors
  return q;
}

bool is_reduced(const Pibqf& q) {
  return q.a * q.c < 0 && q.b > abs(q.a + q.c);
}

ReductionResult reduce(const Pibqf& q) {
  validate(q);
  Pibqf cur = q;
  UniModularMatrix w = identity_matrix();
  // Phase 1: translations (and S-swaps that shrink |A|) until A*C < 0.
  std::size_t guard = 0;
  while (cur.a * cur.c > 0) {
    if (++guard > 1000) {
      throw std::logic_error("reduce: phase 1 failed to terminate");
    }
    Integer k = floor_div(-cur.b + cur.a, 2 * cur.a);
    UniModularMatrix tk{1, k, 0, 1};
    cur = act(tk, cur);
    w = w * tk;
    if (cur.a * cur.c > 0) {
      cur = act(mat_S(), cur);
      w = w * mat_S();
    }
  }
  // Phase 2: walk the river downstream; the first reduced orientation met
  // (checking both sides of each edge) is the result.
  Pibqf t = cur;
  if (t.a < 0) {
    t = sflip(t);
    w = w * mat_S();
  }
  for (std::size_t i = 0; i < kWalkCap; ++i) {
    if (is_reduced(t)) return ReductionResult{t, w};
    Pibqf f = sflip(t);
    if (is_reduced(f)) return ReductionResult{f, w * mat_S()};
    UniModularMatrix step = river_step(t);
    t = act(step, t);
    w = w * step;
  }
  throw std::logic_error("reduce: river walk failed to terminate");
}

std::vector<Pibqf> reduced_cycle(const Pibqf& q) {
  validate(q);
  if (!is_reduced(q)) {
    throw std::invalid_argument("reduced_cycle requires a reduced form");
  }
  std::vector<Pibqf> out;
  Pibqf t = q.a > 0 ? q : sflip(q);
  const Pibqf start = t;
  for (std::size_t i = 0; i < kWalkCap; ++i) {
    if (is_reduced(t)) {
      out.push_back(t);
    } else {
      Pibqf f = sflip(t);
      if (is_reduced(f)) out.push_back(f);
    }
    t = act(river_step(t), t);
    if (t == start) return out;
  }
  throw std::logic_error("reduced_cycle: walk failed to close");
}

std::vector<Pibqf> narrow_class_group(const Integer& d) {
  if (!is_valid_discriminant(d)) {
    throw std::invalid_argument(
        "narrow_class_group requires D > 0, D = 0 or 1 (mod 4), D nonsquare");
  }
  // Enumerate every reduced form: 0 < B, B^2 + 4N = D with N >= 1, and the
  // two orientations [A, B, -N/A], [-A, B, N/A] for each divisor A of N
  // satisfying the reduced inequality and primitivity.
  std::set<Pibqf, PibqfLess> remaining;
  Integer b = (d % 2 == 0) ? 2 : 1;
  for (; b * b + 4 <= d; b += 2) {
    Integer n = (d - b * b) / 4;
    for (const Integer& a : divisors_of(n)) {
      Integer cc = n / a;
      if (b <= abs(a - cc)) continue;
      if (gcd(gcd(a, b), cc) != 1) continue;
      remaining.insert(Pibqf{a, b, -cc});
      remaining.insert(Pibqf{-a, b, cc});
    }
  }
  std::vector<Pibqf> reps;
  while (!remaining.empty()) {
    Pibqf seed = *remaining.begin();
    std::vector<Pibqf> cycle = reduced_cycle(seed);
    Pibqf rep = cycle.front();
    for (const Pibqf& e : cycle) {
      remaining.erase(e);
      if (rep_key_less(e, rep)) rep = e;
    }
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end(), rep_key_less);
  return reps;
}

std::optional<UniModularMatrix> is_equivalent(const Pibqf& q1,
                                              const Pibqf& q2) {
  validate(q1);
  validate(q2);
  if (discriminant(q1) != discriminant(q2)) return std::nullopt;
  ReductionResult red1 = reduce(q1);
  ReductionResult red2 = reduce(q2);
  Pibqf t = red1.form.a > 0 ? red1.form : sflip(red1.form);
  UniModularMatrix v =
      red1.form.a > 0 ? identity_matrix() : mat_S();
  const Pibqf start = t;
  for (std::size_t i = 0; i < kWalkCap; ++i) {
    std::optional<UniModularMatrix> w;
    if (is_reduced(t)) {
      if (t == red2.form) w = v;
    } else {
      Pibqf f = sflip(t);
      if (is_reduced(f) && f == red2.form) w = v * mat_S();
    }
    if (w) {
      UniModularMatrix m = red1.witness * *w * inverse(red2.witness);
      if (act(m, q1) != q2) {
        throw std::logic_error("is_equivalent: witness verification failed");
      }
      return m;
    }
    UniModularMatrix step = river_step(t);
    t = act(step, t);
    v = v * step;
    if (t == start) return std::nullopt;
  }
  throw std::logic_error("is_equivalent: walk failed to close");
}

bool is_reciprocal_class(const Pibqf& q) {
  return is_equivalent(q, -q).has_value();
}

bool strongly_inequivalent(const Pibqf& q1, const Pibqf& q2) {
  return !is_equivalent(q1, q2).has_value() &&
         !is_equivalent(q1, -q2).has_value();
}

}  // namespace riverlink
