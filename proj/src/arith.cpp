// riverlink: implementation of exact integer arithmetic primitives.

#include "riverlink/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/miller_rabin.hpp>

namespace riverlink {

namespace {

namespace mp = boost::multiprecision;

constexpr std::uint32_t kSieveLimit = 1'000'000;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t splitmix_step(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Brent's cycle-finding variant of Pollard rho; returns a nontrivial factor
// of composite n (n odd, not a prime power guard needed by the caller loop).
std::uint64_t pollard_brent_u64(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  if (n % 3 == 0) return 3;
  std::uint64_t seed = 0x5bf03635ULL ^ n;
  for (;;) {
    std::uint64_t y = 2 + splitmix_step(seed) % (n - 3);
    std::uint64_t c = 1 + splitmix_step(seed) % (n - 1);
    auto f = [&](std::uint64_t x) {
      return (mulmod_u64(x, x, n) + c) % n;
    };
    std::uint64_t g = 1, r = 1, q = 1, x = 0, ys = y;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t lim = std::min<std::uint64_t>(128, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = f(y);
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        k += 128;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

// Pollard rho for values beyond 64 bits (rarely needed at desk scale).
Integer pollard_brent_big(const Integer& n) {
  if (n % 2 == 0) return 2;
  if (n % 3 == 0) return 3;
  std::uint64_t seed = 0x243f6a88ULL;
  for (;;) {
    Integer y = 2 + Integer(splitmix_step(seed)) % (n - 3);
    Integer c = 1 + Integer(splitmix_step(seed)) % (n - 1);
    auto f = [&](const Integer& x) { return (x * x + c) % n; };
    Integer g = 1, q = 1, x = 0, ys = y;
    std::uint64_t r = 1;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t lim = std::min<std::uint64_t>(128, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = f(y);
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += 128;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      }
    }
    if (g != n) return g;
  }
}

// Minimal 2x2 integer matrix product helper for pell_minimal (the full
// matrix type lives in the forms module; this stays self-contained).
struct Cell2 {
  Integer a = 1, b = 0, c = 0, d = 1;
  void mul_l_run(const Integer& k) {  // right-multiply by (1 k; 0 1)
    b += a * k;
    d += c * k;
  }
  void mul_r_run(const Integer& k) {  // right-multiply by (1 0; k 1)
    a += b * k;
    c += d * k;
  }
};

}  // namespace

Integer isqrt(const Integer& n) {
  if (n < 0) {
    throw std::invalid_argument("isqrt requires a nonnegative argument");
  }
  return mp::sqrt(n);
}

bool is_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = mp::sqrt(n);
  return r * r == n;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) {
    throw std::invalid_argument("floor_div requires a nonzero divisor");
  }
  Integer q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kSieveLimit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kSieveLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = static_cast<std::uint64_t>(i) * i;
           j < kSieveLimit; j += i) {
        composite[static_cast<std::size_t>(j)] = true;
      }
    }
    return out;
  }();
  return primes;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2,  3,  5,  7,  11, 13,
                                             17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i + 1 < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    return is_prime_u64(n.convert_to<std::uint64_t>());
  }
  return mp::miller_rabin_test(n, 25);
}

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("factor_u64 requires n >= 1");
  }
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint32_t p : small_primes()) {
    std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
    if (pp > n) break;
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) {
    // No prime factor below 1e6 remains; split the cofactor.
    std::vector<std::uint64_t> work{n};
    std::vector<std::uint64_t> primes_found;
    while (!work.empty()) {
      std::uint64_t m = work.back();
      work.pop_back();
      if (m < static_cast<std::uint64_t>(kSieveLimit) * kSieveLimit ||
          is_prime_u64(m)) {
        primes_found.push_back(m);
        continue;
      }
      std::uint64_t d = pollard_brent_u64(m);
      work.push_back(d);
      work.push_back(m / d);
    }
    std::sort(primes_found.begin(), primes_found.end());
    for (std::size_t i = 0; i < primes_found.size();) {
      std::size_t j = i;
      while (j < primes_found.size() && primes_found[j] == primes_found[i]) {
        ++j;
      }
      out.emplace_back(primes_found[i], static_cast<int>(j - i));
      i = j;
    }
    std::sort(out.begin(), out.end());
  }
  return out;
}

Factorization factorize(const Integer& n) {
  if (n == 0) {
    throw std::invalid_argument("factorize requires n != 0");
  }
  Integer m = abs(n);
  Factorization out;
  if (m == 1) return out;
  if (m <= std::numeric_limits<std::uint64_t>::max()) {
    for (const auto& [p, e] : factor_u64(m.convert_to<std::uint64_t>())) {
      out.emplace(Integer(p), static_cast<unsigned>(e));
    }
    return out;
  }
  for (std::uint32_t p : small_primes()) {
    if (Integer(p) * p > m) break;
    if (m % p == 0) {
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      out.emplace(Integer(p), e);
    }
  }
  if (m > 1) {
    std::vector<Integer> work{m};
    while (!work.empty()) {
      Integer v = work.back();
      work.pop_back();
      if (v <= std::numeric_limits<std::uint64_t>::max()) {
        for (const auto& [p, e] : factor_u64(v.convert_to<std::uint64_t>())) {
          out[Integer(p)] += static_cast<unsigned>(e);
        }
        continue;
      }
      if (is_prime(v)) {
        out[v] += 1;
        continue;
      }
      Integer d = pollard_brent_big(v);
      work.push_back(d);
      work.push_back(v / d);
    }
  }
  return out;
}

int kronecker(const Integer& a_in, const Integer& n_in) {
  Integer a = a_in, n = n_in;
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    unsigned tz = mp::lsb(n);
    n >>= tz;
    if (tz % 2 == 1) {
      long am8 = static_cast<long>(a % 8);
      if (am8 < 0) am8 += 8;
      if (am8 == 3 || am8 == 5) result = -result;
    }
  }
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    if (a % 2 == 0) {
      unsigned tz = mp::lsb(a);
      a >>= tz;
      if (tz % 2 == 1) {
        long nm8 = static_cast<long>(n % 8);
        if (nm8 == 3 || nm8 == 5) result = -result;
      }
    }
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    Integer t = n % a;
    n = a;
    a = t;
  }
  return n == 1 ? result : 0;
}

int kronecker_i64(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    int tz = 0;
    while (n % 2 == 0) {
      n >>= 1;
      ++tz;
    }
    if (tz % 2 == 1) {
      std::int64_t am8 = a % 8;
      if (am8 < 0) am8 += 8;
      if (am8 == 3 || am8 == 5) result = -result;
    }
  }
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    if (a % 2 == 0) {
      int tz = 0;
      while (a % 2 == 0) {
        a >>= 1;
        ++tz;
      }
      if (tz % 2 == 1) {
        std::int64_t nm8 = n % 8;
        if (nm8 == 3 || nm8 == 5) result = -result;
      }
    }
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    std::int64_t t = n % a;
    n = a;
    a = t;
  }
  return n == 1 ? result : 0;
}

PeriodicCF cf_quadratic(const Integer& p_in, const Integer& q_in,
                        const Integer& d_in) {
  if (q_in == 0) {
    throw std::invalid_argument("cf_quadratic requires Q != 0");
  }
  if (d_in <= 0 || is_square(d_in)) {
    throw std::invalid_argument(
        "cf_quadratic requires D > 0 and D nonsquare");
  }
  Integer p = p_in, q = q_in, d = d_in;
  if ((d - p * p) % q != 0) {
    // Renormalize (P + sqrt(D))/Q to an equivalent representation in which
    // Q divides D - P^2, preserving the represented value.
    p *= abs(q);
    d *= q * q;
    q *= abs(q);
  }
  const Integer s = isqrt(d);
  auto digit = [&](const Integer& P, const Integer& Q) {
    if (Q > 0) return floor_div(P + s, Q);
    return -floor_div(P + s, -Q) - 1;
  };
  // A state (P, Q) is a reduced quadratic surd iff its value x exceeds 1 and
  // its conjugate lies in (-1, 0); the continued fraction is purely periodic
  // from the first reduced state on, which yields minimal preperiod/period.
  auto reduced = [&](const Integer& P, const Integer& Q) {
    return Q > 0 && P <= s && P + Q >= s + 1 && P + s >= Q;
  };
  std::vector<Integer> digits;
  bool found = false;
  std::size_t start = 0;
  Integer Pr = 0, Qr = 0;
  Integer P = p, Q = q;
  for (std::size_t iter = 0;; ++iter) {
    if (iter > 10'000'000) {
      throw std::logic_error("cf_quadratic: period not closed (internal)");
    }
    if (found && P == Pr && Q == Qr) break;
    if (!found && reduced(P, Q)) {
      found = true;
      start = digits.size();
      Pr = P;
      Qr = Q;
    }
    Integer a = digit(P, Q);
    digits.push_back(a);
    Integer Pn = a * Q - P;
    Integer Qn = (d - Pn * Pn) / Q;
    P = Pn;
    Q = Qn;
  }
  PeriodicCF out;
  out.preperiod.assign(digits.begin(),
                       digits.begin() + static_cast<std::ptrdiff_t>(start));
  out.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(start),
                    digits.end());
  return out;
}

bool is_valid_discriminant(const Integer& d) {
  if (d <= 0) return false;
  long m4 = static_cast<long>(d % 4);
  if (m4 != 0 && m4 != 1) return false;
  return !is_square(d);
}

bool is_fundamental_discriminant(const Integer& d) {
  if (!is_valid_discriminant(d)) return false;
  auto squarefree = [](const Integer& v) {
    for (const auto& [p, e] : factorize(v)) {
      (void)p;
      if (e > 1) return false;
    }
    return true;
  };
  if (d % 4 == 1) return squarefree(d);
  Integer m = d / 4;
  long mm4 = static_cast<long>(m % 4);
  if (mm4 != 2 && mm4 != 3) return false;
  return squarefree(m);
}

PellSolution pell_minimal(const Integer& d) {
  if (!is_valid_discriminant(d)) {
    throw std::invalid_argument(
        "pell_minimal requires D > 0, D = 0 or 1 (mod 4), D nonsquare");
  }
  const Integer r = (d % 2 == 0) ? 0 : 1;
  // First root of the principal form [1, r, (r^2 - d)/4].
  PeriodicCF cf = cf_quadratic(-r, 2, d);
  std::vector<Integer> runs = cf.period;
  if (runs.size() % 2 == 1) {
    runs.insert(runs.end(), cf.period.begin(), cf.period.end());
  }
  // The continued-fraction period digits are the run lengths of the
  // principal river word; the product of the alternating turn-run matrices
  // over one word period is an invariant automorph, whose trace is T.
  Cell2 m;
  bool left = true;
  for (const Integer& k : runs) {
    if (left) {
      m.mul_l_run(k);
    } else {
      m.mul_r_run(k);
    }
    left = !left;
  }
  PellSolution out;
  out.t = abs(m.a + m.d);
  if (out.t <= 2) {
    throw std::logic_error("pell_minimal: automorph trace not hyperbolic");
  }
  Integer usq_num = out.t * out.t - 4;
  if (usq_num % d != 0) {
    throw std::logic_error("pell_minimal: trace inconsistent with D");
  }
  out.u = isqrt(usq_num / d);
  if (out.u * out.u * d != usq_num) {
    throw std::logic_error("pell_minimal: U is not integral");
  }
  return out;
}

double integer_to_double(const Integer& x) {
  if (x == 0) return 0.0;
  Integer ax = abs(x);
  double sign = x < 0 ? -1.0 : 1.0;
  unsigned k = mp::msb(ax);
  if (k <= 52) {
    return sign * ax.convert_to<double>();
  }
  Integer top = ax >> (k - 52);
  return sign * std::ldexp(top.convert_to<double>(),
                           static_cast<int>(k) - 52);
}

double log_integer(const Integer& x) {
  if (x <= 0) {
    throw std::invalid_argument("log_integer requires x > 0");
  }
  unsigned k = mp::msb(x);
  if (k <= 52) {
    return std::log(x.convert_to<double>());
  }
  Integer top = x >> (k - 52);
  return std::log(top.convert_to<double>()) +
         (static_cast<double>(k) - 52.0) * std::log(2.0);
}

double rational_to_double(const Rational& x) {
  Integer num = numerator(x);
  Integer den = denominator(x);
  if (num == 0) return 0.0;
  double sign = num < 0 ? -1.0 : 1.0;
  Integer a = abs(num);
  int sh_a = 0, sh_b = 0;
  unsigned ka = mp::msb(a);
  unsigned kb = mp::msb(den);
  if (ka > 62) {
    sh_a = static_cast<int>(ka) - 62;
    a >>= sh_a;
  }
  Integer b = den;
  if (kb > 62) {
    sh_b = static_cast<int>(kb) - 62;
    b >>= sh_b;
  }
  double q = a.convert_to<double>() / b.convert_to<double>();
  return sign * std::ldexp(q, sh_a - sh_b);
}

double pell_log(const Integer& d) {
  PellSolution sol = pell_minimal(d);
  if (mp::msb(sol.t) < 500) {
    double td = integer_to_double(sol.t);
    double ud = integer_to_double(sol.u);
    double dd = integer_to_double(d);
    return std::log(td + ud * std::sqrt(dd));
  }
  Integer x = sol.t + isqrt(sol.u * sol.u * d);
  return log_integer(x);
}

}  // namespace riverlink
