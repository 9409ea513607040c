// riverlink: exact integer arithmetic primitives — integer square roots,
// factorization, Kronecker symbols, periodic continued fractions of quadratic
// irrationals, and minimal Pell solutions.
#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace riverlink {

/// Arbitrary-precision signed integer used throughout the library.
using Integer = boost::multiprecision::cpp_int;
/// Arbitrary-precision rational built on Integer.
using Rational = boost::multiprecision::cpp_rational;

/// Floor of the square root of n. Requires n >= 0.
Integer isqrt(const Integer& n);

/// True iff n is a perfect square (false for negative n).
bool is_square(const Integer& n);

/// floor(a / b): quotient rounded toward minus infinity. Requires b != 0.
Integer floor_div(const Integer& a, const Integer& b);

/// Prime factorization as an ordered map prime -> exponent.
using Factorization = std::map<Integer, unsigned>;

/// Factor |n| completely. Requires n != 0; |n| = 1 gives an empty map.
/// Every key is prime and the product of prime^exponent equals |n|.
Factorization factorize(const Integer& n);

/// Kronecker symbol (a|n), defined for all integers a, n.
/// Completely multiplicative in both arguments, with (a|2) = 0 for even a
/// and +1 / -1 for a = ±1 / ±3 mod 8, and (a|0) = 1 iff a = ±1.
int kronecker(const Integer& a, const Integer& n);

/// Kronecker symbol restricted to 64-bit arguments (fast path for batch work).
int kronecker_i64(std::int64_t a, std::int64_t n);

/// Eventually periodic continued fraction of a real quadratic irrational.
/// preperiod holds a_0 .. a_s (a_0 may be any sign, later digits >= 1);
/// period holds the minimal repeating block a_{s+1} .. a_{s+p} (all >= 1).
struct PeriodicCF {
  std::vector<Integer> preperiod;
  std::vector<Integer> period;
};

/// Exact continued fraction of (p + sqrt(d)) / q.
/// Requires d > 0 nonsquare and q != 0. The preperiod is minimal (it may be
/// empty for purely periodic expansions) and the period is the minimal cycle.
/// All floor steps use exact integer comparisons only.
PeriodicCF cf_quadratic(const Integer& p, const Integer& q, const Integer& d);

/// Minimal positive solution of t^2 - d u^2 = 4.
struct PellSolution {
  Integer t;
  Integer u;
};

/// Minimal Pell solution for a positive nonsquare discriminant d
/// (d > 0, d = 0 or 1 mod 4, d nonsquare). Computed by multiplying the
/// turn-run generator matrices of the principal river word over one minimal
/// even continued-fraction period; the trace of that product is t.
PellSolution pell_minimal(const Integer& d);

/// log(t + u * sqrt(d)) for the minimal Pell solution of d, computed stably
/// for solutions of any bit size.
double pell_log(const Integer& d);

/// True iff d > 0, d = 0 or 1 mod 4, and d is not a perfect square.
bool is_valid_discriminant(const Integer& d);

/// True iff d is a fundamental positive discriminant: either d = 1 mod 4 and
/// squarefree, or d = 4m with m squarefree and m = 2 or 3 mod 4.
bool is_fundamental_discriminant(const Integer& d);

/// All primes below 1e6, sieved once and shared.
const std::vector<std::uint32_t>& small_primes();

/// Deterministic Miller-Rabin primality test for 64-bit n.
bool is_prime_u64(std::uint64_t n);

/// Primality test for arbitrary-precision n >= 0 (deterministic below 2^64,
/// strong probabilistic above).
bool is_prime(const Integer& n);

/// Factor n >= 1 into sorted (prime, exponent) pairs using 64-bit arithmetic.
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);

/// Convert an exact rational to the nearest double without overflow in the
/// intermediate arithmetic, for numerators/denominators of any bit size.
double rational_to_double(const Rational& x);

/// Convert an Integer to double via its top bits (no intermediate overflow;
/// out-of-range magnitudes saturate to +-infinity).
double integer_to_double(const Integer& x);

/// Natural log of a positive integer of any bit size.
double log_integer(const Integer& x);

}  // namespace riverlink
