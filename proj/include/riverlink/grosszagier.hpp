// riverlink: exact counting formulas for total intersection numbers of two
// discriminants — the index range, the multiplicative epsilon symbol, the
// per-index counts p(n), and the total by formula and by class-pair
// summation.
#pragma once

#include <cstdint>
#include <vector>

#include "riverlink/forms.hpp"

namespace riverlink {

/// One prime of (D1*D2 - n^2)/4 with its exponent and epsilon value.
struct PnPrimeClass {
  Integer p;
  unsigned e = 0;
  int eps = 0;  // +1 or -1
};

/// The full profile behind one p(n) evaluation.
struct PnProfile {
  Integer n;
  Integer m;  // (D1*D2 - n^2)/4, always >= 1
  std::vector<PnPrimeClass> factor_classes;
  std::int64_t value = 0;  // even; 0 iff some eps = -1 prime has odd exponent
};

/// All integers n with |n| < sqrt(D1*D2) and n = D1*D2 (mod 2), ascending.
/// Requires both arguments to be valid discriminants (positive, 0 or 1 mod
/// 4, nonsquare); throws std::invalid_argument otherwise.
std::vector<Integer> s_range(const Integer& d1, const Integer& d2);

/// The multiplicative symbol: for each prime p of m, the nonzero member of
/// {kronecker(D1, p), kronecker(D2, p)}, multiplied over the factorization
/// of m (epsilon(1) = +1). Requires D1, D2 coprime and fundamental
/// (std::domain_error otherwise) and every prime of m to carry a
/// well-defined value (std::domain_error when kronecker(D1*D2, p) = -1).
int epsilon(const Integer& d1, const Integer& d2, const Integer& m);

/// The count p(n) for n in s_range(D1, D2), with the classified
/// factorization of (D1*D2 - n^2)/4: zero when some eps = -1 prime occurs
/// to an odd power, else 2 times the product of (e + 1) over eps = +1
/// primes. The equivalent divisor-sum form 2 * sum over d | m of
/// epsilon(d) is evaluated independently and asserted equal.
/// Requires D1, D2 distinct, coprime, fundamental and n in range;
/// throws std::domain_error on scope violations.
PnProfile p_count(const Integer& d1, const Integer& d2, const Integer& n);

/// Total intersection number of the two discriminants by the counting
/// formula: sum of p_count over s_range. Requires D1 != D2, positive,
/// coprime, fundamental; throws std::domain_error outside that scope.
std::int64_t total_intersection_formula(const Integer& d1, const Integer& d2);

/// The same total by direct summation of intersection_number over all
/// class pairs of the two narrow class groups. Requires only D1 != D2 and
/// both valid (no fundamentality or coprimality); equal discriminants are
/// rejected with std::domain_error.
std::int64_t total_intersection_classes(const Integer& d1, const Integer& d2);

/// One cell of the class-pair breakdown table.
struct ClassPairCell {
  Pibqf q1;
  Pibqf q2;
  std::int64_t value = 0;
};

/// The class-pair breakdown behind total_intersection_classes, in row-major
/// order over (narrow_class_group(d1), narrow_class_group(d2)).
std::vector<ClassPairCell> class_pair_table(const Integer& d1,
                                            const Integer& d2);

}  // namespace riverlink
