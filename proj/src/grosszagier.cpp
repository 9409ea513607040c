// riverlink: implementation of the exact counting formulas.

#include "riverlink/grosszagier.hpp"

#include <stdexcept>
#include <utility>

#include "riverlink/intersect.hpp"

namespace riverlink {

namespace {

void require_valid_disc(const Integer& d, const char* who) {
  if (!is_valid_discriminant(d)) {
    throw std::invalid_argument(std::string(who) +
                                " requires valid discriminants (positive, 0 "
                                "or 1 mod 4, nonsquare)");
  }
}

void require_formula_scope(const Integer& d1, const Integer& d2,
                           const char* who) {
  require_valid_disc(d1, who);
  require_valid_disc(d2, who);
  if (d1 == d2) {
    throw std::domain_error(std::string(who) +
                            " requires distinct discriminants");
  }
  if (gcd(d1, d2) != 1) {
    throw std::domain_error(std::string(who) +
                            " requires coprime discriminants");
  }
  if (!is_fundamental_discriminant(d1) || !is_fundamental_discriminant(d2)) {
    throw std::domain_error(std::string(who) +
                            " requires fundamental discriminants");
  }
}

// Epsilon of one prime, assuming coprime fundamental D1, D2.
int epsilon_prime(const Integer& d1, const Integer& d2, const Integer& p) {
  int k1 = kronecker(d1, p);
  int k2 = kronecker(d2, p);
  if (k1 == 0 && k2 == 0) {
    throw std::domain_error(
        "epsilon undefined: prime divides both discriminants");
  }
  if (k1 != 0 && k2 != 0 && k1 != k2) {
    throw std::domain_error(
        "epsilon undefined for a prime with kronecker(D1*D2, p) = -1");
  }
  return k1 != 0 ? k1 : k2;
}

// p(n) with the scope checks already done by the caller.
PnProfile p_count_inner(const Integer& d1, const Integer& d2,
                        const Integer& n) {
  PnProfile out;
  out.n = n;
  out.m = (d1 * d2 - n * n) / 4;
  bool zero = false;
  std::int64_t product = 2;
  for (const auto& [p, e] : factorize(out.m)) {
    int eps = epsilon_prime(d1, d2, p);
    out.factor_classes.push_back(PnPrimeClass{p, e, eps});
    if (eps == -1) {
      if (e % 2 == 1) zero = true;
    } else {
      product *= static_cast<std::int64_t>(e) + 1;
    }
  }
  out.value = zero ? 0 : product;
  // Independent evaluation as 2 * sum of epsilon over all divisors of m,
  // built directly from the factorization; the two expressions must agree.
  std::vector<std::pair<Integer, int>> divisors{{Integer(1), 1}};
  for (const PnPrimeClass& fc : out.factor_classes) {
    std::size_t sz = divisors.size();
    Integer pe = 1;
    int epse = 1;
    for (unsigned i = 1; i <= fc.e; ++i) {
      pe *= fc.p;
      epse *= fc.eps;
      for (std::size_t j = 0; j < sz; ++j) {
        divisors.emplace_back(divisors[j].first * pe,
                              divisors[j].second * epse);
      }
    }
  }
  std::int64_t divisor_sum = 0;
  for (const auto& [d, eps] : divisors) divisor_sum += eps;
  if (2 * divisor_sum != out.value) {
    throw std::logic_error(
        "p_count: divisor-sum and product forms disagree");
  }
  return out;
}

}  // namespace

std::vector<Integer> s_range(const Integer& d1, const Integer& d2) {
  require_valid_disc(d1, "s_range");
  require_valid_disc(d2, "s_range");
  Integer prod = d1 * d2;
  Integer lim = isqrt(prod);
  if (lim * lim == prod) --lim;  // |n| strictly below the square root
  long parity = static_cast<long>(prod % 2);
  std::vector<Integer> out;
  for (Integer n = -lim; n <= lim; ++n) {
    if (static_cast<long>(((n % 2) + 2) % 2) == parity) out.push_back(n);
  }
  return out;
}

int epsilon(const Integer& d1, const Integer& d2, const Integer& m) {
  if (m <= 0) {
    throw std::invalid_argument("epsilon requires m >= 1");
  }
  require_formula_scope(d1, d2, "epsilon");
  int out = 1;
  for (const auto& [p, e] : factorize(m)) {
    int eps = epsilon_prime(d1, d2, p);
    if (e % 2 == 1) out *= eps;
  }
  return out;
}

PnProfile p_count(const Integer& d1, const Integer& d2, const Integer& n) {
  require_formula_scope(d1, d2, "p_count");
  Integer prod = d1 * d2;
  if (n * n >= prod || ((n - prod) % 2) != 0) {
    throw std::domain_error(
        "p_count requires n in the index range of (D1, D2)");
  }
  return p_count_inner(d1, d2, n);
}

std::int64_t total_intersection_formula(const Integer& d1,
                                        const Integer& d2) {
  require_formula_scope(d1, d2, "total_intersection_formula");
  std::int64_t total = 0;
  for (const Integer& n : s_range(d1, d2)) {
    total += p_count_inner(d1, d2, n).value;
  }
  return total;
}

std::int64_t total_intersection_classes(const Integer& d1,
                                        const Integer& d2) {
  std::int64_t total = 0;
  for (const ClassPairCell& cell : class_pair_table(d1, d2)) {
    total += cell.value;
  }
  return total;
}

std::vector<ClassPairCell> class_pair_table(const Integer& d1,
                                            const Integer& d2) {
  require_valid_disc(d1, "total_intersection_classes");
  require_valid_disc(d2, "total_intersection_classes");
  if (d1 == d2) {
    throw std::domain_error(
        "total_intersection_classes requires distinct discriminants");
  }
  std::vector<Pibqf> cls1 = narrow_class_group(d1);
  std::vector<Pibqf> cls2 = narrow_class_group(d2);
  std::vector<ClassPairCell> out;
  out.reserve(cls1.size() * cls2.size());
  for (const Pibqf& q1 : cls1) {
    for (const Pibqf& q2 : cls2) {
      out.push_back(ClassPairCell{q1, q2, intersection_number(q1, q2)});
    }
  }
  return out;
}

}  // namespace riverlink
