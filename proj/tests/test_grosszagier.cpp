// riverlink: unit tests for the exact counting formulas — index ranges,
// epsilon symbol, per-index counts, and total intersection numbers by
// formula and by class-pair summation.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "riverlink/grosszagier.hpp"
#include "riverlink/intersect.hpp"

namespace {

using riverlink::Integer;
using riverlink::Pibqf;

std::vector<Integer> divisors_of(const Integer& m) {
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    out.push_back(d);
    if (d * d != m) out.push_back(m / d);
  }
  return out;
}

}  // namespace

TEST_SUITE("grosszagier") {
  TEST_CASE("s_range enumerates the parity-matched index window") {
    auto r = riverlink::s_range(5, 136);
    REQUIRE(r.size() == 27);
    CHECK(r.front() == -26);
    CHECK(r.back() == 26);
    for (std::size_t i = 0; i < r.size(); ++i) {
      CHECK(r[i] % 2 == 0);
      if (i > 0) CHECK(r[i] == r[i - 1] + 2);
      CHECK(r[i] * r[i] < 680);
    }
    // Square product: the bound itself is excluded.
    auto rs = riverlink::s_range(5, 5);
    REQUIRE(rs.size() == 4);
    CHECK(rs[0] == -3);
    CHECK(rs[1] == -1);
    CHECK(rs[2] == 1);
    CHECK(rs[3] == 3);
    auto r8 = riverlink::s_range(5, 8);
    REQUIRE(r8.size() == 7);
    CHECK(r8[0] == -6);
    CHECK(r8[3] == 0);
    CHECK_THROWS_AS(riverlink::s_range(5, 7), std::invalid_argument);
    CHECK_THROWS_AS(riverlink::s_range(5, 9), std::invalid_argument);
    CHECK_THROWS_AS(riverlink::s_range(-4, 5), std::invalid_argument);
  }

  TEST_CASE("epsilon values and scope") {
    CHECK(riverlink::epsilon(5, 136, 1) == 1);
    CHECK(riverlink::epsilon(5, 136, 13) == -1);   // kronecker(5, 13) = -1
    CHECK(riverlink::epsilon(5, 136, 169) == 1);   // square of the above
    CHECK(riverlink::epsilon(5, 136, 5) == 1);     // kronecker(136, 5) = 1
    CHECK(riverlink::epsilon(5, 136, 29) == 1);
    CHECK(riverlink::epsilon(5, 136, 145) == 1);
    CHECK(riverlink::epsilon(5, 136, 11) == 1);
    CHECK(riverlink::epsilon(5, 136, 7) == -1);
    CHECK(riverlink::epsilon(5, 136, 89) == 1);
    // Both kronecker values vanish only if the pair shares a factor, which
    // is out of scope; a prime inert in both fields is also out of scope.
    CHECK_THROWS_AS(riverlink::epsilon(5, 13, 11), std::domain_error);
    CHECK_THROWS_AS(riverlink::epsilon(8, 12, 1), std::domain_error);
    CHECK_THROWS_AS(riverlink::epsilon(5, 45, 1), std::domain_error);
  }

  TEST_CASE("p_count table for discriminants 5 and 136") {
    // Hand-computed from the factorizations of (680 - n^2) / 4.
    auto expect = [](const Integer& n) -> std::int64_t {
      Integer a = n < 0 ? -n : n;
      if (a == 2) return 2;    // m = 169 = 13^2, eps(13) = -1, even power
      if (a == 10) return 8;   // m = 145 = 5 * 29, both eps +1
      if (a == 14) return 6;   // m = 121 = 11^2, eps(11) = +1
      if (a == 18) return 4;   // m = 89 prime, eps = +1
      if (a == 22) return 2;   // m = 49 = 7^2, eps(7) = -1, even power
      if (a == 26) return 2;   // m = 1
      return 0;
    };
    std::int64_t total = 0;
    for (const Integer& n : riverlink::s_range(5, 136)) {
      auto prof = riverlink::p_count(5, 136, n);
      CHECK(prof.n == n);
      CHECK(prof.m == (680 - n * n) / 4);
      CHECK(prof.value == expect(n));
      CHECK(prof.value % 2 == 0);
      CHECK(prof.value >= 0);
      // Factor classes multiply back to m and decide the value.
      Integer prod = 1;
      bool dead = false;
      std::int64_t alive = 2;
      for (const auto& fc : prof.factor_classes) {
        REQUIRE((fc.eps == 1 || fc.eps == -1));
        Integer pe = 1;
        for (unsigned k = 0; k < fc.e; ++k) pe *= fc.p;
        prod *= pe;
        if (fc.eps == -1 && fc.e % 2 == 1) dead = true;
        if (fc.eps == 1) alive *= fc.e + 1;
      }
      CHECK(prod == prof.m);
      CHECK(prof.value == (dead ? 0 : alive));
      // Independent divisor-sum form: 2 * sum over d | m of epsilon(d).
      std::int64_t dsum = 0;
      for (const Integer& d : divisors_of(prof.m)) {
        dsum += riverlink::epsilon(5, 136, d);
      }
      CHECK(prof.value == 2 * dsum);
      total += prof.value;
    }
    CHECK(total == 48);
  }

  TEST_CASE("p_count scope violations") {
    CHECK_THROWS_AS(riverlink::p_count(5, 136, 3), std::domain_error);
    CHECK_THROWS_AS(riverlink::p_count(5, 136, 28), std::domain_error);
    CHECK_THROWS_AS(riverlink::p_count(5, 136, -28), std::domain_error);
    CHECK_THROWS_AS(riverlink::p_count(5, 5, 1), std::domain_error);
    CHECK_THROWS_AS(riverlink::p_count(8, 12, 0), std::domain_error);
    CHECK_THROWS_AS(riverlink::p_count(5, 45, 1), std::domain_error);
  }

  TEST_CASE("totals by formula") {
    CHECK(riverlink::total_intersection_formula(5, 136) == 48);
    CHECK(riverlink::total_intersection_formula(136, 5) == 48);
    CHECK(riverlink::total_intersection_formula(5, 12) == 8);
    CHECK(riverlink::total_intersection_formula(5, 13) == 8);
    CHECK(riverlink::total_intersection_formula(13, 5) == 8);
    CHECK_THROWS_AS(riverlink::total_intersection_formula(5, 5),
                    std::domain_error);
    CHECK_THROWS_AS(riverlink::total_intersection_formula(8, 12),
                    std::domain_error);
    CHECK_THROWS_AS(riverlink::total_intersection_formula(5, 45),
                    std::domain_error);
  }

  TEST_CASE("totals by class-pair summation") {
    CHECK(riverlink::total_intersection_classes(5, 136) == 48);
    CHECK(riverlink::total_intersection_classes(136, 5) == 48);
    CHECK(riverlink::total_intersection_classes(5, 12) == 8);
    CHECK(riverlink::total_intersection_classes(5, 13) == 8);
    CHECK_THROWS_AS(riverlink::total_intersection_classes(5, 5),
                    std::domain_error);
    // Outside formula scope the summation route still works.
    std::int64_t v812 = riverlink::total_intersection_classes(8, 12);
    CHECK(v812 >= 8);  // two class pairs, each at least 4
    CHECK(v812 % 2 == 0);
    std::int64_t v545 = riverlink::total_intersection_classes(5, 45);
    CHECK(v545 >= 4);
    CHECK(v545 % 2 == 0);
  }

  TEST_CASE("class-pair table breakdown") {
    auto table = riverlink::class_pair_table(5, 136);
    auto g1 = riverlink::narrow_class_group(5);
    auto g2 = riverlink::narrow_class_group(136);
    REQUIRE(table.size() == g1.size() * g2.size());
    REQUIRE(table.size() == 4);
    std::int64_t sum = 0;
    std::vector<std::int64_t> values;
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& cell = table[i];
      CHECK(cell.q1 == g1[i / g2.size()]);
      CHECK(cell.q2 == g2[i % g2.size()]);
      CHECK(cell.value ==
            riverlink::intersection_number(cell.q1, cell.q2));
      CHECK(cell.value % 2 == 0);
      CHECK(cell.value >= 4);
      sum += cell.value;
      values.push_back(cell.value);
    }
    CHECK(sum == 48);
    std::sort(values.begin(), values.end());
    CHECK(values == std::vector<std::int64_t>{8, 8, 16, 16});
  }

  TEST_CASE("non-fundamental large discriminant by the summation route") {
    // 1000004 = 4 * 250001 with 250001 = 1 (mod 4), so the formula route is
    // out of scope but the class-group route still applies.
    CHECK_FALSE(riverlink::is_fundamental_discriminant(1000004));
    auto group = riverlink::narrow_class_group(1000004);
    CHECK(group.size() == 52);
    CHECK(riverlink::total_intersection_classes(5, 1000004) == 1640);
    CHECK_THROWS_AS(riverlink::total_intersection_formula(5, 1000004),
                    std::domain_error);
  }
}
