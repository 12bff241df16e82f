#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "wheelzeta/combinatorics.hpp"
#include "wheelzeta/errors.hpp"
#include "wheelzeta/residue_engine.hpp"
#include "wheelzeta/special_functions.hpp"

using namespace wheelzeta;

TEST_CASE("exponent slopes on anchor sectors") {
  CHECK(exponent_slopes(Permutation({1, 2, 3})) == std::vector<int>{0, 0, 2});
  CHECK(exponent_slopes(Permutation({2, 3, 1})) == std::vector<int>{2, -2, 2});
  CHECK(exponent_slopes(Permutation({2, 3, 1, 4})) ==
        std::vector<int>{2, -2, 0, 2});
}

TEST_CASE("slope structure over all of S_6") {
  enumerate_permutations(6, [](const Permutation& sigma) {
    const auto a = exponent_slopes(sigma);
    int sum = 0, plus = 0, minus = 0;
    for (int v : a) {
      CHECK((v == -2 || v == 0 || v == 2));
      sum += v;
      plus += (v == 2);
      minus += (v == -2);
    }
    CHECK(sum == 2);
    CHECK(plus == minus + 1);
    // the radially smallest vertex is the smaller endpoint of both its edges
    CHECK(a[static_cast<std::size_t>(sigma.entry(sigma.size() - 1)) - 1] == 2);
    return true;
  });
}

TEST_CASE("sector weights: identity and anchors") {
  for (int L = 2; L <= 10; ++L)
    CHECK(evaluate_sector(Permutation::identity(L)).n_sigma == 1);

  CHECK(evaluate_sector(Permutation({2, 1, 3})).n_sigma == 2);
  CHECK(evaluate_sector(Permutation({2, 3, 1, 4})).n_sigma == 4);
  CHECK(evaluate_sector(Permutation({4, 2, 1, 3, 5})).n_sigma == 12);
  // (4,1,2,3,5) is the weight-8 partner of the pair above; the nearby
  // ordering (1,4,2,3,5) lands in the weight-4 class instead (the 5-fold
  // quadrature cross-check lives in the oracle tests).
  CHECK(evaluate_sector(Permutation({4, 1, 2, 3, 5})).n_sigma == 8);
  CHECK(evaluate_sector(Permutation({1, 4, 2, 3, 5})).n_sigma == 4);
}

TEST_CASE("divisor ledger over all of S_5") {
  enumerate_permutations(5, [](const Permutation& sigma) {
    const SectorEvaluation e = evaluate_sector(sigma);
    BigCount prod = 1;
    for (int c : e.divisors) {
      CHECK(c > 0);
      CHECK(c % 2 == 0);
      prod *= c / 2;
    }
    CHECK(e.divisors.back() == 2);
    CHECK(prod == e.n_sigma);
    CHECK(BigCount(sector_weight(sigma.span())) == e.n_sigma);
    return true;
  });
}

TEST_CASE("reflection preserves the sector weight") {
  for (int L = 2; L <= 7; ++L)
    enumerate_permutations(L, [](const Permutation& sigma) {
      CHECK(sector_weight(sigma.span()) ==
            sector_weight(reflect(sigma).span()));
      return true;
    });
}

TEST_CASE("class table small cases") {
  const ClassTable t2 = class_table(2);
  REQUIRE(t2.rows.size() == 1);
  CHECK(t2.rows[0].n_s == 1);
  CHECK(t2.rows[0].size == 2);
  CHECK(t2.rows[0].quotient == 2);
  CHECK(t2.rows[0].avoiders == 2);
  CHECK(t2.catalan_number == 2);
  CHECK(t2.sum_check);

  const ClassTable t3 = class_table(3);
  REQUIRE(t3.rows.size() == 2);
  CHECK(t3.rows[0].n_s == 1);
  CHECK(t3.rows[0].size == 4);
  CHECK(t3.rows[1].n_s == 2);
  CHECK(t3.rows[1].size == 2);
  CHECK(t3.rows[1].quotient == 1);
  CHECK(t3.rows[1].avoiders == 1);

  const ClassTable t5 = class_table(5);
  const std::vector<std::vector<std::uint64_t>> want = {
      {1, 16, 16, 16}, {2, 24, 12, 12}, {4, 36, 9, 9}, {8, 32, 4, 4},
      {12, 12, 1, 1}};
  REQUIRE(t5.rows.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(t5.rows[i].n_s == want[i][0]);
    CHECK(t5.rows[i].size == want[i][1]);
    CHECK(t5.rows[i].quotient == want[i][2]);
    CHECK(t5.rows[i].avoiders == want[i][3]);
  }
  CHECK(t5.catalan_number == 42);

  CHECK_THROWS_AS(class_table(1), UsageError);
  CHECK_THROWS_AS(class_table(11), UsageError);
}

TEST_CASE("class table invariants and worker independence") {
  for (int L = 2; L <= 8; ++L) {
    const ClassTable t = class_table(L);
    CHECK(t.sum_check);
    BigCount total = 0, quotients = 0;
    for (const auto& row : t.rows) {
      CHECK(row.size % row.n_s == 0);
      CHECK(row.avoiders == row.quotient);
      total += row.size;
      quotients += row.quotient;
      if (const auto formula = closed_form_N(L, row.n_s))
        CHECK(*formula == row.quotient);
    }
    CHECK(total == BigCount(factorial_u64(L)));
    CHECK(quotients == t.catalan_number);
  }

  // at the default sweep bound: 3.6M sectors, avoiders still sum to C_10
  const ClassTable t10 = class_table(10);
  CHECK(t10.sum_check);
  BigCount avoiders10 = 0;
  for (const auto& row : t10.rows) avoiders10 += row.avoiders;
  CHECK(avoiders10 == 16796);
  CHECK(t10.catalan_number == 16796);

  const ClassTable serial = class_table(6, 1);
  const ClassTable parallel = class_table(6, 4);
  REQUIRE(serial.rows.size() == parallel.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    CHECK(serial.rows[i].n_s == parallel.rows[i].n_s);
    CHECK(serial.rows[i].size == parallel.rows[i].size);
    CHECK(serial.rows[i].avoiders == parallel.rows[i].avoiders);
  }
}

TEST_CASE("closed form quotients") {
  CHECK(*closed_form_N(5, 8) == 4);
  CHECK(*closed_form_N(4, 4) == 2);
  CHECK(*closed_form_N(2, 1) == 2);
  CHECK(*closed_form_N(8, 1) == 128);
  CHECK(!closed_form_N(6, 16).has_value());
  CHECK(!closed_form_N(7, 48).has_value());
  CHECK(*closed_form_N(4, 8) == 0);  // class absent below L = 5
}

TEST_CASE("known multiplicity formulas") {
  for (int L = 3; L <= 8; ++L) {
    const ClassTable t = class_table(L);
    std::map<std::uint64_t, BigCount> size;
    for (const auto& row : t.rows) size[row.n_s] = row.size;
    CHECK(size[2] == BigCount(L - 2) << (L - 2));
    if (L > 3) CHECK(size[4] == (BigCount(L - 3) * (L + 4)) << (L - 4));
  }
}

TEST_CASE("min fraction claims") {
  CHECK(min_fraction(4).n_max == 4);
  CHECK(min_fraction(4).multiplicity == 8);
  CHECK(min_fraction(5).n_max == 12);
  CHECK(min_fraction(5).multiplicity == 12);
  CHECK(min_fraction(6).n_max == 36);
  CHECK(min_fraction(6).multiplicity == 72);
  CHECK(min_fraction(7).n_max == 144);
  CHECK(min_fraction(7).multiplicity == 144);
  CHECK_THROWS_AS(min_fraction(3), DomainError);

  for (int L = 4; L <= 8; ++L) {
    const ClassTable t = class_table(L);
    const MinFraction mf = min_fraction(L);
    CHECK(BigCount(t.rows.back().n_s) == mf.n_max);
    CHECK(t.rows.back().size == mf.multiplicity);
    CHECK(BigCount(sector_weight(min_class_representative(L).span())) ==
          mf.n_max);
  }
}

TEST_CASE("wheel residue") {
  const WheelResidue r3 = wheel_residue(3);
  CHECK(r3.coefficient == 12);
  CHECK(r3.pi_power == 6);
  CHECK(r3.zeta_argument == 3);
  const double expected3 =
      12.0 * std::pow(std::numbers::pi, 6) * zeta_odd(3);
  CHECK(r3.numeric == doctest::Approx(expected3).epsilon(1e-12));

  CHECK(wheel_residue(4).coefficient == 40);
  CHECK(wheel_residue(4).zeta_argument == 5);
  CHECK(wheel_residue(5).coefficient == 140);
  CHECK(wheel_residue(5).pi_power == 10);
  CHECK(wheel_residue(5).zeta_argument == 7);

  CHECK_THROWS_AS(wheel_residue(2), DomainError);
  CHECK_THROWS_AS(wheel_residue(0), DomainError);

  // the sector-sum route must agree exactly (cross_check throws otherwise)
  for (int n = 3; n <= 7; ++n) CHECK_NOTHROW(wheel_residue(n, true));
}
