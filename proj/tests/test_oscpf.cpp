#include "doctest.h"
#include "support.hpp"

#include "quintic/cyclotomic.hpp"
#include "quintic/oscpf.hpp"
#include "quintic/qde.hpp"

using namespace quintic;

TEST_CASE("Picard-Fuchs operators") {
  CHECK(pf_operators(5) == printed_operators_m5());
  CHECK(pf_operators(2).size() == 1);
  CHECK_THROWS(pf_operators(1));
  for (int m = 2; m <= 9; ++m) {
    INFO("m = " << m);
    auto ops = pf_operators(m);
    CHECK(ops.size() == static_cast<size_t>(m - 1));
    CHECK(ops[0] == printed_general_D1(m));
    CHECK(ops[0].terms.at({-1, 2}) == XPoly{rat(m - 1, 2)});
    if (m >= 3) CHECK(ops[1] == printed_general_D2(m));
  }
}

TEST_CASE("X polynomials") {
  // D X = X (1 - X)
  CHECK(xp_D({0, 1}) == XPoly{0, 1, -1});
  CHECK(xp_eval({1, 2, 3}, 2) == 17);
  // 1 - X = L^m
  CHECK(xp_to_lm({1, -1}) == std::vector<Rat>{0, 1});
}

TEST_CASE("Bernoulli seed") {
  auto s = bernoulli_seed(5, 0, 10);
  for (int k = 1; k <= 4; ++k) CHECK(s[k] == 0);
  for (int k = 6; k <= 9; ++k) CHECK(s[k] == 0);
  CHECK(s[5] == bernoulli_numbers(6)[6] / 6);
  CHECK(s[5] == rat(1, 252));
  for (int m = 2; m <= 7; ++m) CHECK(bernoulli_seed(m, m, 3 * m) == bernoulli_seed(m, 0, 3 * m));
}

TEST_CASE("stationary-phase coefficients") {
  RSequence s = r_sequence(5, 0, 10);
  CHECK(s.p[0] == XPoly{1});
  CHECK(s.p[1] == XPoly{rat(-3, 20), rat(3, 20)});
  CHECK(s.solve_consistent);
  CHECK_REPORT(certify_r_sequence(s));
  for (int m : {3, 4, 6, 7}) {
    INFO("m = " << m);
    CHECK_REPORT(certify_r_sequence(r_sequence(m, 0, 4)));
  }
  // m = 2 has no cubic term in D_1, so every correction vanishes.
  RSequence s2 = r_sequence(2, 0, 4);
  for (int k = 1; k <= 4; ++k) {
    XPoly p = s2.p[k];
    xp_trim(p);
    CHECK(p.empty());
  }
  CHECK_REPORT(certify_r_sequence(r_sequence(5, 1, 10)));
  CHECK_THROWS(r_sequence(5, 2, 3));
}

TEST_CASE("m-polynomiality and the degree corollary") {
  CHECK_REPORT(certify_m_polynomiality(3));
  CHECK_REPORT(certify_zazi_corollary(10));
}

TEST_CASE("row 0 placement") {
  auto row = row0_entries(10);
  CHECK(row[0] == GenPoly(1));
  RMatrix R = r_matrix(10, row);
  for (int k = 0; k <= 10; ++k)
    for (int j = 0; j < 5; ++j) {
      if ((k + j) % 5 == 0)
        CHECK(R.m[0][j][k] == row[k]);
      else
        CHECK(R.m[0][j][k].is_zero());
    }
  CHECK_FALSE(R.m[0][4][1].is_zero());
  CHECK_FALSE(R.m[0][0][5].is_zero());
  for (int k = 0; k <= 10; ++k) CHECK(row[k].free_of(kX1));
}

TEST_CASE("Hessian identities") {
  for (int m = 2; m <= 7; ++m) {
    INFO("m = " << m);
    HessianResult h = hessian_psi_check(m);
    CHECK_REPORT(h.report);
    CHECK(h.numerator_constant == -m);
    CHECK(h.detQinv_sign == -1);
  }
  CHECK_THROWS(hessian_psi_check(1));
}

TEST_CASE("Birkhoff constants") {
  BirkhoffConstants b = birkhoff_constants(5, 7);
  // B_2 / 2 * (sum_{j=1}^4 1 / (1 - zeta^j) - 1/5)
  CycNum s;
  for (int j = 1; j <= 4; ++j) s += (CycNum(1) - CycNum::zeta_pow(j)).inverse();
  CHECK(s == CycNum(2));
  const Rat c1 = bernoulli_numbers(2)[2] / 2 * (2 - rat(1, 5));
  CHECK(c1 == rat(3, 20));
  auto F = std::make_shared<const CycField>(5);
  for (int a = 0; a < 5; ++a) {
    CHECK(b.log_c[a][1] == Cyc(F, c1) * Cyc::zeta_pow(F, -a));
    for (int j = 0; j <= 7; j += 2) CHECK(b.log_c[a][j].is_zero());
    for (int j = 1; j <= 7; ++j) CHECK(b.log_c[a][j] == b.log_c[0][j] * Cyc::zeta_pow(F, -static_cast<long>(a) * j));
  }
}
