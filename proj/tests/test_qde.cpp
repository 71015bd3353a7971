#include "doctest.h"
#include "support.hpp"

#include "quintic/mirror.hpp"
#include "quintic/oscpf.hpp"
#include "quintic/qde.hpp"

using namespace quintic;

namespace {

const IData& data() {
  static const IData d = build_idata(8);
  return d;
}

const RMatrix& rmat() {
  static const RMatrix R = r_matrix(10, row0_entries(10));
  return R;
}

}  // namespace

TEST_CASE("quantum product") {
  AMatrix A = quantum_product(data());
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(A.a[i][j][0] == (i == (j + 1) % 5 ? 1 : 0));
  CHECK_REPORT(check_quantum_product(A, data()));
  // A is cyclic with entries I_kk, so det(x - A) = x^5 - prod I_kk.
  AMatrix A3 = quantum_product(build_idata(3));
  auto c = char_poly(A3);
  QSeries prod = QSeries::constant(1, 3);
  for (int k = 1; k <= 5; ++k) prod *= A3.a[k % 5][k - 1];
  CHECK(c[0] == QSeries::constant(1, 3));
  for (int k = 1; k <= 4; ++k) CHECK(c[k].is_zero());
  CHECK(c[5] == -prod);
  CHECK(prod == build_idata(3).lser.pow(5));
}

TEST_CASE("S-matrix") {
  AMatrix A = quantum_product(build_idata(4));
  SMatrix S = s_matrix(A, 4);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      CHECK(S.s[0][0][i][j] == (i == j ? 1 : 0));
      for (int n = 1; n <= 4; ++n) CHECK(S.s[n][0][i][j] == 0);
    }
  CHECK_REPORT(check_s_matrix(S, A));
}

TEST_CASE("specialized S-matrix") {
  for (int d = 1; d <= 5; ++d) CHECK(s_delta(d).s[0] == GenPoly::mono(1, -(d - 1)));
  SDelta s6 = s_delta(6);
  CHECK(s6.s[0].max_exponent(kZ) == 1);
  for (int d = 1; d <= 12; ++d) {
    INFO("delta = " << d);
    SDelta sd = s_delta(d);
    CHECK_REPORT(check_s_delta(sd));
    CHECK(sd.s[5] == GenPoly::mono(1, 5, 1) * sd.s[0]);
  }
  CHECK_THROWS(s_delta(0));
}

TEST_CASE("R-matrix examples") {
  const RMatrix& R = rmat();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(R.m[i][j][0] == GenPoly(i == j ? 1 : 0));
  // One recursion step: m[1][0][1] = m[0][4][1] + du m[0][0][0] - X m[0][0][0],
  // with m[0][4][1] = Linv p1_1(1 - Z) and p1_1 = p_1 = (3/20)(X - 1).
  GenPoly X = GenPoly::var(kX1);
  CHECK(R.m[0][4][1] == rat(-3, 20) * GenPoly::mono(1, 1, 1));
  CHECK(R.m[1][0][1] == -X - rat(3, 20) * GenPoly::mono(1, 1, 1));
  CHECK_REPORT(check_r_matrix(R));
  for (int n = 0; n <= 3; ++n) CHECK(symplectic_defects(R, n) == 0);
}

TEST_CASE("property: R-matrix grading, mod-5 vanishing and membership") {
  const RMatrix& R = rmat();
  for (int k = 0; k <= R.zorder; ++k)
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        const GenPoly& e = R.m[i][j][k];
        if (((k - i + j) % 5 + 5) % 5 != 0) {
          CHECK(e.is_zero());
          continue;
        }
        if (e.is_zero()) continue;
        CHECK(e.is_homogeneous(k));
        CHECK(in_R(e).ok);
      }
  for (int n = 0; n <= R.zorder; ++n) CHECK(symplectic_defects(R, n) == 0);
}

TEST_CASE("two routes to row 4") {
  RMatrix R = r_matrix(8, row0_entries(8));
  CHECK_REPORT(check_two_route(R, row4_prediction(8), 8));
  CHECK_THROWS(r_matrix(9, row0_entries(8)));
}

TEST_CASE("Birkhoff constants cancel from the seed") { CHECK_REPORT(birkhoff_cancellation(6)); }

TEST_CASE("TQFT values") {
  // printed trace
  TqftValue p = tqft_omega(0, {0, 0, 0}, TqftTrace::printed);
  CHECK(p.coeff == 5);
  CHECK(p.lambda_pow == -3);
  CHECK(p.i0l_pow == -2);
  CHECK(tqft_omega(0, {1, 1, 0}, TqftTrace::printed).coeff == 0);
  // canonical trace
  CHECK(tqft_omega(0, {0, 0, 0}).coeff == 0);
  CHECK(tqft_omega(0, {1, 1, 1}).coeff == 5);
  CHECK(tqft_omega(0, {1, 1, 0}).coeff == 0);
  TqftValue w = tqft_omega(1, {0});
  CHECK(w.coeff == 5);
  CHECK(w.lambda_pow == 0);
  CHECK(w.i0l_pow == 0);
  CHECK_THROWS(tqft_omega(0, {0, 0}));
  // The canonical trace agrees with the idempotent computation.
  for (int g = 0; g <= 2; ++g)
    for (int n = 1; n <= 3; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      for (int t = 0; t < 8; ++t) {
        std::vector<int> ins;
        for (int i = 0; i < n; ++i) ins.push_back(qt::uniform(0, 4));
        TqftValue a = tqft_omega(g, ins), b = tqft_omega_from_idempotents(g, ins);
        CHECK(a.coeff == b.coeff);
        if (a.coeff != 0) {
          CHECK(a.lambda_pow == b.lambda_pow);
          CHECK(a.i0l_pow == b.i0l_pow);
        }
      }
    }
}

TEST_CASE("canonical coordinates") {
  const IData& D = data();
  for (int a = 0; a < 5; ++a) {
    CanonicalCoord u = canonical_coords(D, a);
    CHECK(u.prefactor == CycNum::zeta_pow(a));
    CHECK(qdq(u.series)[0] == 0);
    CHECK(u.series[1] == 625);
    CHECK(qdq(u.series) == D.lser - QSeries::constant(1, D.order));
    CHECK(u.logq_coeff == 0);
    CHECK(canonical_coords(D, a, true).logq_coeff == 1);
  }
}

TEST_CASE("state bases") { CHECK_REPORT(check_state_bases(data())); }
