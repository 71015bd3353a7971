#include "doctest.h"
#include "support.hpp"

#include "quintic/mirror.hpp"

using namespace quintic;

namespace {

Rat hypergeometric(int d) { return factorial(5 * d) / pow(factorial(d), 5); }

}  // namespace

TEST_CASE("I0 and I1 closed forms") {
  IData D = build_idata(12);
  CHECK(D.i0[1] == 120);
  CHECK(D.i0[2] == 113400);
  for (int d = 0; d <= 12; ++d) {
    CHECK(D.i0[d] == hypergeometric(d));
    Rat h = 0;
    for (int k = d + 1; k <= 5 * d; ++k) h += rat(5, k);
    CHECK(D.i1[d] == hypergeometric(d) * h);
  }
  CHECK(D.tau[1] == 770);
  CHECK(D.i0[0] == 1);
  CHECK(D.i11[0] == 1);
  CHECK(D.lser[0] == 1);
}

TEST_CASE("L^5 (1 - 3125 q) = 1") {
  IData D = build_idata(15);
  QSeries base = QSeries::constant(1, 15) - QSeries::monomial(3125, 1, 15);
  CHECK(D.lser.pow(5) * base == QSeries::constant(1, 15));
}

TEST_CASE("diagonal identities") {
  CHECK_REPORT(check_diagonal(build_idata(0)));
  CHECK_REPORT(check_diagonal(build_idata(20)));
  // Hand expansion at q^1: I22 = 1 + c q with 2*120 + 2*[q]I11 + c = 3125.
  IData D = build_idata(1);
  const Rat i11 = D.i11[1];
  CHECK(i11 == 770);
  CHECK(D.ikk[2][1] == 3125 - 240 - 2 * i11);
}

TEST_CASE("operator route reproduces I0 and I11") {
  auto z = zazi_diagonal(8);
  IData D = build_idata(8);
  CHECK(z[0] == D.i0);
  CHECK(z[1] == D.i11);
  CHECK(z[3] == z[1]);
  CHECK(z[4] == D.i0);
}

TEST_CASE("modified I-function") {
  ITilde it = itilde(3, 6);
  for (int a = 0; a < 5; ++a) {
    CHECK(it.restrict(0, 0, a) == CycNum(1));
    for (int n = 1; n <= 6; ++n) CHECK(it.restrict(0, n, a).is_zero());
  }
  // d = 1, alpha = 0, lambda = 1: 5 w prod_{k=1}^4 (k + 5w) / ((1 + w)^5 - w^5) with w = 1/z.
  const int W = 6;
  QSeries num = QSeries::monomial(5, 1, W);
  for (int k = 1; k <= 4; ++k) {
    QSeries lin(W);
    lin[0] = k;
    lin[1] = 5;
    num *= lin;
  }
  QSeries den(W);
  for (int j = 0; j <= 4; ++j) den[j] = binomial(5, j);
  QSeries f = num / den;
  for (int n = 0; n <= W; ++n) CHECK(it.restrict(1, n, 0) == CycNum(f[n]));
}

TEST_CASE("J at H_delta") {
  CHECK(j_at_Hdelta(3) == std::vector<Rat>{1});
  CHECK(j_at_Hdelta(5) == std::vector<Rat>{1});
  CHECK(j_at_Hdelta(6) == std::vector<Rat>{1, rat(-15000, 311)});
  for (int d = 1; d <= 5; ++d) CHECK(j_at_Hdelta(d) == std::vector<Rat>{1});
  for (int d = 1; d <= 30; ++d) {
    auto j = j_at_Hdelta(d);
    CHECK(static_cast<int>(j.size()) - 1 == (d - 1) / 5);
    CHECK(j.back() != 0);
  }
  CHECK_THROWS(j_at_Hdelta(0));
}

TEST_CASE("generators under realization") {
  IData D = build_idata(8);
  Realizer re(D);
  CHECK(re(GenPoly::var(kZ) - GenPoly::mono(1, -5)).is_zero());
  // [q] log(I0 / L) = 120 - 625 and d/du = (1/L) qdq
  CHECK(re.X1[1] == -505);
  // Z_1 = (1/L) qdq(log L) + 1/(5L) = L^4 / 5
  QSeries z1 = re.Linv * qdq(log(D.lser)) + re.Linv * rat(1, 5);
  CHECK(z1 == re.L.pow(4) * rat(1, 5));
  CHECK(re(zcal(1)) == z1);
}
