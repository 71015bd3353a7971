#include "doctest.h"
#include "support.hpp"

#include <algorithm>

#include "quintic/hae.hpp"
#include "quintic/oscpf.hpp"

using namespace quintic;

namespace {

const GenPoly X = GenPoly::var(kX1), X2 = GenPoly::var(kX2), Y = GenPoly::var(kY);

const RMatrix& rmat() {
  static const RMatrix R = r_matrix(10, row0_entries(10));
  return R;
}

MatG single(int i, int j, const Rat& c) {
  MatG m;
  m[i][j] = GenPoly(c);
  return m;
}

bool only_entries(const MatG& m, std::vector<std::pair<int, int>> at, const Rat& c) {
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      bool want = std::find(at.begin(), at.end(), std::pair{i, j}) != at.end();
      if (m[i][j] != GenPoly(want ? c : Rat(0))) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("Delta of the basis derivations") {
  DeltaMap d0 = delta_of(Derivation::basis(0));
  REQUIRE(d0.c.size() == 1);
  REQUIRE(d0.c.count({0, 0}) == 1);
  CHECK(only_entries(d0.c.at({0, 0}), {{1, 1}}, rat(1, 5)));

  DeltaMap d1 = delta_of(Derivation::basis(1));
  REQUIRE(d1.c.size() == 1);
  CHECK(only_entries(d1.c.at({0, 0}), {{0, 2}, {2, 0}}, rat(1, 5)));

  for (int i = 0; i < 4; ++i) {
    auto from = delta_from_lambda(lambda_of(Derivation::basis(i)));
    REQUIRE(from.has_value());
    CHECK(*from == delta_of(Derivation::basis(i)));
  }
}

TEST_CASE("Lambda of d/dX3") {
  LambdaMap l = lambda_of(Derivation::basis(3));
  for (int p = 0; p < 3; ++p) CHECK(l.c[p] == MatG{});
  CHECK(l.c[3] == single(0, 3, 1));
  CHECK_REPORT(check_lambda_properties());
}

TEST_CASE("property: Lambda is linear over the ring") {
  for (int t = 0; t < 10; ++t) {
    std::array<GenPoly, 4> g;
    for (auto& c : g) c = qt::random_homogeneous(qt::uniform(0, 2), 3);
    Derivation d{g[0], g[1], g[2], g[3]};
    LambdaMap l = lambda_of(d);
    for (int p = 0; p < 4; ++p)
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
          GenPoly s;
          for (int b = 0; b < 4; ++b) s += g[b] * lambda_of(Derivation::basis(b)).c[p][i][j];
          CHECK(l.c[p][i][j] == s);
          if (j <= i) CHECK(l.c[p][i][j].is_zero());
        }
  }
}

TEST_CASE("PDEs for R, V and S") {
  CHECK_REPORT(verify_r_pdes(rmat(), 10));
  CHECK_REPORT(verify_v_pdes(rmat(), 7));
  for (int d = 1; d <= 10; ++d) {
    INFO("delta = " << d);
    CHECK_REPORT(verify_s_delta_pdes(s_delta(d)));
  }
  EdgeKernel v = edge_kernel(r_matrix(6, row0_entries(6)));
  CHECK(v.divisible);
  CHECK(v.remainder.empty());
}

TEST_CASE("divisor equation") {
  Fixtures fx = fixtures();
  CHECK(divisor_shift(fx.f03, 0, 3) == X - Rat(3) * Y);
  CHECK(divisor_shift(GenPoly(), 2, 0).is_zero());
  CHECK_THROWS(divisor_shift(X + GenPoly(1), 0, 4));
  CHECK_THROWS(divisor_shift(X, 0, 3));
  // Hand expansion: du X = X2, and the shift adds -(Y - X) X.
  CHECK(divisor_shift(X, 0, 4) == X2 - Rat(4) * (Y - X) * X - Rat(2) * X * X);
  GenPoly f12 = fx.f12();
  CHECK(f12.is_homogeneous(2));
  CHECK(f12.coeff(Mono{{0, 0, 0, 1, 0, 0}}) == rat(-25, 3));
  CHECK(f12.coeff(Mono{{1, 1, 0, 0, 0, 1}}) * 5 == rat(125, 12));
  CHECK(f12 - fx.f12_printed == (rat(125, 12) - rat(125, 2)) * (Y - X) * zcal(1));
}

TEST_CASE("property: divisor shift raises the degree") {
  for (int t = 0; t < 30; ++t) {
    const int g = qt::uniform(0, 2), n = qt::uniform(0, 3);
    const int d = 3 * g - 3 + n;
    if (d < 0) continue;
    GenPoly f = qt::random_homogeneous(d, 3);
    GenPoly s = divisor_shift(f, g, n);
    CHECK((s.is_zero() || s.is_homogeneous(d + 1)));
  }
}

TEST_CASE("genus two") {
  Fixtures fx = fixtures();
  CHECK_REPORT(check_fixtures(fx));
  CHECK_REPORT(hae_check(fx));
  CHECK_REPORT(yy_reduced_hae(fx));
  // Spot coefficients of d_Y F2 against hand expansion of the right-hand side.
  GenPoly dY = partial(fx.f20, kY);
  CHECK(dY.coeff(Mono{{0, 0, 0, 0, 0, 2}}) == -(rat(1, 2) * 1 + rat(1, 2) * rat(1, 4)));
  CHECK(dY.coeff(Mono{{0, 0, 1, 0, 0, 1}}) == rat(-115, 12));
  CHECK(dY.coeff(Mono{{1, 1, 1, 0, 0, 0}}) * 5 == rat(-875, 9));
}

TEST_CASE("orbifold regularity at genus two") {
  OrbifoldResult r = orbifold_regularity(fixtures().f20, 2);
  CHECK(r.limit_exists);
  CHECK(r.a[0] == 0);
  CHECK(r.a.size() >= 2);
  CHECK(r.a[1] == rat(547, 150));
  CHECK_REPORT(r.report);
  CHECK_THROWS(orbifold_regularity(X, 2));
}

TEST_CASE("erratum ledger") {
  auto e = erratum_ledger();
  CHECK(e.size() >= 3);
  for (const auto& x : e) CHECK_FALSE(x.id.empty());
}
