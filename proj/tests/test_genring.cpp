#include "doctest.h"
#include "support.hpp"

#include "quintic/genpoly.hpp"
#include "quintic/mirror.hpp"
#include "quintic/suites.hpp"

using namespace quintic;

namespace {

const GenPoly X = GenPoly::var(kX1), X2 = GenPoly::var(kX2), X3 = GenPoly::var(kX3), Y = GenPoly::var(kY);
const GenPoly Zv = GenPoly::var(kZ), Linv = GenPoly::linv();

const IData& data15() {
  static const IData d = build_idata(15);
  return d;
}

}  // namespace

TEST_CASE("du on generators") {
  CHECK(du(X) == X2);
  CHECK(du(X2) == X3);
  CHECK(du(GenPoly::mono(1, -1)) == rat(1, 5) * (Zv - GenPoly(1)));
  CHECK(du(GenPoly(1)).is_zero());
  CHECK(du(Y) == du_Y());
  CHECK(du_Y() == Rat(-3) * X2 - Y * Y - X * X + rat(-3, 5) * Linv.pow(2) * Zv * (Zv - GenPoly(1)));
  // Printed rule for L^-a Z^b
  for (int a = -2; a <= 4; ++a)
    for (int b = 0; b <= 3; ++b) {
      GenPoly m = GenPoly::mono(1, a, b);
      CHECK(du(m) == rat(5 * b - a, 5) * m * Linv * (Zv - GenPoly(1)));
    }
}

TEST_CASE("du raises the degree by one") {
  for (int t = 0; t < 60; ++t) {
    const int d = qt::uniform(0, 5);
    GenPoly f = qt::random_homogeneous(d);
    if (f.is_zero()) continue;
    GenPoly g = du(f);
    CHECK((g.is_zero() || g.is_homogeneous(d + 1)));
  }
}

TEST_CASE("property: realization is compatible with du") {
  const IData& D = data15();
  Realizer re(D);
  int n = 0;
  for (int t = 0; t < 200; ++t) {
    GenPoly f = qt::random_homogeneous(qt::uniform(0, 4));
    CHECK(re(du(f)) * re.L == qdq(re(f)));
    ++n;
  }
  CHECK(n == 200);
  CHECK(re(du_Y()) * re.L == qdq(re.Y));
  CHECK(re(du_X3()) * re.L == qdq(re.X3));
  CHECK_REPORT(check_realization(D, 4));
}

TEST_CASE("Z_k closed forms") {
  CHECK(zcal(1) == rat(1, 5) * Zv * Linv);
  CHECK(zcal(2) == rat(4, 25) * (Zv * Zv * Linv.pow(2) - Zv * Linv.pow(2)));
  CHECK(zcal(3) == rat(4, 125) * Linv.pow(3) * (Rat(8) * Zv.pow(3) - Rat(11) * Zv * Zv + Rat(3) * Zv));
  for (int k = 1; k <= 6; ++k) CHECK(zcal(k).is_homogeneous(k));
  CHECK_THROWS(zcal(0));
  Realizer re(data15());
  QSeries z = re.Linv * qdq(log(data15().lser)) + re.Linv * rat(1, 5);
  for (int k = 1; k <= 4; ++k) {
    CHECK(re(zcal(k)) == z);
    z = re.Linv * qdq(z);
  }
}

TEST_CASE("membership in R") {
  CHECK(in_R(Zv * Linv).ok);
  CHECK_FALSE(in_R(Linv).ok);
  CHECK(in_R(Linv).violations.size() == 1);
  CHECK(in_R(Zv.pow(3) * Linv.pow(3)).ok);
  CHECK(in_R(X * Y + X3).ok);
}

TEST_CASE("R is closed under du") {
  int tested = 0;
  for (int d = 0; d <= 5; ++d)
    for (int a = 0; a <= d; ++a)
      for (int b = 0; b <= a; ++b) {
        if (a > 5 * b) continue;
        const int rest = d - a;
        for (int x3 = 0; 3 * x3 <= rest; ++x3)
          for (int x2 = 0; 3 * x3 + 2 * x2 <= rest; ++x2)
            for (int x1 = 0; 3 * x3 + 2 * x2 + x1 <= rest; ++x1) {
              const int y = rest - 3 * x3 - 2 * x2 - x1;
              GenPoly m = GenPoly::mono(1, a, b, x1, x2, x3, y);
              CHECK(in_R(du(m)).ok);
              ++tested;
            }
      }
  CHECK(tested > 100);
}

TEST_CASE("Yamaguchi-Yau generators") {
  // YY slots: (x1, x2, x3, y) = (U, V2, V3, V)
  CHECK(to_yy(X) == GenPoly::var(kX1));
  CHECK(to_yy(X + Y) == GenPoly::var(kY));
  CHECK(to_yy(yy_V2()) == GenPoly::var(kX2));
  CHECK(to_yy(yy_V3()) == GenPoly::var(kX3));
  CHECK(from_yy(GenPoly::var(kY)) == yy_V());
  CHECK(yy_V2() == X2 - X * Y);
  CHECK(yy_V2() == du(yy_U()) + yy_U() * yy_U() - yy_U() * yy_V());
  CHECK(yy_V3() == du(yy_V2()) + yy_V() * yy_V2());
  for (int t = 0; t < 40; ++t) {
    GenPoly f = qt::random_homogeneous(qt::uniform(0, 4));
    CHECK(from_yy(to_yy(f)) == f);
  }
}

TEST_CASE("differential relations of the YY generators") {
  GenPoly V = yy_V(), V2 = yy_V2(), V3 = yy_V3(), z = zcal(1);
  CHECK(du(V) == Rat(-2) * V2 - V * V - rat(15, 4) * zcal(2));
  CHECK(du(V2) == V3 - V * V2);
  CHECK(du(V3) == V2 * V2 - rat(23, 24) * zcal(4) + rat(29, 9) * z * z * zcal(2) - rat(65, 72) * z * zcal(3) -
                      rat(3, 4) * zcal(2) * zcal(2));
  // du Y stated with Z_2 agrees with the L, Z form.
  CHECK(du_Y() == Rat(-3) * X2 - Y * Y - X * X - rat(15, 4) * zcal(2));
}

TEST_CASE("derivation basis") {
  CHECK(apply_derivation(Derivation::basis(3), X3) == GenPoly(1));
  CHECK(apply_derivation(Derivation::basis(1), X2) == -(X - Y));
  CHECK(apply_derivation(Derivation::basis(0), X).is_zero());
  CHECK(apply_derivation(Derivation::basis(0), Y) == GenPoly(1));
  for (int i = 0; i < 4; ++i) {
    Derivation d = Derivation::basis(i);
    CHECK(Derivation::from_coords(d.coords()) == d);
    for (int t = 0; t < 10; ++t) {
      GenPoly f = qt::random_homogeneous(qt::uniform(0, 3)), g = qt::random_homogeneous(qt::uniform(0, 3));
      CHECK(d.apply(f * g) == d.apply(f) * g + f * d.apply(g));
    }
  }
  // The bracket acts as the commutator.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Derivation a = Derivation::basis(i), b = Derivation::basis(j), c = bracket(a, b);
      for (int t = 0; t < 5; ++t) {
        GenPoly f = qt::random_homogeneous(qt::uniform(1, 4), 4);
        CHECK(c.apply(f) == a.apply(b.apply(f)) - b.apply(a.apply(f)));
      }
    }
  GenPoly g = to_yy(X * Y + X2 * X);
  CHECK(from_yy(yy_partial0(g)) == partial(X * Y + X2 * X, kY));
}
