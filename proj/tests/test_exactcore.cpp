#include "doctest.h"
#include "support.hpp"

#include <stdexcept>

#include "quintic/cyclotomic.hpp"
#include "quintic/qseries.hpp"
#include "quintic/rat.hpp"
#include "quintic/zseries.hpp"

using namespace quintic;

namespace {

QSeries poly(std::vector<Rat> c, int order) {
  QSeries s(order);
  for (size_t i = 0; i < c.size() && static_cast<int>(i) <= order; ++i) s[static_cast<int>(i)] = c[i];
  return s;
}

// (1 + x q)^r by the generalized binomial series.
QSeries binomial_series(const Rat& x, const Rat& r, int order) {
  QSeries s(order);
  Rat c = 1;
  for (int d = 0; d <= order; ++d) {
    s[d] = c * pow(x, d);
    c = c * (r - d) / (d + 1);
  }
  return s;
}

}  // namespace

TEST_CASE("rationals stay reduced") {
  Rat a = rat(6, -4);
  CHECK(a.get_num() == -3);
  CHECK(a.get_den() == 2);
  CHECK(str(rat(10, 4)) == "5/2");
  CHECK(rat_parse("-14/21") == rat(-2, 3));
  CHECK_THROWS_AS(rat(1, 0), std::domain_error);
  CHECK(binomial(rat(-1, 5), 2) == rat(3, 25));
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("bernoulli numbers") {
  auto b = bernoulli_numbers(6);
  CHECK(b[1] == rat(-1, 2));
  CHECK(b[2] == rat(1, 6));
  CHECK(b[6] == rat(1, 42));
  CHECK(bernoulli_poly(2, rat(1, 2)) == rat(-1, 12));
  // B_n(1) = B_n(0) for n >= 2
  for (int n = 2; n <= 12; ++n) CHECK(bernoulli_poly(n, 1) == bernoulli_poly(n, 0));
}

TEST_CASE("series arithmetic examples") {
  const int N = 6;
  QSeries one_plus = poly({1, 1}, N), one_minus = poly({1, -1}, N);
  CHECK(series_arith(one_plus, one_minus, SeriesOp::mul) == poly({1, 0, -1}, N));
  QSeries geom = series_arith(QSeries::constant(1, N), one_minus, SeriesOp::div);
  for (int d = 0; d <= N; ++d) CHECK(geom[d] == 1);
  QSeries l = pow_rational(poly({1, -3125}, N), rat(-1, 5));
  CHECK(l == binomial_series(-3125, rat(-1, 5), N));
  CHECK(l[1] == 625);
  CHECK(l[2] == 1171875);
}

TEST_CASE("division needs an invertible constant term") {
  QSeries a = poly({1, 2}, 4), b = poly({0, 1}, 4);
  CHECK_THROWS_AS(series_arith(a, b, SeriesOp::div), std::domain_error);
  CHECK_THROWS_AS(log(b), std::domain_error);
  CHECK_THROWS_AS(exp(a), std::domain_error);
  CHECK_THROWS_AS(pow_rational(b, rat(1, 2)), std::domain_error);
}

TEST_CASE("mixed orders truncate to the minimum") {
  QSeries a = qt::random_series(8), b = qt::random_series(5);
  CHECK((a + b).order() == 5);
  CHECK((a * b).order() == 5);
}

TEST_CASE("log and exp examples") {
  const int N = 8;
  QSeries q = QSeries::monomial(1, 1, N);
  CHECK(log(exp(q)) == q);
  QSeries e0 = exp(QSeries(N));
  CHECK(e0 == QSeries::constant(1, N));
  // exp(q) coefficients 1/d!
  QSeries e = exp(q);
  for (int d = 0; d <= N; ++d) CHECK(e[d] == 1 / factorial(d));
}

TEST_CASE("qdq examples") {
  const int N = 10;
  CHECK(qdq(QSeries::constant(1, N)).is_zero());
  CHECK(qdq(poly({0, 1, 1}, N)) == poly({0, 1, 2}, N));
  QSeries L = binomial_series(-3125, rat(-1, 5), N);
  QSeries expect = L * (L.pow(5) - QSeries::constant(1, N)) * rat(1, 5);
  CHECK(qdq(L) == expect);
  CHECK(qdq(L).order() == N);
}

TEST_CASE("property: ring axioms on random series") {
  for (int t = 0; t < 40; ++t) {
    const int N = qt::uniform(0, 7);
    QSeries a = qt::random_series(N), b = qt::random_series(N), c = qt::random_series(N);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("property: log, exp, rational powers") {
  for (int t = 0; t < 25; ++t) {
    const int N = qt::uniform(1, 8);
    QSeries a = qt::random_series(N, true);
    CHECK(exp(log(a)) == a);
    Rat r = qt::small_rat();
    CHECK(pow_rational(a, r) * pow_rational(a, -r) == QSeries::constant(1, N));
    CHECK(pow_rational(a, 2) == a * a);
    QSeries z = qt::random_series(N, false, true);
    CHECK(log(exp(z)) == z);
    CHECK(qdq_integrate(qdq(z)) == z);
  }
}

TEST_CASE("property: qdq is a derivation") {
  for (int t = 0; t < 30; ++t) {
    const int N = qt::uniform(0, 8);
    QSeries a = qt::random_series(N), b = qt::random_series(N);
    CHECK(qdq(a * b) == qdq(a) * b + a * qdq(b));
  }
}

TEST_CASE("fifth roots of unity") {
  CycNum z = CycNum::zeta_pow(1);
  CycNum p = CycNum(1);
  for (int i = 0; i < 5; ++i) p *= z;
  CHECK(p == CycNum(1));
  CHECK(CycNum(1) + z + z * z + z * z * z + z * z * z * z == CycNum(0));
  for (int s = 0; s < 25; ++s) CHECK(zeta_trace(s) == (s % 5 == 0 ? 5 : 0));
  // Direct trace by summing powers in the reduced basis.
  for (int s = 0; s < 25; ++s) {
    CycNum acc;
    for (int a = 0; a < 5; ++a) acc += CycNum::zeta_pow(static_cast<long>(a) * s);
    CHECK(acc == CycNum(zeta_trace(s)));
  }
}

TEST_CASE("property: cyclotomic field operations") {
  for (int t = 0; t < 30; ++t) {
    CycNum a(qt::small_rat(), qt::small_rat(), qt::small_rat(), qt::small_rat());
    CycNum b(qt::small_rat(), qt::small_rat(), qt::small_rat(), qt::small_rat());
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == CycNum(1));
    CHECK((a * b).galois(2) == a.galois(2) * b.galois(2));
  }
  auto f = std::make_shared<const CycField>(7);
  Cyc x = Cyc::zeta_pow(f, 3), y = Cyc::zeta_pow(f, 4);
  CHECK(x * y == Cyc::zeta_pow(f, 0));
  CHECK(f->dim() == 6);
}

TEST_CASE("z-series truncation") {
  ZSeries<Rat> a(std::vector<Rat>{1, 2, 3}), b(std::vector<Rat>{1, -1});
  ZSeries<Rat> p = a * b;
  CHECK(p.zorder() == 1);
  CHECK(p[1] == 1);
  CHECK(a.negated_z()[1] == -2);
}
