#include "quintic/mirror.hpp"

#include <stdexcept>

namespace quintic {

namespace {

// Truncated polynomial arithmetic in one variable.
using Poly = std::vector<Rat>;

Poly pmul(const Poly& a, const Poly& b, size_t deg) {
  Poly r(deg + 1);
  for (size_t i = 0; i < a.size() && i <= deg; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && i + j <= deg; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly pinv(const Poly& a, size_t deg) {
  Poly r(deg + 1);
  r[0] = 1 / a[0];
  for (size_t n = 1; n <= deg; ++n) {
    Rat s(0);
    for (size_t k = 1; k <= n && k < a.size(); ++k) s += a[k] * r[n - k];
    r[n] = -s * r[0];
  }
  return r;
}

// prod_{r=1}^{5d}(5e+r) / prod_{r=1}^{d}(e+r)^5 expanded in e.
Poly hyper_coeff(int d, size_t deg) {
  Poly num{Rat(1)}, den{Rat(1)};
  for (int r = 1; r <= 5 * d; ++r) num = pmul(num, {Rat(r), Rat(5)}, deg);
  for (int r = 1; r <= d; ++r)
    for (int i = 0; i < 5; ++i) den = pmul(den, {Rat(r), Rat(1)}, deg);
  return pmul(num, pinv(den, deg), deg);
}

// Elements of Q[H]/(H^5 - 1).
using R5 = std::array<Rat, 5>;

R5 r5_mul(const R5& a, const R5& b) {
  R5 r{};
  for (int i = 0; i < 5; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < 5; ++j) r[(i + j) % 5] += a[i] * b[j];
  }
  return r;
}

R5 r5_h(int i, const Rat& c) {
  R5 r{};
  r[((i % 5) + 5) % 5] = c;
  return r;
}

using R5Series = std::vector<R5>;  // in w = 1/z

R5Series s_mul(const R5Series& a, const R5Series& b) {
  const size_t n = a.size();
  R5Series r(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; i + j < n; ++j) {
      R5 t = r5_mul(a[i], b[j]);
      for (int s = 0; s < 5; ++s) r[i + j][s] += t[s];
    }
  return r;
}

// Inverse of a series whose w^0 term is a nonzero scalar.
R5Series s_inv(const R5Series& a) {
  for (int s = 1; s < 5; ++s)
    if (a[0][s] != 0) throw std::logic_error("s_inv: non-scalar leading term");
  const Rat c = a[0][0];
  const size_t n = a.size();
  R5Series r(n);
  r[0][0] = 1 / c;
  for (size_t k = 1; k < n; ++k) {
    R5 acc{};
    for (size_t j = 1; j <= k; ++j) {
      R5 t = r5_mul(a[j], r[k - j]);
      for (int s = 0; s < 5; ++s) acc[s] += t[s];
    }
    for (int s = 0; s < 5; ++s) r[k][s] = -acc[s] / c;
  }
  return r;
}

}  // namespace

IData build_idata(int order) {
  if (order < 0) throw std::domain_error("build_idata: negative order");
  IData D;
  D.order = order;
  D.i0 = QSeries(order);
  D.i1 = QSeries(order);
  D.i2 = QSeries(order);
  D.i3 = QSeries(order);
  for (int d = 0; d <= order; ++d) {
    Poly h = hyper_coeff(d, 3);
    D.i0[d] = h[0];
    D.i1[d] = h[1];
    D.i2[d] = h[2];
    D.i3[d] = h[3];
  }
  D.tau = D.i1 / D.i0;
  D.i11 = QSeries::constant(1, order) + qdq(D.tau);
  QSeries base = QSeries::constant(1, order) - QSeries::monomial(3125, 1, order);
  D.lser = pow_rational(base, rat(-1, 5));
  // I_{k,k} from the operator route, independent of L; I_{5,5} := I_0.
  std::array<QSeries, 6> zz = zazi_diagonal(order);
  for (int k = 1; k <= 4; ++k) D.ikk[k] = zz[k];
  D.ikk[5] = D.i0;
  return D;
}

Report check_diagonal(const IData& D) {
  Report rep;
  QSeries l5 = D.lser.pow(5);
  auto emit = [&](const char* name, const QSeries& lhs) {
    int bad = first_mismatch(lhs, l5);
    rep.push_back(check(name, bad < 0,
                        bad < 0 ? "holds to q^" + std::to_string(D.order)
                                : "first mismatch at q^" + std::to_string(bad)));
  };
  auto same = [&](const char* name, const QSeries& a, const QSeries& b) {
    int bad = first_mismatch(a, b);
    rep.push_back(check(name, bad < 0, bad < 0 ? "" : "first mismatch at q^" + std::to_string(bad)));
  };
  same("I11 = 1 + qdq(I1/I0)", D.ikk[1], D.i11);
  same("I33 = I11", D.ikk[3], D.ikk[1]);
  same("I44 = I0", D.ikk[4], D.i0);
  emit("I22*I0^2*I11^2 = L^5", D.ikk[2] * D.i0 * D.i0 * D.ikk[1] * D.ikk[1]);
  emit("I0*I11*I22*I33*I44 = L^5", D.i0 * D.ikk[1] * D.ikk[2] * D.ikk[3] * D.ikk[4]);
  emit("prod_{k=1..5} Ikk = L^5", D.ikk[1] * D.ikk[2] * D.ikk[3] * D.ikk[4] * D.ikk[5]);
  return rep;
}

std::array<QSeries, 6> zazi_diagonal(int order) {
  const size_t W = 6;
  // f[d][j]: coefficient of q^d w^j
  std::vector<Poly> f(order + 1);
  for (int d = 0; d <= order; ++d) f[d] = hyper_coeff(d, W);
  std::array<QSeries, 6> out;
  for (int p = 0; p <= 5; ++p) {
    QSeries f0(order);
    for (int d = 0; d <= order; ++d) f0[d] = f[d][0];
    out[p] = f0;
    if (p == 5) break;
    QSeries inv = f0.inverse();
    size_t width = f[0].size();
    std::vector<Poly> g(order + 1, Poly(width));
    for (size_t j = 0; j < width; ++j) {
      QSeries col(order);
      for (int d = 0; d <= order; ++d) col[d] = f[d][j];
      col *= inv;
      for (int d = 0; d <= order; ++d) g[d][j] = col[d];
    }
    std::vector<Poly> nf(order + 1, Poly(width - 1));
    for (int d = 0; d <= order; ++d)
      for (size_t j = 0; j + 1 < width; ++j) nf[d][j] = g[d][j] + Rat(d) * g[d][j + 1];
    f = std::move(nf);
  }
  return out;
}

CycNum ITilde::restrict(int d, int n, int alpha) const {
  CycNum r;
  for (int s = 0; s < 5; ++s)
    if (c[d][n][s] != 0) r += CycNum(c[d][n][s]) * CycNum::zeta_pow(static_cast<long>(s) * alpha);
  return r;
}

ITilde itilde(int order_q, int order_w) {
  ITilde it;
  it.order_q = order_q;
  it.order_w = order_w;
  const size_t n = order_w + 1;
  it.c.assign(order_q + 1, std::vector<R5>(n));
  it.c[0][0][0] = 1;
  for (int d = 1; d <= order_q; ++d) {
    // Itilde_d / z = w * 5H prod_{k=1}^{5d-1}(k + 5H w) / prod_{k=1}^{d} k^5 (1 + sum_j C(5,j) H^j (w/k)^j)
    R5Series num(n);
    num[0] = r5_h(1, 5);
    for (int k = 1; k < 5 * d; ++k) {
      R5Series lin(n);
      lin[0] = r5_h(0, k);
      if (n > 1) lin[1] = r5_h(1, 5);
      num = s_mul(num, lin);
    }
    for (int k = 1; k <= d; ++k) {
      R5Series den(n);
      for (int j = 0; j <= 4 && j < static_cast<int>(n); ++j)
        den[j] = r5_h(j, binomial(5, j) * pow(Rat(k), 5 - j));
      num = s_mul(num, s_inv(den));
    }
    for (size_t j = 0; j + 1 < n; ++j) it.c[d][j + 1] = num[j];
  }
  return it;
}

std::vector<Rat> j_at_Hdelta(int delta) {
  if (delta < 1) throw std::domain_error("j_at_Hdelta: delta must be positive");
  std::vector<Rat> r;
  for (int beta = 0; beta <= (delta - 1) / 5; ++beta) {
    Rat num(1), den(1);
    for (int i = 1; i <= 5 * beta; ++i) num *= Rat(5 * delta - 5 * i);
    for (int i = 1; i <= beta; ++i) den *= pow(Rat(delta - 5 * i), 5) - pow(Rat(delta), 5);
    r.push_back(num / den);
  }
  return r;
}

Realizer::Realizer(const IData& D) {
  L = D.lser;
  Linv = L.inverse();
  Z = L.pow(5);
  X1 = Linv * qdq(log(D.i0 * Linv));
  X2 = Linv * qdq(X1);
  X3 = Linv * qdq(X2);
  Y = Linv * qdq(log(D.i0 * D.i11 * Linv * Linv));
}

QSeries Realizer::operator()(const GenPoly& f) const {
  const int N = L.order();
  QSeries r(N);
  const QSeries* gens[6] = {&Linv, &Z, &X1, &X2, &X3, &Y};
  for (const auto& [m, c] : f.terms()) {
    QSeries t = QSeries::constant(c, N);
    for (int i = 0; i < 6; ++i) {
      int e = m.e[i];
      if (e == 0) continue;
      if (i == kLinv && e < 0)
        t *= L.pow(-e);
      else
        t *= gens[i]->pow(e);
    }
    r += t;
  }
  return r;
}

QSeries realize(const GenPoly& f, const IData& data) { return Realizer(data)(f); }

}  // namespace quintic
