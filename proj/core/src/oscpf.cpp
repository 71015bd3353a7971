#include "quintic/oscpf.hpp"

#include <stdexcept>
#include <tuple>

#include "quintic/qseries.hpp"

namespace quintic {

void xp_trim(XPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

XPoly xp_add(const XPoly& a, const XPoly& b) {
  XPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  xp_trim(r);
  return r;
}

XPoly xp_mul(const XPoly& a, const XPoly& b) {
  if (a.empty() || b.empty()) return {};
  XPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  xp_trim(r);
  return r;
}

XPoly xp_scale(const XPoly& a, const Rat& c) {
  XPoly r(a);
  for (auto& x : r) x *= c;
  xp_trim(r);
  return r;
}

XPoly xp_D(const XPoly& a) {
  XPoly r(a.size() + 1);
  for (size_t i = 1; i < a.size(); ++i) {
    r[i] += a[i] * Rat(i);
    r[i + 1] -= a[i] * Rat(i);
  }
  xp_trim(r);
  return r;
}

Rat xp_eval(const XPoly& a, const Rat& x) {
  Rat r(0);
  for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

std::vector<Rat> xp_to_lm(const XPoly& p) {
  std::vector<Rat> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (size_t t = 0; t <= i; ++t) r[t] += p[i] * binomial(static_cast<long>(i), static_cast<long>(t)) * ((t % 2) ? -1 : 1);
  }
  xp_trim(r);
  return r;
}

bool PFOperator::operator==(const PFOperator& o) const {
  auto strip = [](const std::map<std::pair<int, int>, XPoly>& t) {
    std::map<std::pair<int, int>, XPoly> r;
    for (auto [k, v] : t) {
      xp_trim(v);
      if (!v.empty()) r[k] = v;
    }
    return r;
  };
  return strip(terms) == strip(o.terms);
}

namespace {

// z^zp c(X) L^lp D^dp keyed by (zp, lp, dp).
using Key = std::tuple<int, int, int>;
using Op = std::map<Key, XPoly>;

void op_add_term(Op& r, const Key& k, const XPoly& c) {
  XPoly s = xp_add(r[k], c);
  if (s.empty())
    r.erase(k);
  else
    r[k] = s;
}

Op op_add(Op a, const Op& b, const Rat& s = Rat(1)) {
  for (const auto& [k, v] : b) op_add_term(a, k, xp_scale(v, s));
  return a;
}

Op op_compose(const Op& A, const Op& B, int m) {
  Op r;
  for (const auto& [ka, c] : A) {
    auto [za, la, da] = ka;
    for (const auto& [kb, e] : B) {
      auto [zb, lb, db] = kb;
      // D^da (e L^lb D^db), moving L^lb to the left via D L^b = L^b (D - b X / m)
      std::map<int, XPoly> tail{{db, e}};
      for (int s = 0; s < da; ++s) {
        std::map<int, XPoly> nt;
        for (const auto& [i, ei] : tail) {
          nt[i] = xp_add(nt[i], xp_add(xp_D(ei), xp_mul({Rat(0), rat(-lb, m)}, ei)));
          nt[i + 1] = xp_add(nt[i + 1], ei);
        }
        tail = std::move(nt);
      }
      for (const auto& [i, ei] : tail) op_add_term(r, {za + zb, la + lb, i}, xp_mul(c, ei));
    }
  }
  return r;
}

Op pf_P(int m) {
  Op DL{{{0, 1, 0}, {Rat(1)}}, {{1, 0, 1}, {Rat(1)}}};
  Op one{{{0, 0, 0}, {Rat(1)}}};
  Op P = DL;
  for (int i = 1; i < m; ++i) P = op_compose(P, DL, m);
  P = op_add(P, one, Rat(-1));
  Op Q{{{0, -m, 0}, {Rat(0), Rat(1)}}};
  for (int k = 0; k < m; ++k) {
    Op f = op_add(DL, Op{{{1, 0, 0}, {rat(k, m)}}});
    Q = op_compose(Q, f, m);
  }
  return op_add(P, Q);
}

PFOperator make_op(std::initializer_list<std::tuple<int, int, XPoly>> ts, const Rat& scale) {
  PFOperator op;
  for (const auto& [lp, dp, c] : ts) op.terms[{lp, dp}] = xp_scale(c, scale);
  return op;
}

}  // namespace

std::vector<PFOperator> pf_operators(int m) {
  if (m < 2) throw std::domain_error("pf_operators: m must be at least 2");
  Op P = pf_P(m);
  std::map<int, std::map<std::pair<int, int>, XPoly>> byz;
  for (const auto& [k, c] : P) {
    auto [zp, lp, dp] = k;
    auto& slot = byz[zp][{lp, dp}];
    slot = xp_add(slot, c);
  }
  std::vector<PFOperator> out;
  for (int j = 2; j <= m; ++j) {
    auto it = byz.find(j);
    PFOperator op;
    if (it != byz.end()) {
      int lo = 0;
      bool first = true;
      for (const auto& [k, c] : it->second)
        if (first || k.first < lo) {
          lo = k.first;
          first = false;
        }
      for (const auto& [k, c] : it->second) {
        int diff = k.first - lo;
        if (diff % m != 0) throw std::logic_error("pf_operators: L powers not congruent mod m");
        XPoly cc = c;
        for (int t = 0; t < diff / m; ++t) cc = xp_mul(cc, {Rat(1), Rat(-1)});
        auto& slot = op.terms[{lo + 1, k.second}];
        slot = xp_add(slot, xp_scale(cc, rat(1, m)));
      }
      for (auto itr = op.terms.begin(); itr != op.terms.end();)
        itr = itr->second.empty() ? op.terms.erase(itr) : std::next(itr);
    }
    out.push_back(op);
  }
  return out;
}

std::vector<PFOperator> printed_operators_m5() {
  std::vector<PFOperator> ops;
  ops.push_back(make_op({{-1, 0, {0, -3, 3}}, {-1, 1, {0, 10}}, {-1, 2, {50}}}, rat(1, 25)));
  ops.push_back(make_op({{-2, 0, {0, -15, 39, -24}}, {-2, 1, {0, 5, 15}}, {-2, 2, {0, 150}}, {-2, 3, {250}}},
                        rat(1, 125)));
  ops.push_back(make_op({{-3, 0, {0, -101, 575, -870, 396}},
                         {-3, 1, {0, -125, 725, -450}},
                         {-3, 2, {0, 1375}},
                         {-3, 3, {0, 3750}},
                         {-3, 4, {3125}}},
                        rat(1, 3125)));
  ops.push_back(make_op({{-4, 1, {0, 24}}, {-4, 2, {0, 250}}, {-4, 3, {0, 875}}, {-4, 4, {0, 1250}}, {-4, 5, {625}}},
                        rat(1, 3125)));
  return ops;
}

PFOperator printed_general_D1(int m) {
  Rat M(m);
  Rat a = (M + 1) * (M - 1) * (M - 2) / (24 * M * M);
  return make_op({{-1, 0, {0, -a, a}}, {-1, 1, {0, (M - 1) / (2 * M)}}, {-1, 2, {(M - 1) / 2}}}, Rat(1));
}

PFOperator printed_general_D2(int m) {
  Rat M(m);
  Rat a = (M + 1) * (M - 1) * (M - 2) * (M - 3) / (24 * M * M * M);
  // (m (X - 1/2) - X) X (1 - X)
  XPoly c0 = xp_mul(xp_mul({-M / 2, M - 1}, {0, 1}), {1, -1});
  // (m^2 (X-1) - 5m (X-1) + 6X + 2) X
  XPoly lin{-M * M + 5 * M + 2, M * M - 5 * M + 6};
  XPoly c1 = xp_mul(lin, {0, 1});
  Rat b = (M - 1) * (M - 2) / (24 * M * M);
  return make_op({{-2, 0, xp_scale(c0, a)},
                  {-2, 1, xp_scale(c1, b)},
                  {-2, 2, {0, (M - 1) * (M - 2) / (2 * M)}},
                  {-2, 3, {(M - 1) * (M - 2) / 6}}},
                 Rat(1));
}

std::pair<int, XPoly> apply_operator(const PFOperator& op, int n, const XPoly& p, int m) {
  XPoly res;
  int lpow = 0;
  bool first = true;
  for (const auto& [k, c] : op.terms) {
    XPoly t = p;
    for (int s = 0; s < k.second; ++s) t = xp_add(xp_D(t), xp_mul({Rat(0), rat(n, m)}, t));
    int lp = k.first - n;
    if (!first && lp != lpow) throw std::logic_error("apply_operator: inhomogeneous L power");
    lpow = lp;
    first = false;
    res = xp_add(res, xp_mul(c, t));
  }
  return {lpow, res};
}

std::vector<Rat> bernoulli_seed(int m, int k, int zorder) {
  QSeries e(zorder);
  for (int j = 1; m * j <= zorder; ++j) {
    int mj = m * j;
    Rat sign = ((mj + 1) % 2) ? Rat(-1) : Rat(1);
    e[mj] = Rat(m) * sign * bernoulli_poly(mj + 1, rat(k, m)) / Rat(mj * (mj + 1));
  }
  return exp(e).coeffs();
}

namespace {

XPoly d_shift(const XPoly& p, int n, int m) { return xp_add(xp_D(p), xp_mul({Rat(0), rat(n, m)}, p)); }

XPoly pf_rhs(const std::vector<PFOperator>& ops, const std::vector<XPoly>& ps, int k, int m) {
  XPoly q;
  for (int i = 1; i <= std::min<int>(static_cast<int>(ops.size()), k); ++i) {
    auto [lp, t] = apply_operator(ops[i - 1], k - i, ps[k - i], m);
    if (!t.empty() && lp != -k) throw std::logic_error("pf_rhs: unexpected L power");
    q = xp_add(q, t);
  }
  return q;
}

}  // namespace

RSequence r_sequence(int m, int deriv, int kmax, const std::optional<std::vector<Rat>>& seed) {
  if (deriv != 0 && deriv != 1) throw std::domain_error("r_sequence: deriv must be 0 or 1");
  RSequence out;
  out.m = m;
  out.deriv = deriv;
  const auto ops = pf_operators(m);
  const std::vector<Rat> sd = seed ? *seed : bernoulli_seed(m, 0, kmax);
  std::vector<XPoly> ps{{Rat(1)}};
  for (int k = 1; k <= kmax; ++k) {
    XPoly q = pf_rhs(ops, ps, k, m);
    q.resize(k + 2);
    // -(D + kX/m) p = q with p = al + be * a0, triangular in X^i
    std::vector<Rat> al(k + 2), be(k + 2);
    be[0] = 1;
    for (int i = 1; i <= k + 1; ++i) {
      Rat f = rat(k, m) - i + 1;
      al[i] = (-q[i] - f * al[i - 1]) / i;
      be[i] = (-f * be[i - 1]) / i;
    }
    Rat c0(0), r0(0);
    if (k % m == 0) {
      int j = k / m;
      Rat sgn = (j % 2) ? Rat(-1) : Rat(1);
      Rat cb(0), ca(0);
      for (int i = 0; i <= k; ++i) {
        cb += be[i] * binomial(i, j);
        ca += al[i] * binomial(i, j);
      }
      c0 = sgn * cb;
      r0 = (static_cast<size_t>(k) < sd.size() ? sd[k] : Rat(0)) - sgn * ca;
    } else {
      for (int i = 0; i <= k; ++i) {
        c0 += be[i];
        r0 -= al[i];
      }
    }
    Rat a0 = c0 != 0 ? Rat(r0 / c0) : Rat(-al[k + 1] / be[k + 1]);
    if (be[k + 1] * a0 + al[k + 1] != 0 || c0 * a0 != r0) out.solve_consistent = false;
    XPoly p(k + 1);
    for (int i = 0; i <= k; ++i) p[i] = al[i] + be[i] * a0;
    xp_trim(p);
    ps.push_back(p);
  }
  if (deriv == 0) {
    out.p = std::move(ps);
  } else {
    out.p.push_back(ps[0]);
    for (int k = 1; k <= kmax; ++k) out.p.push_back(xp_add(ps[k], d_shift(ps[k - 1], k - 1, m)));
  }
  return out;
}

Report certify_r_sequence(const RSequence& seq) {
  Report rep;
  const int m = seq.m, K = static_cast<int>(seq.p.size()) - 1;
  const std::string tag = "m=" + std::to_string(m) + " deriv=" + std::to_string(seq.deriv) + " ";
  const auto seed = bernoulli_seed(m, seq.deriv, K);
  bool reg = true, degok = true, seedok = true;
  std::string why;
  for (int k = 0; k <= K; ++k) {
    auto lm = xp_to_lm(seq.p[k]);
    int need = (k + m - 1) / m;  // L^k | L^(m t)
    for (int t = 0; t < need && t < static_cast<int>(lm.size()); ++t)
      if (lm[t] != 0) {
        reg = false;
        why += " reg@k=" + std::to_string(k);
      }
    if (static_cast<int>(lm.size()) - 1 != k) {
      degok = false;
      why += " deg@k=" + std::to_string(k) + "(" + std::to_string(static_cast<int>(lm.size()) - 1) + ")";
    }
    Rat at0 = (k % m == 0 && k / m < static_cast<int>(lm.size())) ? lm[k / m] : Rat(0);
    if (at0 != seed[k]) {
      seedok = false;
      why += " seed@k=" + std::to_string(k);
    }
  }
  rep.push_back(check(tag + "regularity L^k r_k in L^k Q[L] cap Q[L^m]", reg, why));
  rep.push_back(check(tag + "degree deg_{L^m}(L^k r_k) = k", degok, why));
  rep.push_back(check(tag + "value at L=0 equals Bernoulli seed", seedok, why));
  if (seq.deriv == 0) {
    const auto ops = pf_operators(m);
    bool ode = true;
    for (int k = 1; k <= K; ++k) {
      XPoly lhs = xp_scale(d_shift(seq.p[k], k, m), Rat(-1));
      XPoly rhs = pf_rhs(ops, seq.p, k, m);
      if (xp_add(lhs, xp_scale(rhs, Rat(-1))) != XPoly{}) ode = false;
    }
    rep.push_back(check(tag + "ODE residual -D r_k - sum D_i r_{k-i} = 0", ode));
  }
  return rep;
}

namespace {

// Newton interpolation through (xs[i], ys[i]); returns evaluator.
struct Newton {
  std::vector<Rat> xs, coef;
  Newton(const std::vector<Rat>& x, std::vector<Rat> y) : xs(x), coef(std::move(y)) {
    const size_t n = xs.size();
    for (size_t j = 1; j < n; ++j)
      for (size_t i = n - 1; i >= j; --i) {
        coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
        if (i == j) break;
      }
  }
  Rat operator()(const Rat& x) const {
    Rat r = coef.back();
    for (size_t i = coef.size() - 1; i-- > 0;) r = r * (x - xs[i]) + coef[i];
    return r;
  }
};

}  // namespace

Report certify_m_polynomiality(int kmax, int m_lo, int m_hi) {
  Report rep;
  std::vector<int> ms;
  for (int m = m_lo; m <= m_hi; ++m) ms.push_back(m);
  std::vector<std::vector<XPoly>> data;  // [m index][k]
  for (int m : ms) {
    auto seq = r_sequence(m, 0, kmax);
    std::vector<XPoly> scaled;
    for (int k = 0; k <= kmax; ++k) scaled.push_back(xp_scale(seq.p[k], pow(Rat(m), k)));
    data.push_back(scaled);
  }
  const size_t fit = (ms.size() + 1) / 2;
  for (int k = 0; k <= kmax; ++k) {
    bool ok = true;
    int maxdeg = 0;
    for (int i = 0; i <= k; ++i) {
      std::vector<Rat> xs, ys;
      for (size_t s = 0; s < fit; ++s) {
        xs.push_back(Rat(ms[s]));
        ys.push_back(i < static_cast<int>(data[s][k].size()) ? data[s][k][i] : Rat(0));
      }
      Newton nw(xs, ys);
      for (size_t s = fit; s < ms.size(); ++s) {
        Rat v = i < static_cast<int>(data[s][k].size()) ? data[s][k][i] : Rat(0);
        if (nw(Rat(ms[s])) != v) ok = false;
      }
      int d = static_cast<int>(fit) - 1;
      while (d > 0 && nw.coef[d] == 0) --d;
      maxdeg = std::max(maxdeg, d);
    }
    rep.push_back(check("(mL)^" + std::to_string(k) + " r_" + std::to_string(k) + " in Q[m, L^m]", ok,
                        "m-degree <= " + std::to_string(maxdeg) + ", fit on " + std::to_string(fit) +
                            " samples, verified on " + std::to_string(ms.size() - fit)));
  }
  return rep;
}

Report certify_zazi_corollary(int kmax) {
  Report rep;
  auto seq = r_sequence(5, 1, kmax);
  bool ok = true;
  std::string why;
  for (int k = 0; k <= kmax; ++k) {
    auto lm = xp_to_lm(xp_scale(seq.p[k], pow(Rat(5), k)));
    if (static_cast<int>(lm.size()) - 1 != k) {
      ok = false;
      why += " deg@k=" + std::to_string(k);
    }
  }
  rep.push_back(check("(5L)^k (R_k)_{0a} is a polynomial of L^5 of degree k, k<=" + std::to_string(kmax), ok, why));
  return rep;
}

namespace {
GenPoly xpoly_in_Z(const XPoly& p, int k) {
  GenPoly oneMinusZ = GenPoly(1) - GenPoly::var(kZ);
  GenPoly r, pw(1);
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) r += p[i] * pw;
    pw *= oneMinusZ;
  }
  return GenPoly::linv(k) * r;
}
}  // namespace

std::vector<GenPoly> row0_entries(int kmax, const std::optional<std::vector<Rat>>& seed) {
  auto seq = r_sequence(5, 1, kmax, seed);
  std::vector<GenPoly> out;
  for (int k = 0; k <= kmax; ++k) out.push_back(xpoly_in_Z(seq.p[k], k));
  return out;
}

std::vector<GenPoly> row4_prediction(int kmax) {
  auto seq = r_sequence(5, 0, kmax);
  std::vector<GenPoly> out;
  for (int k = 0; k <= kmax; ++k) out.push_back(xpoly_in_Z(seq.p[k], k));
  return out;
}

HessianResult hessian_psi_check(int m) {
  if (m < 2) throw std::domain_error("hessian_psi_check: m must be at least 2");
  HessianResult res;
  auto F = std::make_shared<const CycField>(m);
  using CP = std::vector<Cyc>;  // polynomial in L
  auto cz = [&](const Rat& r) { return Cyc(F, r); };
  auto cmul = [&](const CP& a, const CP& b) {
    CP r(a.size() + b.size() - 1, cz(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  auto cadd = [&](CP a, const CP& b) {
    if (a.size() < b.size()) a.resize(b.size(), cz(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
  };
  auto ceq = [&](CP a, CP b) {
    size_t n = std::max(a.size(), b.size());
    a.resize(n, cz(0));
    b.resize(n, cz(0));
    return a == b;
  };
  std::vector<Cyc> lam;
  for (int i = 0; i < m; ++i) lam.push_back(Cyc::zeta_pow(F, i));

  CP prod{cz(1)};
  for (int i = 0; i < m; ++i) prod = cmul(prod, CP{-lam[i], cz(1)});
  CP target(m + 1, cz(0));
  target[0] = cz(-1);
  target[m] = cz(1);
  res.report.push_back(check("prod_i (L - zeta^i) = L^m - 1", ceq(prod, target)));

  // e_j via prod (1 + lambda_i t)
  CP e{cz(1)};
  for (int i = 0; i < m; ++i) e = cmul(e, CP{cz(1), lam[i]});
  bool eok = true;
  for (int j = 1; j < m; ++j) eok = eok && e[j].is_zero();
  eok = eok && e[m] == cz((m % 2) ? 1 : -1);
  res.report.push_back(check("e_1..e_{m-1} = 0, e_m = (-1)^(m+1)", eok));

  CP num(m, cz(0));
  for (int j = 0; j < m; ++j) {
    Rat sgn = ((m - j) % 2) ? Rat(-1) : Rat(1);
    num[j] = cz(sgn * (m - j)) * e[m - j];
  }
  bool numconst = true;
  for (int j = 1; j < m; ++j) numconst = numconst && num[j].is_zero();
  res.numerator_constant = num[0].rational_part();
  res.report.push_back(check("Hessian numerator specializes to -m lambda^m",
                             numconst && num[0].is_rational() && num[0].rational_part() == -m,
                             "value " + res.numerator_constant.get_str()));

  // Hessian times prod x_i^2 is diag(x_i) - (L/m) J with x_i = L - lambda_i
  std::vector<CP> d;
  for (int i = 0; i < m; ++i) d.push_back(CP{-lam[i], cz(1)});
  CP pd{cz(1)};
  for (int i = 0; i < m; ++i) pd = cmul(pd, d[i]);
  CP sum{cz(0)};
  for (int i = 0; i < m; ++i) {
    CP t{cz(1)};
    for (int j = 0; j < m; ++j)
      if (j != i) t = cmul(t, d[j]);
    sum = cadd(sum, t);
  }
  CP detq = cadd(pd, cmul(CP{cz(0), cz(rat(-1, m))}, sum));
  CP num_over_m;
  for (auto& c : num) num_over_m.push_back(c * cz(rat(1, m)));
  res.report.push_back(check("det Q prod x_i^2 = numerator / m (matrix determinant lemma)", ceq(detq, num_over_m)));

  // det Q^{-1} = m prod (L - lambda_i)^2 / numerator = (m / num0) (L^m - 1)^2
  Rat s = Rat(m) / res.numerator_constant;
  res.detQinv_sign = s > 0 ? 1 : -1;
  res.report.push_back(check("det Q^{-1} = +-(L^m - lambda^m)^2 / lambda^m", abs(s) == 1,
                             "computed sign " + std::to_string(res.detQinv_sign)));
  if (res.detQinv_sign != 1)
    res.report.push_back(diag("det Q^{-1} sign", "printed +(L^m - lambda^m)^2/lambda^m, computed -(L^m - lambda^m)^2/lambda^m"));
  return res;
}

BirkhoffConstants birkhoff_constants(int m, int zorder) {
  auto F = std::make_shared<const CycField>(m);
  BirkhoffConstants bc;
  bc.m = m;
  auto B = bernoulli_numbers(zorder + 1);
  for (int a = 0; a < m; ++a) {
    std::vector<Cyc> lg(zorder + 1, Cyc(F));
    Cyc za = Cyc::zeta_pow(F, a);
    for (int k = 1; 2 * k - 1 <= zorder; ++k) {
      int j = 2 * k - 1;
      Cyc s(F);
      for (int b = 0; b < m; ++b) {
        if (b == a) continue;
        Cyc inv = (za - Cyc::zeta_pow(F, b)).inverse();
        Cyc p(F, 1);
        for (int t = 0; t < j; ++t) p *= inv;
        s += p;
      }
      Cyc inv = (Cyc(F, -m) * za).inverse();
      Cyc p(F, 1);
      for (int t = 0; t < j; ++t) p *= inv;
      s += p;
      lg[j] = Cyc(F, B[2 * k] / Rat(2 * k * (2 * k - 1))) * s;
    }
    std::vector<Cyc> ex(zorder + 1, Cyc(F));
    ex[0] = Cyc(F, 1);
    for (int n = 1; n <= zorder; ++n) {
      Cyc acc(F);
      for (int i = 1; i <= n; ++i) acc += Cyc(F, Rat(i)) * lg[i] * ex[n - i];
      ex[n] = acc * Cyc(F, rat(1, n));
    }
    bc.log_c.push_back(lg);
    bc.c.push_back(ex);
  }
  return bc;
}

}  // namespace quintic
