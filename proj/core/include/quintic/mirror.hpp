#pragma once

#include <array>
#include <vector>

#include "quintic/cyclotomic.hpp"
#include "quintic/genpoly.hpp"
#include "quintic/qseries.hpp"
#include "quintic/report.hpp"

namespace quintic {

struct IData {
  int order = 0;
  // I(q,z) = z I0 + I1 H + I2 H^2 / z + I3 H^3 / z^2, log q factor stripped.
  QSeries i0, i1, i2, i3;
  QSeries tau;  // I1 / I0
  QSeries i11;  // 1 + qdq(tau)
  QSeries lser; // (1 - 3125 q)^(-1/5)
  // Diagonal I_{k,k}, k = 1..5; index 0 unused.
  std::array<QSeries, 6> ikk;
};

IData build_idata(int order);

// I22 I0^2 I11^2 = L^5 and prod_k I_{k,k} = L^5.
Report check_diagonal(const IData& data);

// Zagier-Zinger operator route: F_0 = F(w,q), F_p = M F_{p-1} with
// M f = (1 + (q/w) d/dq)(f / f(0,q)); returns F_p(0,q) for p = 0..5.
std::array<QSeries, 6> zazi_diagonal(int order);

// Itilde(q,z) = z sum_d q^d prod_{k<5d}(5H+kz) / prod_{k<=d}((H+kz)^5 - lambda^5)
// at lambda = 1, stored in Q[H]/(H^5 - 1) as z * sum c[d][n] z^(-n).
struct ITilde {
  int order_q = 0;
  int order_w = 0;
  std::vector<std::vector<std::array<Rat, 5>>> c;  // [d][n][power of H]
  // Restriction H -> zeta^alpha.
  CycNum restrict(int d, int n, int alpha) const;
};

ITilde itilde(int order_q, int order_w);

// Scalar multiplying H_delta in J_t(H_delta), a polynomial in q.
std::vector<Rat> j_at_Hdelta(int delta);

// Generators as q-series: Linv -> 1/L, Z -> L^5, X_k, Y from the I-data.
struct Realizer {
  explicit Realizer(const IData& data);
  QSeries operator()(const GenPoly& f) const;
  QSeries L, Linv, Z, X1, X2, X3, Y;
};

QSeries realize(const GenPoly& f, const IData& data);

}  // namespace quintic
