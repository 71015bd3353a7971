#pragma once

#include <array>
#include <vector>

#include "quintic/cyclotomic.hpp"
#include "quintic/genpoly.hpp"
#include "quintic/mirror.hpp"
#include "quintic/qseries.hpp"
#include "quintic/report.hpp"

namespace quintic {

template <class T>
using MatrixH = std::array<std::array<T, 5>, 5>;

using MatQ = MatrixH<QSeries>;
using MatR = MatrixH<Rat>;

// Quantum multiplication by tau-dot in the flat basis at lambda = 1:
// A H^i = I_{i+1,i+1} H^(i+1), with H^5 = lambda^5.
struct AMatrix {
  int order = 0;
  MatQ a;
};

AMatrix quantum_product(const IData& data);
// Coefficients c_0..c_5 of det(x - A) as q-series, via Newton's identities on tr(A^k).
std::array<QSeries, 6> char_poly(const AMatrix& A);
Report check_quantum_product(const AMatrix& A, const IData& data);

// S*(z) = sum_n S_n z^(-n), S_n = sum_d q^d S[n][d], solving z D S + S A(0) = A S.
struct SMatrix {
  int order_q = 0;
  int order_w = 0;
  std::vector<std::vector<MatR>> s;  // [n][d]
  // Entry (i,j) of the z^(-n) q^d coefficient of S(-z)^{-1} = G^{-1} S(z)^T G.
  Rat adjoint(int n, int d, int i, int j) const { return s[n][d][(8 - j) % 5][(8 - i) % 5]; }
};

SMatrix s_matrix(const AMatrix& A, int order_w);
// QDE residual, symplectic condition, and the Itilde cross-check.
Report check_s_matrix(const SMatrix& S, const AMatrix& A);

// Specialized S-matrix diagonal S_{delta;0..5} with S_5 = Linv^5 Z S_0.
struct SDelta {
  int delta = 1;
  std::array<GenPoly, 6> s;
};

SDelta s_delta(int delta);
Report check_s_delta(const SDelta& sd);

// Rbar entries m[i][j][k]: row i, column j, coefficient of z^k; lambda power i - j - k implicit.
struct RMatrix {
  int zorder = 0;
  std::array<std::array<std::vector<GenPoly>, 5>, 5> m;
  std::array<std::vector<GenPoly>, 5> row5;  // recursion applied to row 4
  const GenPoly& operator()(int i, int j, int k) const { return m[i][j][k]; }
};

// Diagonal C = (X, Y, -Y, -X, 0) of the row recursion.
GenPoly r_recursion_c(int i);
RMatrix r_matrix(int zorder, const std::vector<GenPoly>& row0);
// Identity, mod-5 vanishing, grading, R-membership, symplectic condition, wrap-around.
Report check_r_matrix(const RMatrix& R);
// Row 4 against the independent prediction up to z^kmax.
Report check_two_route(const RMatrix& R, const std::vector<GenPoly>& row4, int kmax);
// Symplectic residual count at z^n.
int symplectic_defects(const RMatrix& R, int n);
// Whether a seed multiplied by C_0(z) still yields a symplectic R.
Report birkhoff_cancellation(int zorder);

// omega_{g,n}(phi_{a_1}, ..) = coeff * lambda^lambda_pow * (I_0/L)^i0l_pow.
struct TqftValue {
  Rat coeff;
  int lambda_pow = 0;
  int i0l_pow = 0;
};
// canonical: trace over zeta^(alpha(3g-3+sum a)), as forced by the idempotent basis;
// printed: trace over zeta^(alpha sum a).
enum class TqftTrace { canonical, printed };
TqftValue tqft_omega(int g, const std::vector<int>& insertions, TqftTrace trace = TqftTrace::canonical);
// omega_{g,n} computed independently from the idempotent basis and Delta_alpha.
TqftValue tqft_omega_from_idempotents(int g, const std::vector<int>& insertions);

// u_alpha = zeta^alpha lambda (logq_coeff log q + series).
struct CanonicalCoord {
  CycNum prefactor;
  QSeries series;
  int logq_coeff = 0;
};
CanonicalCoord canonical_coords(const IData& data, int alpha, bool critical_value = false);

// Pairing and idempotent identities of the five bases at lambda = 1.
Report check_state_bases(const IData& data);

}  // namespace quintic
