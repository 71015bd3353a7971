#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "quintic/cyclotomic.hpp"
#include "quintic/genpoly.hpp"
#include "quintic/report.hpp"

namespace quintic {

// Polynomial in X = 1 - L^m, coefficient of X^i at index i.
using XPoly = std::vector<Rat>;

XPoly xp_add(const XPoly& a, const XPoly& b);
XPoly xp_mul(const XPoly& a, const XPoly& b);
XPoly xp_scale(const XPoly& a, const Rat& c);
// D X^i = i X^i - i X^(i+1)
XPoly xp_D(const XPoly& a);
Rat xp_eval(const XPoly& a, const Rat& x);
void xp_trim(XPoly& a);
// p(1 - Zm) as a polynomial in Zm = L^m.
std::vector<Rat> xp_to_lm(const XPoly& p);

// sum c(X) L^lpow D^dpow, keyed by (lpow, dpow).
struct PFOperator {
  std::map<std::pair<int, int>, XPoly> terms;
  bool operator==(const PFOperator& o) const;
};

// D_1 .. D_{m-1} in the recursion -D r_k = sum_i D_i r_{k-i}; index i-1.
std::vector<PFOperator> pf_operators(int m);
// The four operators printed for m = 5.
std::vector<PFOperator> printed_operators_m5();
// Printed general-m closed forms of D_1 and D_2.
PFOperator printed_general_D1(int m);
PFOperator printed_general_D2(int m);

// Apply an operator to L^(-n) p(X); returns (resulting L power, polynomial).
std::pair<int, XPoly> apply_operator(const PFOperator& op, int n, const XPoly& p, int m);

// Coefficients of z^0..z^zorder of
// exp[m sum_j (-1)^(mj+1) B_{mj+1}(k/m) / (mj(mj+1)) z^(mj)] at lambda = 1.
std::vector<Rat> bernoulli_seed(int m, int k, int zorder);

struct RSequence {
  int m = 5;
  int deriv = 0;
  std::vector<XPoly> p;  // r_k = p_k(X) / L^k
  // Whether the top coefficient X^(k+1) vanished and the X = 1 condition was met at every step.
  bool solve_consistent = true;
};

// deriv 0: solve the recursion seeded by bernoulli_seed(m, 0, .).
// deriv 1: p1_k = p_k + (D + (k-1) X/m) p_{k-1}.
RSequence r_sequence(int m, int deriv, int kmax, const std::optional<std::vector<Rat>>& seed = std::nullopt);

// Regularity, degree bound, ODE residual and seed consistency.
Report certify_r_sequence(const RSequence& seq);
// (m L)^k r_k in Q[m, L^m] for k <= kmax, by exact interpolation over m = m_lo..m_hi.
Report certify_m_polynomiality(int kmax, int m_lo = 4, int m_hi = 24);
// (5L)^k p1_k(1-Z) is a polynomial of Z of degree k.
Report certify_zazi_corollary(int kmax);

// Row 0 of Rbar: entry k at column (-k mod 5) is Linv^k p1_k(1 - Z).
std::vector<GenPoly> row0_entries(int kmax, const std::optional<std::vector<Rat>>& seed = std::nullopt);
// Row 4 predicted from deriv 0: entry k at column (4 - k mod 5) is Linv^k p_k(1 - Z).
std::vector<GenPoly> row4_prediction(int kmax);

struct HessianResult {
  Report report;
  Rat numerator_constant;  // specialization of sum_j (-1)^(m-j)(m-j) e_{m-j} L^j at lambda = 1
  int detQinv_sign = 0;    // det Q^{-1} = sign * (L^m - 1)^2
};
HessianResult hessian_psi_check(int m);

// log C_alpha(z) and C_alpha(z) at lambda = 1 over Q(zeta_m).
struct BirkhoffConstants {
  int m = 5;
  std::vector<std::vector<Cyc>> log_c;  // [alpha][j] coefficient of z^j
  std::vector<std::vector<Cyc>> c;
};
BirkhoffConstants birkhoff_constants(int m, int zorder);

}  // namespace quintic
