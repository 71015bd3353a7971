#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quintic/genpoly.hpp"
#include "quintic/qde.hpp"
#include "quintic/report.hpp"

namespace quintic {

using MatG = MatrixH<GenPoly>;

// Lambda_D = sum_p c[p] psi^p; c[p][i][j] is the phibar_i component of Lambda phibar_j.
struct LambdaMap {
  std::array<MatG, 4> c;
  bool operator==(const LambdaMap&) const = default;
};

// Coefficient of z1^p1 z2^p2; entry [a][b] multiplies phibar_a (x) phibar_b.
struct DeltaMap {
  std::map<std::pair<int, int>, MatG> c;
  bool operator==(const DeltaMap& o) const;
};

// Every Lambda_i annihilates phibar_4, as forced by skew-adjointness.
LambdaMap lambda_of(const Derivation& d);
DeltaMap delta_of(const Derivation& d);
// sum_alpha (Lambda(z1) e^alpha (x) e_alpha + e^alpha (x) Lambda(z2) e_alpha) / (z1 + z2); nullopt if not divisible.
std::optional<DeltaMap> delta_from_lambda(const LambdaMap& l);

// The four coordinate derivations d/dY, d/dX, d/dX2, d/dX3.
std::array<Derivation, 4> coordinate_derivations();
const char* coordinate_name(int i);

// Triangularity, skew-adjointness, cocycle and the two Delta constructions on basis derivations.
Report check_lambda_properties();
// D Rbar^{-1}(z) = Rbar^{-1}(z) Lambda_D(z) for the coordinate derivations, up to z^kmax.
Report verify_r_pdes(const RMatrix& R, int kmax);
// V(z1, z2) = (G^{-1} - Rbar^{-1}(z1) G^{-1} Rbar^{-1}(z2)^T) / (z1 + z2) in phibar (x) phibar.
// v[{a, b}][i][j] is the z1^a z2^b coefficient; lambda power 2 - a - b - i - j implicit.
struct EdgeKernel {
  std::map<std::pair<int, int>, MatG> v;
  int max_degree = 0;  // a + b <= max_degree
  bool divisible = true;
  std::string remainder;
};
EdgeKernel edge_kernel(const RMatrix& R);
// -D V(z1, z2) = (Rbar^{-1} (x) Rbar^{-1}) Delta_D for total degree <= kmax; includes the exact division by z1 + z2.
Report verify_v_pdes(const RMatrix& R, int kmax);
// D S_delta = S_delta Lambda_D(-H_delta).
Report verify_s_delta_pdes(const SDelta& sd);

// (du - n (Y - X) + (2g - 2) X) f; throws on inhomogeneous input of the wrong degree.
GenPoly divisor_shift(const GenPoly& f, int g, int n);

struct Fixtures {
  GenPoly f03, f04, f11, f12_printed, f20;
  GenPoly f12() const { return divisor_shift(f11, 1, 1); }
};
Fixtures fixtures();

Report check_fixtures(const Fixtures& fx);
Report hae_check(const Fixtures& fx);
Report yy_reduced_hae(const Fixtures& fx);

struct OrbifoldResult {
  Report report;
  std::vector<Rat> a;  // f_g = sum a_i Z^i
  bool limit_exists = false;
};
OrbifoldResult orbifold_regularity(const GenPoly& f, int g);

std::vector<Erratum> erratum_ledger();

}  // namespace quintic
