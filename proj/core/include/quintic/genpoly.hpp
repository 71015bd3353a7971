#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "quintic/rat.hpp"

namespace quintic {

// Exponents of Linv^a Z^b X1^x1 X2^x2 X3^x3 Y^y.
struct Mono {
  std::array<int, 6> e{};
  int a() const { return e[0]; }
  int b() const { return e[1]; }
  int degree() const { return e[0] + e[2] + 2 * e[3] + 3 * e[4] + e[5]; }
  auto operator<=>(const Mono&) const = default;
};

enum Var : int { kLinv = 0, kZ = 1, kX1 = 2, kX2 = 3, kX3 = 4, kY = 5 };

class GenPoly {
 public:
  GenPoly() = default;
  GenPoly(const Rat& c);  // NOLINT: constants embed
  GenPoly(long c) : GenPoly(Rat(c)) {}
  static GenPoly mono(const Rat& c, int a, int b = 0, int x1 = 0, int x2 = 0, int x3 = 0, int y = 0);
  static GenPoly var(Var v);
  static GenPoly linv(int a = 1) { return mono(1, a); }

  const std::map<Mono, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  Rat coeff(const Mono& m) const;
  Rat constant_term() const;

  GenPoly operator-() const;
  GenPoly& operator+=(const GenPoly& o);
  GenPoly& operator-=(const GenPoly& o);
  GenPoly& operator*=(const GenPoly& o);
  GenPoly& operator*=(const Rat& c);
  friend GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
  friend GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }
  friend GenPoly operator*(const GenPoly& a, const GenPoly& b);
  friend GenPoly operator*(GenPoly a, const Rat& c) { return a *= c; }
  friend GenPoly operator*(const Rat& c, GenPoly a) { return a *= c; }
  friend bool operator==(const GenPoly& a, const GenPoly& b) { return a.t_ == b.t_; }

  GenPoly pow(int n) const;

  // Set of degrees of the stored monomials.
  std::set<int> degrees() const;
  bool is_homogeneous(int d) const;
  // Highest power of Linv present, or 0 for the zero polynomial.
  int max_exponent(Var v) const;
  int min_exponent(Var v) const;
  bool free_of(Var v) const;

  void add_term(const Mono& m, const Rat& c);

  std::string to_string() const;  // ASCII: Linv, Z, X, X2, X3, Y
  std::string pretty() const;     // script-letter notation

 private:
  std::map<Mono, Rat> t_;
};

GenPoly du(const GenPoly& f);
// Partial derivative in one generator (Linv and Z are allowed too).
GenPoly partial(const GenPoly& f, Var v);
// Substitute the four generators X1, X2, X3, Y by polynomials; Linv, Z are kept.
GenPoly substitute(const GenPoly& f, const std::array<GenPoly, 4>& images);

// du applied to the generators.
GenPoly du_Y();
GenPoly du_X3();

// Z_k := (d/du)^k log(q^(1/5) L), k >= 1.
GenPoly zcal(int k);

struct RMembership {
  bool ok = true;
  std::vector<Mono> violations;
};
// Every monomial satisfies b <= a <= 5b.
RMembership in_R(const GenPoly& f);

// Alternative generators U = X, V = X + Y, V2 = X2 - X Y, V3 = (du + V) V2.
// A YY polynomial reuses the slots as (x1, x2, x3, y) = (U, V2, V3, V).
GenPoly yy_U();
GenPoly yy_V();
GenPoly yy_V2();
GenPoly yy_V3();
GenPoly to_yy(const GenPoly& f);
GenPoly from_yy(const GenPoly& g);
std::string pretty_yy(const GenPoly& g);

// c_X dX + c_X2 dX2 + c_X3 dX3 + c_Y dY
struct CoordDerivation {
  GenPoly cX, cX2, cX3, cY;
  GenPoly apply(const GenPoly& f) const;
};

// g0 d0 + g1 d1 + g2 d2 + g3 d3 in the derivation basis.
struct Derivation {
  GenPoly g0, g1, g2, g3;
  static Derivation basis(int i);
  CoordDerivation coords() const;
  static Derivation from_coords(const CoordDerivation& c);
  GenPoly apply(const GenPoly& f) const { return coords().apply(f); }
  bool operator==(const Derivation&) const = default;
};

Derivation bracket(const Derivation& d1, const Derivation& d2);
GenPoly apply_derivation(const Derivation& d, const GenPoly& f);

// d0 acting on yy polynomials: d_V - U d_V2 - U^2 d_V3.
GenPoly yy_partial0(const GenPoly& g);

}  // namespace quintic
