#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "quintic/rat.hpp"

namespace quintic {

// Element c0 + c1 z + c2 z^2 + c3 z^3 of Q(z), z a primitive fifth root of unity.
class CycNum {
 public:
  CycNum() = default;
  CycNum(const Rat& c);  // NOLINT: rationals embed
  CycNum(const Rat& c0, const Rat& c1, const Rat& c2, const Rat& c3);

  static CycNum zeta_pow(long s);

  const Rat& operator[](int i) const { return c_[i]; }
  bool is_zero() const;
  bool is_rational() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum inverse() const;

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }
  friend bool operator==(const CycNum& a, const CycNum& b) { return a.c_ == b.c_; }

  // Galois action z -> z^s.
  CycNum galois(long s) const;
  std::string to_string() const;

 private:
  std::array<Rat, 4> c_{};
};

// Sum over alpha = 0..4 of zeta^(alpha s).
Rat zeta_trace(long s);

// Q(zeta_m) as Q[x]/(Phi_m).
class CycField {
 public:
  explicit CycField(int m);
  int m() const { return m_; }
  int dim() const { return static_cast<int>(phi_.size()) - 1; }
  const std::vector<Rat>& phi() const { return phi_; }
  std::vector<Rat> reduce(std::vector<Rat> p) const;

 private:
  int m_;
  std::vector<Rat> phi_;
};

class Cyc {
 public:
  Cyc(std::shared_ptr<const CycField> f, const Rat& c = Rat(0));
  static Cyc zeta_pow(std::shared_ptr<const CycField> f, long s);

  const CycField& field() const { return *f_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  Rat rational_part() const { return c_[0]; }

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc inverse() const;

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }
  friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }

 private:
  std::shared_ptr<const CycField> f_;
  std::vector<Rat> c_;
};

// Solve A x = b over Q; throws if singular.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

}  // namespace quintic
