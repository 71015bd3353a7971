#include "quintic/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace quintic {

namespace {

using Poly = std::vector<Rat>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Quotient of exact division a / b.
Poly poly_div_exact(Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    size_t s = a.size() - b.size();
    Rat c = a.back() / b.back();
    q[s] = c;
    for (size_t i = 0; i < b.size(); ++i) a[s + i] -= c * b[i];
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

Poly cyclotomic_poly(int m) {
  Poly xm1(m + 1);
  xm1[0] = -1;
  xm1[m] = 1;
  Poly den{Rat(1)};
  for (int d = 1; d < m; ++d)
    if (m % d == 0) den = poly_mul(den, cyclotomic_poly(d));
  return poly_div_exact(xm1, den);
}

}  // namespace

std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("solve_linear: singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// CycNum

CycNum::CycNum(const Rat& c) { c_[0] = c; }

CycNum::CycNum(const Rat& c0, const Rat& c1, const Rat& c2, const Rat& c3) : c_{c0, c1, c2, c3} {}

CycNum CycNum::zeta_pow(long s) {
  long r = ((s % 5) + 5) % 5;
  if (r == 4) return CycNum(-1, -1, -1, -1);
  CycNum z;
  z.c_[r] = 1;
  return z;
}

bool CycNum::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycNum::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

CycNum CycNum::operator-() const {
  CycNum r;
  for (int i = 0; i < 4; ++i) r.c_[i] = -c_[i];
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  std::array<Rat, 7> t{};
  for (int i = 0; i < 4; ++i)
    if (c_[i] != 0)
      for (int j = 0; j < 4; ++j) t[i + j] += c_[i] * o.c_[j];
  // z^5 = 1, z^4 = -(1 + z + z^2 + z^3)
  t[0] += t[5];
  t[1] += t[6];
  t[5] = 0;
  t[6] = 0;
  for (int i = 0; i < 4; ++i) c_[i] = t[i] - t[4];
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycNum: inverse of zero");
  std::vector<std::vector<Rat>> m(4, std::vector<Rat>(4));
  for (int j = 0; j < 4; ++j) {
    CycNum col = *this * zeta_pow(j);
    for (int i = 0; i < 4; ++i) m[i][j] = col.c_[i];
  }
  auto x = solve_linear(m, {Rat(1), Rat(0), Rat(0), Rat(0)});
  return CycNum(x[0], x[1], x[2], x[3]);
}

CycNum CycNum::galois(long s) const {
  CycNum r;
  for (int i = 0; i < 4; ++i)
    if (c_[i] != 0) r += CycNum(c_[i]) * zeta_pow(i * s);
  return r;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  if (first) os << "0";
  return os.str();
}

Rat zeta_trace(long s) { return (s % 5 == 0) ? Rat(5) : Rat(0); }

// CycField / Cyc

CycField::CycField(int m) : m_(m), phi_(cyclotomic_poly(m)) {
  if (m < 1) throw std::domain_error("CycField: m must be positive");
}

std::vector<Rat> CycField::reduce(std::vector<Rat> p) const {
  const size_t d = phi_.size() - 1;
  for (size_t k = p.size(); k-- > d;) {
    if (p[k] == 0) continue;
    Rat c = p[k] / phi_.back();
    for (size_t i = 0; i <= d; ++i) p[k - d + i] -= c * phi_[i];
  }
  p.resize(d);
  return p;
}

Cyc::Cyc(std::shared_ptr<const CycField> f, const Rat& c) : f_(std::move(f)) {
  c_.assign(f_->dim(), Rat(0));
  c_[0] = c;
}

Cyc Cyc::zeta_pow(std::shared_ptr<const CycField> f, long s) {
  const int m = f->m();
  long r = ((s % m) + m) % m;
  std::vector<Rat> p(r + 1);
  p[r] = 1;
  Cyc z(f);
  z.c_ = f->reduce(p);
  return z;
}

bool Cyc::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Cyc Cyc::operator-() const {
  Cyc r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  std::vector<Rat> t(2 * c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0)
      for (size_t j = 0; j < c_.size(); ++j) t[i + j] += c_[i] * o.c_[j];
  c_ = f_->reduce(t);
  return *this;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("Cyc: inverse of zero");
  const int d = f_->dim();
  std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d));
  for (int j = 0; j < d; ++j) {
    Cyc col = *this * zeta_pow(f_, j);
    for (int i = 0; i < d; ++i) m[i][j] = col.c_[i];
  }
  std::vector<Rat> e(d);
  e[0] = 1;
  Cyc r(f_);
  r.c_ = solve_linear(m, e);
  return r;
}

}  // namespace quintic
