#include "quintic/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quintic {

QSeries::QSeries(int order) {
  if (order < 0) throw std::domain_error("QSeries: negative order");
  c_.assign(order + 1, Rat(0));
}

QSeries::QSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::domain_error("QSeries: empty coefficient list");
}

QSeries QSeries::constant(const Rat& c, int order) {
  QSeries s(order);
  s.c_[0] = c;
  return s;
}

QSeries QSeries::monomial(const Rat& c, int d, int order) {
  QSeries s(order);
  if (d <= order) s.c_[d] = c;
  return s;
}

Rat QSeries::coeff(int d) const {
  if (d < 0 || d > order()) return Rat(0);
  return c_[d];
}

QSeries QSeries::truncated(int order) const {
  QSeries s(order);
  for (int d = 0; d <= std::min(order, this->order()); ++d) s.c_[d] = c_[d];
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

QSeries QSeries::operator-() const {
  QSeries r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& o) {
  const int n = std::min(order(), o.order());
  std::vector<Rat> r(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  return *this;
}

QSeries& QSeries::operator*=(const Rat& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

QSeries& QSeries::operator/=(const QSeries& o) { return *this *= o.inverse(); }

bool operator==(const QSeries& a, const QSeries& b) { return first_mismatch(a, b) < 0; }

QSeries QSeries::inverse() const {
  if (c_[0] == 0) throw std::domain_error("QSeries: not invertible (zero constant term)");
  const int n = order();
  QSeries r(n);
  Rat inv0 = 1 / c_[0];
  r.c_[0] = inv0;
  for (int d = 1; d <= n; ++d) {
    Rat s(0);
    for (int i = 1; i <= d; ++i) s += c_[i] * r.c_[d - i];
    r.c_[d] = -s * inv0;
  }
  return r;
}

QSeries QSeries::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QSeries acc = constant(1, order()), b = *this;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

std::string QSeries::to_string(int max_terms) const {
  std::ostringstream os;
  int shown = 0;
  for (int d = 0; d <= order() && shown < max_terms; ++d) {
    if (c_[d] == 0) continue;
    if (shown) os << " + ";
    os << c_[d].get_str();
    if (d == 1) os << "*q";
    if (d > 1) os << "*q^" << d;
    ++shown;
  }
  if (!shown) os << "0";
  os << " + O(q^" << order() + 1 << ")";
  return os.str();
}

QSeries series_arith(const QSeries& a, const QSeries& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::sub: return a - b;
    case SeriesOp::mul: return a * b;
    case SeriesOp::div: return a / b;
  }
  throw std::logic_error("series_arith: bad op");
}

QSeries log(const QSeries& a) {
  if (a[0] != 1) throw std::domain_error("log: constant term must be 1");
  // q d/dq log a = qdq(a) / a
  return qdq_integrate(qdq(a) / a);
}

QSeries exp(const QSeries& a) {
  if (a[0] != 0) throw std::domain_error("exp: constant term must be 0");
  // e' = a' e, solved coefficientwise: d e_d = sum_{i=1}^d i a_i e_{d-i}
  const int n = a.order();
  QSeries e(n);
  e[0] = 1;
  for (int d = 1; d <= n; ++d) {
    Rat s(0);
    for (int i = 1; i <= d; ++i) s += Rat(i) * a[i] * e[d - i];
    e[d] = s / d;
  }
  return e;
}

QSeries pow_rational(const QSeries& a, const Rat& r) {
  if (a[0] != 1) throw std::domain_error("pow_rational: constant term must be 1");
  // p = a^r satisfies a p' = r a' p
  const int n = a.order();
  QSeries p(n);
  p[0] = 1;
  for (int d = 1; d <= n; ++d) {
    Rat s(0);
    for (int i = 1; i <= d; ++i) s += (r * i - (d - i)) * a[i] * p[d - i];
    p[d] = s / d;
  }
  return p;
}

QSeries qdq(const QSeries& a) {
  QSeries r(a.order());
  for (int d = 1; d <= a.order(); ++d) r[d] = a[d] * d;
  return r;
}

QSeries qdq_integrate(const QSeries& a) {
  if (a[0] != 0) throw std::domain_error("qdq_integrate: constant term must be 0");
  QSeries r(a.order());
  for (int d = 1; d <= a.order(); ++d) r[d] = a[d] / d;
  return r;
}

int first_mismatch(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.order(), b.order());
  for (int d = 0; d <= n; ++d)
    if (a[d] != b[d]) return d;
  return -1;
}

}  // namespace quintic
