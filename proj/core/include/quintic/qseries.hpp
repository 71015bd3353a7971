#pragma once

#include <string>
#include <vector>

#include "quintic/rat.hpp"

namespace quintic {

// Power series in q known through q^order.
class QSeries {
 public:
  QSeries() : c_(1) {}
  explicit QSeries(int order);
  QSeries(std::vector<Rat> coeffs);  // order = size - 1
  static QSeries constant(const Rat& c, int order);
  // c q^d truncated at order.
  static QSeries monomial(const Rat& c, int d, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& operator[](int d) const { return c_[d]; }
  Rat& operator[](int d) { return c_[d]; }
  // Zero beyond the stored range.
  Rat coeff(int d) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  QSeries truncated(int order) const;
  bool is_zero() const;

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const QSeries& o);
  QSeries& operator*=(const Rat& c);
  QSeries& operator/=(const QSeries& o);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
  friend QSeries operator*(QSeries a, const Rat& c) { return a *= c; }
  friend QSeries operator*(const Rat& c, QSeries a) { return a *= c; }
  friend QSeries operator/(QSeries a, const QSeries& b) { return a /= b; }
  // Equality after truncating both to the smaller order.
  friend bool operator==(const QSeries& a, const QSeries& b);

  QSeries inverse() const;
  QSeries pow(long e) const;

  std::string to_string(int max_terms = 6) const;

 private:
  std::vector<Rat> c_;
};

enum class SeriesOp { add, sub, mul, div };
QSeries series_arith(const QSeries& a, const QSeries& b, SeriesOp op);

QSeries log(const QSeries& a);
QSeries exp(const QSeries& a);
QSeries pow_rational(const QSeries& a, const Rat& r);
QSeries qdq(const QSeries& a);
// Inverse of qdq on series with zero constant term; the constant of integration is 0.
QSeries qdq_integrate(const QSeries& a);

// First index where a and b differ (up to the smaller order), or -1.
int first_mismatch(const QSeries& a, const QSeries& b);

}  // namespace quintic
