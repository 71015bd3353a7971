#pragma once

#include <algorithm>
#include <vector>

namespace quintic {

// Truncated series sum_{k<=zorder} c_k z^k over a coefficient ring T.
template <class T>
class ZSeries {
 public:
  ZSeries() : c_(1) {}
  ZSeries(int zorder, const T& zero = T()) : c_(zorder + 1, zero) {}
  explicit ZSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {}

  int zorder() const { return static_cast<int>(c_.size()) - 1; }
  const T& operator[](int k) const { return c_[k]; }
  T& operator[](int k) { return c_[k]; }
  const std::vector<T>& coeffs() const { return c_; }

  ZSeries& operator+=(const ZSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  ZSeries& operator-=(const ZSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
  friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    const int n = std::min(a.zorder(), b.zorder());
    ZSeries r(n, a.c_[0] - a.c_[0]);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
  }
  template <class S>
  ZSeries scaled(const S& s) const {
    ZSeries r(*this);
    for (auto& c : r.c_) c = c * s;
    return r;
  }
  // f(z) -> f(-z)
  ZSeries negated_z() const {
    ZSeries r(*this);
    for (size_t k = 1; k < c_.size(); k += 2) r.c_[k] = -r.c_[k];
    return r;
  }
  friend bool operator==(const ZSeries& a, const ZSeries& b) {
    const int n = std::min(a.zorder(), b.zorder());
    for (int k = 0; k <= n; ++k)
      if (!(a.c_[k] == b.c_[k])) return false;
    return true;
  }

 private:
  std::vector<T> c_;
};

}  // namespace quintic
