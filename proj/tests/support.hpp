#pragma once

#include <random>
#include <string>

#include "quintic/genpoly.hpp"
#include "quintic/qseries.hpp"
#include "quintic/rat.hpp"
#include "quintic/report.hpp"

namespace qt {

using quintic::GenPoly;
using quintic::QSeries;
using quintic::Rat;

// Fixed seed so failures reproduce.
inline std::mt19937& rng() {
  static thread_local std::mt19937 g(20260418);
  return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rat small_rat() {
  int d = uniform(1, 6);
  return quintic::rat(uniform(-9, 9), d);
}

inline QSeries random_series(int order, bool unit_constant = false, bool zero_constant = false) {
  QSeries s(order);
  for (int d = 0; d <= order; ++d) s[d] = small_rat();
  if (unit_constant) s[0] = 1;
  if (zero_constant) s[0] = 0;
  return s;
}

// Random homogeneous polynomial of degree d with at most `terms` monomials; Linv exponent >= -1.
inline GenPoly random_homogeneous(int d, int terms = 3) {
  GenPoly f;
  for (int t = 0; t < terms; ++t) {
    int x3 = uniform(0, d / 3);
    int x2 = uniform(0, (d - 3 * x3) / 2);
    int x1 = uniform(0, d - 3 * x3 - 2 * x2);
    int y = uniform(0, d - 3 * x3 - 2 * x2 - x1 + 1);
    int a = d - 3 * x3 - 2 * x2 - x1 - y;
    int b = uniform(0, 2);
    f.add_term(quintic::Mono{{a, b, x1, x2, x3, y}}, small_rat());
  }
  return f;
}

inline std::string failures(const quintic::Report& r) {
  std::string s;
  for (const auto& c : r)
    if (c.status == quintic::Status::fail) s += c.name + " [" + c.detail + "]; ";
  return s;
}

}  // namespace qt

#define CHECK_REPORT(rep)                       \
  do {                                          \
    const auto& r_ = (rep);                     \
    INFO(qt::failures(r_));                     \
    CHECK(quintic::all_pass(r_));               \
  } while (0)
