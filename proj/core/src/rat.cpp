#include "quintic/rat.hpp"

#include <stdexcept>

namespace quintic {

Rat rat(long n, long d) {
  if (d == 0) throw std::domain_error("rat: zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Rat rat_parse(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

std::string str(const Rat& r) { return r.get_str(); }

Rat factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

Rat binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rat(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(b);
}

Rat binomial(const Rat& r, long k) {
  if (k < 0) return Rat(0);
  Rat acc(1);
  for (long i = 0; i < k; ++i) acc = acc * (r - i) / (i + 1);
  return acc;
}

Rat pow(const Rat& x, long e) {
  if (e < 0) {
    if (x == 0) throw std::domain_error("pow: zero to negative power");
    return pow(Rat(1) / x, -e);
  }
  Rat acc(1), b = x;
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

std::vector<Rat> bernoulli_numbers(int n) {
  std::vector<Rat> b(n + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rat s(0);
    for (int k = 0; k < m; ++k) s += binomial(m + 1, k) * b[k];
    b[m] = -s / (m + 1);
  }
  return b;
}

Rat bernoulli_poly(int n, const Rat& x) {
  auto b = bernoulli_numbers(n);
  Rat s(0);
  for (int k = 0; k <= n; ++k) s += binomial(n, k) * b[k] * pow(x, n - k);
  return s;
}

}  // namespace quintic
