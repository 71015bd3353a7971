#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace quintic {

using Rat = mpq_class;

// Reduced rational n/d.
Rat rat(long n, long d = 1);
Rat rat_parse(const std::string& s);
std::string str(const Rat& r);

Rat factorial(long n);
Rat binomial(long n, long k);
// Generalized binomial coefficient r choose k for rational r.
Rat binomial(const Rat& r, long k);
Rat pow(const Rat& x, long e);

// Bernoulli numbers B_0..B_n with B_1 = -1/2.
std::vector<Rat> bernoulli_numbers(int n);
// Bernoulli polynomial B_n evaluated at x.
Rat bernoulli_poly(int n, const Rat& x);

}  // namespace quintic
