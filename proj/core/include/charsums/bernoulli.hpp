#pragma once

#include <vector>

#include "charsums/rational.hpp"

namespace charsums {

/// Polynomial with Rational coefficients, ascending degree.
using PolyRational = std::vector<Rational>;

Rational poly_eval(const PolyRational& p, const Rational& x);

/// n-th Bernoulli number B_n (B_1 = -1/2).
const Rational& bernoulli_number(long n);

/// Bernoulli polynomial B_n(x), exact coefficients.
const PolyRational& bernoulli_poly(long n);

/// Euler polynomial E_n(x), exact coefficients.
const PolyRational& euler_poly(long n);

/// Periodic Bernoulli function: B_n({x}) with the midpoint convention
/// that the first function vanishes at integers.
Rational periodic_bernoulli(long n, const Rational& x);

/// Euler function: E_n on [0,1), extended by E_n(x+1) = -E_n(x).
Rational periodic_euler(long n, const Rational& x);

}  // namespace charsums
