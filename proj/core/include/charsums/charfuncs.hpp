#pragma once

#include <utility>

#include "charsums/bernoulli.hpp"
#include "charsums/dirichlet.hpp"

namespace charsums {

/// Generalized Bernoulli function
///   B_{m,chi}(x) = k^{m-1} sum_{j=0}^{k-1} conj(chi)(j) B_m((j+x)/k),  m >= 1.
/// Period k in x.
Cyclotomic gen_bernoulli(long m, const DirichletCharacter& chi, const Rational& x);

/// Character Euler function (odd modulus only)
///   E_{m,chi}(x) = k^m sum_{j=0}^{k-1} (-1)^j conj(chi)(j) E_m((j+x)/k),  m >= 0.
/// Anti-period k in x.
Cyclotomic char_euler(long m, const DirichletCharacter& chi, const Rational& x);

/// Both sides of the multiplication identity
///   sum_{j=0}^{r-1} B_{m,chi}(x + jk/r) = chi(r) r^{1-m} B_{m,chi}(rx).
std::pair<Cyclotomic, Cyclotomic> multiplication_bernoulli(long m, const DirichletCharacter& chi,
                                                           const Rational& x, long r);

/// lhs - rhs of the halving identity
///   2^n chi(2) B_{n,conj}(x/2) - B_{n,conj}(x) = -(n/2) E_{n-1,conj}(x),
/// which is exactly 0 wherever the identity applies.
Cyclotomic halving_residual(long n, const DirichletCharacter& chi, const Rational& x);

/// Both sides of the even/odd folding identity for the alternating
/// character Euler sum (odd modulus only).
std::pair<Cyclotomic, Cyclotomic> fold_even_odd(long m, const DirichletCharacter& chi,
                                                const Rational& x);

}  // namespace charsums
