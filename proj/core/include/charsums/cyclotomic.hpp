#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charsums/bigcomplex.hpp"
#include "charsums/rational.hpp"

namespace charsums {

long euler_phi(long n);

/// Coefficients of the N-th cyclotomic polynomial, ascending degree, monic.
const std::vector<Int>& cyclotomic_polynomial(long n);

/// Exact element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1},
/// reduced modulo the N-th cyclotomic polynomial.  Equality across different
/// orders compares after lifting both operands to the lcm order.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclotomic(const Rational& r) : order_(1), coeffs_(1, r) {}
    Cyclotomic(long order, std::vector<Rational> reduced);  // already-reduced coords

    /// Reduce sum raw[j] * zeta_order^j modulo Phi_order.  raw may have any length.
    static Cyclotomic canonicalize(long order, const std::vector<Rational>& raw);

    /// zeta_order^power
    static Cyclotomic root_of_unity(long order, long power);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Value as a Rational when all higher coordinates vanish.
    std::optional<Rational> as_rational() const;

    /// Rewrite in Q(zeta_M); requires order | M.
    Cyclotomic lifted(long m) const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Rational& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Rational& b) { return b * a; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Galois action zeta -> zeta^j, gcd(j, order) = 1.
    Cyclotomic galois(long j) const;
    /// Complex conjugation (zeta -> zeta^{-1}).
    Cyclotomic conj() const { return galois(-1); }

    /// Multiplicative inverse of a nonzero element.
    Cyclotomic inverse() const;

    /// Numeric embedding at e^{2 pi i / order}.
    BigComplex embed(mpfr_prec_t bits) const;

    /// "{order, [c0, c1, ...]}" with Rational coordinates.
    std::string to_string() const;

private:
    long order_;
    std::vector<Rational> coeffs_;  // size phi(order_)
};

}  // namespace charsums
