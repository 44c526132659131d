#include "charsums/bigcomplex.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace charsums {

namespace {
mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
    return std::max(a.prec(), b.prec());
}
}  // namespace

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_string(const std::string& s, mpfr_prec_t prec) {
    BigFloat r(prec);
    if (mpfr_set_str(r.get(), s.c_str(), 10, MPFR_RNDN) != 0 && s != "0")
        throw std::invalid_argument("BigFloat: cannot parse '" + s + "'");
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.get(), x_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(prec());
    mpfr_abs(r.get(), x_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    BigFloat r(prec());
    mpfr_sqrt(r.get(), x_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::exp() const {
    BigFloat r(prec());
    mpfr_exp(r.get(), x_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log() const {
    BigFloat r(prec());
    mpfr_log(r.get(), x_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::cos() const {
    BigFloat r(prec());
    mpfr_cos(r.get(), x_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sin() const {
    BigFloat r(prec());
    mpfr_sin(r.get(), x_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::cosh() const {
    BigFloat r(prec());
    mpfr_cosh(r.get(), x_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow_int(long e) const {
    BigFloat r(prec());
    mpfr_pow_si(r.get(), x_, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow(const BigFloat& e) const {
    BigFloat r(join(*this, e));
    mpfr_pow(r.get(), x_, e.get(), MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(size_t digits) const {
    if (digits == 0) digits = static_cast<size_t>(prec() * 0.30103) + 2;
    mpfr_exp_t expo;
    char* s = mpfr_get_str(nullptr, &expo, 10, digits, x_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    if (mant == "0" || mant == "-0") return "0";
    bool neg = mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    std::string out = (neg ? "-" : "") + ("0." + d) + "e" + std::to_string(expo);
    return out;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat d = b.re_ * b.re_ + b.im_ * b.im_;
    if (d.is_zero()) throw std::domain_error("BigComplex: division by zero");
    return BigComplex((a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d);
}

BigFloat BigComplex::abs() const {
    BigFloat r(prec());
    mpfr_hypot(r.get(), re_.get(), im_.get(), MPFR_RNDN);
    return r;
}

BigComplex BigComplex::exp() const {
    BigFloat m = re_.exp();
    return BigComplex(m * im_.cos(), m * im_.sin());
}

BigComplex BigComplex::cosh() const {
    // cosh(z) = (e^z + e^{-z}) / 2
    BigComplex h = (exp() + (-*this).exp());
    BigFloat half = BigFloat(1, prec()) / BigFloat(2, prec());
    return BigComplex(h.re_ * half, h.im_ * half);
}

BigComplex BigComplex::pow_int(long e) const {
    mpfr_prec_t p = prec();
    if (e == 0) return BigComplex(1, p);
    if (e < 0) return BigComplex(1, p) / pow_int(-e);
    BigComplex base = *this, acc(1, p);
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

std::string BigComplex::to_string(size_t digits) const {
    return re_.to_string(digits) + (im_.sign() < 0 ? " - " : " + ") + im_.abs().to_string(digits) + "i";
}

bool complex_close(const BigComplex& a, const BigComplex& b, const BigFloat& tol) {
    BigFloat d = (a - b).abs();
    BigFloat m = a.abs();
    BigFloat mb = b.abs();
    if (mb > m) m = mb;
    return !(d > tol * (BigFloat(1, tol.prec()) + m));
}

}  // namespace charsums
