#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "charsums/rational.hpp"

namespace charsums {

/// Arbitrary-precision binary float with explicit precision, RAII over mpfr_t.
/// Elementary operations round to the target's precision (MPFR correct rounding).
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 64) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
    BigFloat(long v, mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_si(x_, v, MPFR_RNDN); }
    BigFloat(const Rational& q, mpfr_prec_t prec) {
        mpfr_init2(x_, prec);
        mpfr_set_q(x_, q.raw().get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_swap(x_, o.x_); }
    BigFloat& operator=(BigFloat o) noexcept { mpfr_swap(x_, o.x_); return *this; }
    ~BigFloat() { mpfr_clear(x_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    mpfr_ptr get() { return x_; }
    mpfr_srcptr get() const { return x_; }

    int sign() const { return mpfr_sgn(x_); }
    bool is_zero() const { return mpfr_zero_p(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    static BigFloat pi(mpfr_prec_t prec);
    static BigFloat from_string(const std::string& s, mpfr_prec_t prec);

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) == 0; }

    BigFloat abs() const;
    BigFloat sqrt() const;
    BigFloat exp() const;
    BigFloat log() const;
    BigFloat cos() const;
    BigFloat sin() const;
    BigFloat cosh() const;
    BigFloat pow_int(long e) const;
    /// Real power a^b for a > 0.
    BigFloat pow(const BigFloat& e) const;

    /// Decimal string with explicit digit count.
    std::string to_string(size_t digits = 0) const;

private:
    mpfr_t x_;
};

/// Arbitrary-precision complex float: re/im pair at a common precision.
class BigComplex {
public:
    explicit BigComplex(mpfr_prec_t prec = 64) : re_(prec), im_(prec) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    BigComplex(long re, mpfr_prec_t prec) : re_(re, prec), im_(0, prec) {}
    BigComplex(const Rational& re, mpfr_prec_t prec) : re_(re, prec), im_(0, prec) {}

    const BigFloat& real() const { return re_; }
    const BigFloat& imag() const { return im_; }
    mpfr_prec_t prec() const { return re_.prec(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    static BigComplex i(mpfr_prec_t prec) { return BigComplex(BigFloat(0, prec), BigFloat(1, prec)); }

    BigComplex operator-() const { return BigComplex(-re_, -im_); }
    BigComplex conj() const { return BigComplex(re_, -im_); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

    BigFloat abs() const;
    /// |re| + |im|, cheap magnitude bound.
    BigFloat abs1() const { return re_.abs() + im_.abs(); }
    BigComplex exp() const;
    BigComplex cosh() const;
    BigComplex pow_int(long e) const;

    std::string to_string(size_t digits = 0) const;

private:
    BigFloat re_, im_;
};

/// True iff |a - b| <= tol * (1 + max(|a|, |b|)).
bool complex_close(const BigComplex& a, const BigComplex& b, const BigFloat& tol);

}  // namespace charsums
