#include "charsums/qseries.hpp"

#include <stdexcept>

namespace charsums {

namespace {

void require_upper_half(const BigComplex& z, const char* what) {
    if (!(z.imag().sign() > 0)) throw std::domain_error(std::string(what) + ": Im z > 0 required");
}

void require_odd_p(long p, const char* what) {
    if (p < 1 || p % 2 == 0) throw std::domain_error(std::string(what) + ": p must be odd (>= 1)");
}

BigComplex embed_value(const Cyclotomic& v, mpfr_prec_t prec) { return v.embed(prec); }

BigFloat inv_pow(long n, long p, mpfr_prec_t prec) {
    return BigFloat(1, prec) / BigFloat(n, prec).pow_int(p);
}

// guard against catastrophic cancellation in geometric denominators
void check_denominator(const BigComplex& denom, mpfr_prec_t prec) {
    BigFloat floor_mag = BigFloat(1, prec) / BigFloat(2, prec).pow_int(prec / 2);
    if (!(denom.abs() > floor_mag))
        throw std::runtime_error("series: denominator too close to a pole at the working precision");
}

}  // namespace

void ModularTuple::validate() const {
    if (a * d - b * c != 1) throw std::domain_error("ModularTuple: ad - bc = 1 required");
    if (c <= 0) throw std::domain_error("ModularTuple: c > 0 required");
}

BigFloat SeriesConfig::tail_tolerance() const {
    return BigFloat(1, precision_bits) / BigFloat(2, precision_bits).pow_int(effective_tail_bits());
}

// ---------------------------------------------------------------------------
// A / A1 / B series at s = 1 - p.  The inner sum over the fast index is the
// closed form sum_{r=1}^{R} w(r) x^r / (1 - x^R) where w is the period-R
// character weight and x = e^{2 pi i n z / k} (or the half-angle variant).
// ---------------------------------------------------------------------------

namespace {

SeriesValue weighted_series(const BigComplex& z, long p, const DirichletCharacter& chi,
                            const SeriesConfig& cfg, long period_mult, bool alternating,
                            bool odd_outer, bool half_angle) {
    require_upper_half(z, "series");
    const mpfr_prec_t prec = cfg.precision_bits;
    const long k = chi.modulus();
    const long R = period_mult * k;

    std::vector<BigComplex> values;
    values.reserve(static_cast<size_t>(k));
    for (long r = 0; r < k; ++r) values.push_back(chi.eval(r).embed(prec));

    BigFloat two_pi = BigFloat(2, prec) * BigFloat::pi(prec);
    BigComplex u(-(two_pi * z.imag()) / BigFloat(k, prec), (two_pi * z.real()) / BigFloat(k, prec));
    if (half_angle) {
        BigFloat half = BigFloat(1, prec) / BigFloat(2, prec);
        u = BigComplex(u.real() * half, u.imag() * half);
    }
    BigFloat q = u.real().exp();  // |e^{u}| < 1
    BigFloat one(1, prec);
    BigFloat qR = q.pow_int(R);
    BigFloat tail_factor = BigFloat(2 * R, prec) / ((one - q) * (one - qR));
    BigFloat eps = cfg.tail_tolerance();

    BigComplex total(prec);
    BigFloat tail(prec);
    long used = 0;
    for (long n = 1;; n += odd_outer ? 2 : 1) {
        if (n > cfg.max_terms)
            throw std::runtime_error("series: truncation cap exceeded before reaching the tail tolerance");
        ++used;
        if (chi.eval_exponent(n) >= 0) {
            BigComplex nu(BigFloat(n, prec) * u.real(), BigFloat(n, prec) * u.imag());
            BigComplex x = nu.exp();
            BigComplex xr(1, prec);
            BigComplex inner(prec);
            for (long r = 1; r <= R; ++r) {
                xr = xr * x;
                if (chi.eval_exponent(r) < 0) continue;
                BigComplex w = values[static_cast<size_t>(mod_l(r, k))];
                if (alternating && r % 2 != 0) w = -w;
                inner = inner + w * xr;
            }
            BigComplex denom = BigComplex(1, prec) - xr;  // 1 - x^R
            check_denominator(denom, prec);
            inner = inner / denom;
            BigComplex term = values[static_cast<size_t>(mod_l(n, k))] * inner;
            BigFloat np = inv_pow(n, p, prec);
            total = total + BigComplex(term.real() * np, term.imag() * np);
        }
        tail = q.pow_int(n + 1) * tail_factor;
        if (!(tail > eps)) break;
    }
    return {total, tail, used};
}

}  // namespace

SeriesValue a1_series(const BigComplex& z, long p, const DirichletCharacter& chi,
                      const SeriesConfig& cfg) {
    if (p < 1) throw std::domain_error("a1_series: p >= 1 required");
    return weighted_series(z, p, chi, cfg, 2, true, false, false);
}

SeriesValue a_plain_series(const BigComplex& z, long p, const DirichletCharacter& chi,
                           const SeriesConfig& cfg) {
    if (p < 1) throw std::domain_error("a_plain_series: p >= 1 required");
    return weighted_series(z, p, chi, cfg, 1, false, false, false);
}

SeriesValue b_series(const BigComplex& z, long p, const DirichletCharacter& chi,
                     const SeriesConfig& cfg) {
    if (p < 1) throw std::domain_error("b_series: p >= 1 required");
    return weighted_series(z, p, chi, cfg, 1, false, true, true);
}

// ---------------------------------------------------------------------------
// residue kernel
// ---------------------------------------------------------------------------

std::vector<Rational> f_residue_bilinear(long p, long k, long c, long d, long j, long mu, long nu) {
    if (p < 1) throw std::domain_error("f_residue_bilinear: p >= 1 required");
    if (c <= 0) throw std::domain_error("f_residue_bilinear: c > 0 required");
    Rational djc = Rational(d * j, c).frac();
    std::vector<Rational> terms;
    terms.reserve(static_cast<size_t>(p) + 2);
    for (long m = 0; m <= p + 1; ++m) {
        Rational left = poly_eval(bernoulli_poly(p + 1 - m), (Rational(nu) + djc) / Rational(k));
        Rational right = poly_eval(bernoulli_poly(m), Rational(mu * c + j, c * k));
        terms.push_back(left * right);
    }
    return terms;
}

BigComplex f_residue(const BigComplex& z, long p, long k, long c, long d, long j, long mu, long nu) {
    const mpfr_prec_t prec = z.prec();
    auto terms = f_residue_bilinear(p, k, c, d, j, mu, nu);
    BigComplex base = -(BigComplex(c, prec) * z + BigComplex(d, prec));
    BigComplex sum(prec);
    for (long m = 0; m <= p + 1; ++m) {
        if (terms[static_cast<size_t>(m)].is_zero()) continue;
        BigComplex coef(Rational(binomial(p + 1, m)) * terms[static_cast<size_t>(m)], prec);
        sum = sum + coef * base.pow_int(m - 1);
    }
    BigFloat two_pi = BigFloat(2, prec) * BigFloat::pi(prec);
    BigComplex pref(BigFloat(0, prec),
                    two_pi * BigFloat(Rational(int_pow(Int(k), p - 1), factorial(p + 1)), prec));
    return pref * sum;
}

// ---------------------------------------------------------------------------
// g1 / g2: exact inner sums per m, embedded once, then complex powers
// ---------------------------------------------------------------------------

namespace {

Cyclotomic g1_inner_exact(long c, long d, long p, long m, const DirichletCharacter& chi, bool alt) {
    long k = chi.modulus();
    Cyclotomic s;
    for (long n = 1; n <= c * k; ++n) {
        if (chi.eval_exponent(n) < 0) continue;
        Rational w = periodic_bernoulli(m, Rational(n, c * k));
        if (alt && n % 2 != 0) w = -w;
        if (w.is_zero()) continue;
        s = s + w * (chi.eval(n) * char_euler(p - m, chi, Rational(d * n, c)));
    }
    return s;
}

Cyclotomic g2_inner_exact(long c, long d, long p, long m, const DirichletCharacter& chi) {
    long k = chi.modulus();
    Cyclotomic s;
    for (long n = 1; n <= c * k; ++n) {
        if (chi.eval_exponent(n) < 0) continue;
        Rational w = periodic_bernoulli(m, Rational(n, c * k));
        if (n % 2 != 0) w = -w;
        if (w.is_zero()) continue;
        s = s + w * (chi.eval(n) * gen_bernoulli(p + 1 - m, chi, Rational(d * n, c)));
    }
    return s;
}

}  // namespace

BigComplex g1_eval(long c, long d, const BigComplex& z, long p, const DirichletCharacter& chi,
                   bool shifted) {
    require_odd_p(p, "g1_eval");
    if (chi.modulus() % 2 == 0) throw std::domain_error("g1_eval: odd character modulus required");
    if (c <= 0) throw std::domain_error("g1_eval: c > 0 required");
    if (!shifted && mod_l(d, 2) != 0)
        throw std::domain_error("g1_eval: d must be even (unshifted form)");
    if (shifted && (mod_l(c, 2) == 0 || mod_l(d, 2) == 0))
        throw std::domain_error("g1_eval: c and d must be odd (shifted form)");
    const mpfr_prec_t prec = z.prec();
    const long k = chi.modulus();
    long base_shift = shifted ? c * k : 0;
    BigComplex base = -(BigComplex(c, prec) * z + BigComplex(d + base_shift, prec));
    BigComplex total(prec);
    for (long m = 1; m <= p; ++m) {
        Cyclotomic inner = g1_inner_exact(c, d, p, m, chi, shifted);
        if (inner.is_zero()) continue;
        Rational coef = Rational(binomial(p, m)) * Rational(Int(k)).pow(m - p);
        total = total + embed_value(coef * inner, prec) * base.pow_int(m - 1);
    }
    return total;
}

BigComplex g2_eval(long c, long d, const BigComplex& z, long p, const DirichletCharacter& chi) {
    require_odd_p(p, "g2_eval");
    if (c <= 0) throw std::domain_error("g2_eval: c > 0 required");
    const mpfr_prec_t prec = z.prec();
    const long k = chi.modulus();
    BigComplex base = -(BigComplex(c, prec) * z + BigComplex(d, prec));
    BigComplex total(prec);
    for (long m = 1; m <= p; ++m) {
        Cyclotomic inner = g2_inner_exact(c, d, p, m, chi);
        if (inner.is_zero()) continue;
        Rational coef = Rational(binomial(p + 1, m)) * Rational(Int(k)).pow(m - p);
        total = total + embed_value(coef * inner, prec) * base.pow_int(m - 1);
    }
    return total;
}

// ---------------------------------------------------------------------------
// displayed transformation formulas
// ---------------------------------------------------------------------------

namespace {

BigComplex two_pi_i_pow(long p, mpfr_prec_t prec) {
    BigFloat two_pi = BigFloat(2, prec) * BigFloat::pi(prec);
    return BigComplex(BigFloat(0, prec), two_pi).pow_int(p);
}

BigComplex mobius_apply(long a, long b, long c, long d, const BigComplex& z) {
    const mpfr_prec_t prec = z.prec();
    return (BigComplex(a, prec) * z + BigComplex(b, prec)) /
           (BigComplex(c, prec) * z + BigComplex(d, prec));
}

}  // namespace

NumericSides transform_sides(TransformKind kind, const ModularTuple& t, const BigComplex& z,
                             long p, const DirichletCharacter& chi, const SeriesConfig& cfg) {
    t.validate();
    require_odd_p(p, "transform_sides");
    require_upper_half(z, "transform_sides");
    const long k = chi.modulus();
    if (k % 2 == 0) throw std::domain_error("transform_sides: odd character modulus required");
    const mpfr_prec_t prec = cfg.precision_bits;

    bool ad_case = kind == TransformKind::d_even_ad || kind == TransformKind::shifted_ad ||
                   kind == TransformKind::c_even_ad;
    if (ad_case) {
        if (mod_l(t.a, k) != 0 || mod_l(t.d, k) != 0)
            throw std::domain_error("transform_sides: hypothesis a = d = 0 (mod k) violated");
    } else {
        if (mod_l(t.b, k) != 0 || mod_l(t.c, k) != 0)
            throw std::domain_error("transform_sides: hypothesis b = c = 0 (mod k) violated");
    }
    bool shifted = kind == TransformKind::shifted_ad || kind == TransformKind::shifted_bc;
    if (kind == TransformKind::d_even_ad || kind == TransformKind::d_even_bc) {
        if (mod_l(t.d, 2) != 0) throw std::domain_error("transform_sides: hypothesis 'd even' violated");
    } else if (kind == TransformKind::c_even_ad || kind == TransformKind::c_even_bc) {
        if (mod_l(t.c, 2) != 0) throw std::domain_error("transform_sides: hypothesis 'c even' violated");
    } else {
        if (mod_l(t.c, 2) == 0 || mod_l(t.d, 2) == 0)
            throw std::domain_error("transform_sides: hypothesis 'c and d odd' violated");
    }

    DirichletCharacter cj = chi.conjugate();
    Cyclotomic gauss_chi = gauss_sum(chi, 1);
    Cyclotomic gauss_cj = gauss_sum(cj, 1);
    const Rational half(1, 2);

    long dd = shifted ? t.d + t.c * k : t.d;
    long bb = shifted ? t.b + t.a * k : t.b;
    BigComplex tz = mobius_apply(t.a, bb, t.c, dd, z);
    SeriesValue h1 = a1_series(tz, p, chi, cfg);
    BigComplex denom_pow = (BigComplex(t.c, prec) * z + BigComplex(dd, prec)).pow_int(p - 1);
    BigComplex gauss_cj_num = embed_value(gauss_cj, prec);
    BigComplex lhs = gauss_cj_num * denom_pow * (BigComplex(2, prec) * h1.value);
    BigFloat tail = h1.tail_bound * gauss_cj_num.abs() * denom_pow.abs() * BigFloat(2, prec);

    BigComplex rhs(prec);
    auto add_series_part = [&](const Cyclotomic& coef, const SeriesValue& sv) {
        BigComplex coef_num = embed_value(coef, prec);
        rhs = rhs + coef_num * (BigComplex(2, prec) * sv.value);
        tail = tail + sv.tail_bound * coef_num.abs() * BigFloat(2, prec);
    };

    switch (kind) {
        case TransformKind::d_even_ad: {
            Cyclotomic front = cj.eval(t.b) * chi.eval(t.c);
            add_series_part(Rational(2).pow(p) * (chi.eval(2) * gauss_chi) * front,
                            b_series(z, p, cj, cfg));
            Cyclotomic g_coef = Rational(chi.parity()) * half * front;
            rhs = rhs - two_pi_i_pow(p, prec) / BigComplex(Rational(factorial(p)), prec) *
                            embed_value(g_coef, prec) * g1_eval(t.c, t.d, z, p, cj, false);
            break;
        }
        case TransformKind::d_even_bc: {
            Cyclotomic front = cj.eval(t.a) * chi.eval(t.d);
            add_series_part(Rational(2).pow(p) * (cj.eval(2) * gauss_cj) * front,
                            b_series(z, p, chi, cfg));
            Cyclotomic g_coef = Rational(chi.parity()) * half * front;
            rhs = rhs - two_pi_i_pow(p, prec) / BigComplex(Rational(factorial(p)), prec) *
                            embed_value(g_coef, prec) * g1_eval(t.c, t.d, z, p, chi, false);
            break;
        }
        case TransformKind::shifted_ad: {
            Cyclotomic front = cj.eval(t.b) * chi.eval(t.c);
            add_series_part(Rational(2).pow(p) * (chi.eval(2) * gauss_chi) * front,
                            b_series(z, p, cj, cfg));
            Cyclotomic g_coef = half * (cj.eval(t.b) * chi.eval(-t.c));
            rhs = rhs - two_pi_i_pow(p, prec) / BigComplex(Rational(factorial(p)), prec) *
                            embed_value(g_coef, prec) * g1_eval(t.c, t.d, z, p, cj, true);
            break;
        }
        case TransformKind::shifted_bc: {
            Cyclotomic front = cj.eval(t.a) * chi.eval(t.d);
            add_series_part(Rational(2).pow(p) * (cj.eval(2) * gauss_cj) * front,
                            b_series(z, p, chi, cfg));
            Cyclotomic g_coef = half * (cj.eval(t.a) * chi.eval(-t.d));
            rhs = rhs - two_pi_i_pow(p, prec) / BigComplex(Rational(factorial(p)), prec) *
                            embed_value(g_coef, prec) * g1_eval(t.c, t.d, z, p, chi, true);
            break;
        }
        case TransformKind::c_even_ad: {
            Cyclotomic front = cj.eval(t.b) * chi.eval(t.c);
            add_series_part(front * gauss_chi, a1_series(z, p, cj, cfg));
            Cyclotomic g_coef = cj.eval(-t.b) * chi.eval(t.c);
            rhs = rhs + two_pi_i_pow(p, prec) / BigComplex(Rational(factorial(p + 1)), prec) *
                            embed_value(g_coef, prec) * g2_eval(t.c, t.d, z, p, cj);
            break;
        }
        case TransformKind::c_even_bc: {
            Cyclotomic front = cj.eval(t.a) * chi.eval(t.d);
            add_series_part(front * gauss_cj, a1_series(z, p, chi, cfg));
            Cyclotomic g_coef = cj.eval(t.a) * chi.eval(-t.d);
            rhs = rhs + two_pi_i_pow(p, prec) / BigComplex(Rational(factorial(p + 1)), prec) *
                            embed_value(g_coef, prec) * g2_eval(t.c, t.d, z, p, chi);
            break;
        }
    }
    return {lhs, rhs, tail};
}

BigComplex transform_residual(TransformKind kind, const ModularTuple& t, const BigComplex& z,
                              long p, const DirichletCharacter& chi, const SeriesConfig& cfg) {
    return transform_sides(kind, t, z, p, chi, cfg).residual();
}

// ---------------------------------------------------------------------------
// g1/g2 reciprocity functional equations (finite sums; no series involved)
// ---------------------------------------------------------------------------

NumericSides reciprocity_g_sides(GReciprocityKind kind, long c, long d, const BigComplex& z,
                                 long p, const DirichletCharacter& chi, const SeriesConfig& cfg) {
    require_odd_p(p, "reciprocity_g_sides");
    require_upper_half(z, "reciprocity_g_sides");
    const long k = chi.modulus();
    if (k % 2 == 0) throw std::domain_error("reciprocity_g_sides: odd character modulus required");
    if (gcd_l(c, d) != 1) throw std::domain_error("reciprocity_g_sides: gcd(c, d) = 1 required");
    if (c % k != 0 && d % k != 0)
        throw std::domain_error("reciprocity_g_sides: c or d = 0 (mod k) required");
    const mpfr_prec_t prec = cfg.precision_bits;
    DirichletCharacter cj = chi.conjugate();
    BigFloat zero_tail(prec);

    if (kind == GReciprocityKind::teoRP2) {
        if (c <= 0 || d <= 0 || c % 2 == 0 || d % 2 == 0)
            throw std::domain_error("teoRP2: c and d must be odd positive");
        BigComplex z_minus_k = z - BigComplex(k, prec);
        if (z_minus_k.abs().is_zero()) throw std::domain_error("teoRP2: z = k is a pole of V1");
        BigComplex v1 = (BigComplex(-k, prec) * z + BigComplex(k * k - 1, prec)) / z_minus_k;
        BigComplex lhs = g1_eval(d, -c - d * k, z, p, chi, false)
                       - BigComplex(chi.parity(), prec) * z_minus_k.pow_int(p - 1) *
                             g1_eval(c, d + c * k, v1, p, cj, false);
        BigComplex sum(prec);
        for (long m = 0; m <= p - 1; ++m) {
            Cyclotomic prod = char_euler(p - 1 - m, cj, Rational(0)) * char_euler(m, chi, Rational(0));
            if (prod.is_zero()) continue;
            sum = sum + BigComplex(Rational(binomial(p - 1, m)), prec) * embed_value(prod, prec) *
                            z_minus_k.pow_int(m);
        }
        BigComplex pref = embed_value(cj.eval(4), prec) *
                          BigComplex(Rational(Int(p), Int(2) * int_pow(Int(k), p - 1)), prec);
        return {lhs, pref * sum, zero_tail};
    }

    // teoRP1
    if (mod_l(d, 2) != 0) throw std::domain_error("teoRP1: d must be even");
    if (c <= 0 || d <= 0) throw std::domain_error("teoRP1: c, d > 0 required");
    if (z.abs().is_zero()) throw std::domain_error("teoRP1: z = 0 is a pole");
    BigComplex minus_inv_z = -(BigComplex(1, prec) / z);
    BigComplex lhs = BigComplex(Rational(p + 1, 2), prec) * z.pow_int(p - 1) *
                         g1_eval(c, d, minus_inv_z, p, cj, false)
                   + g2_eval(d, -c, z, p, chi);
    BigComplex sum(prec);
    for (long m = 1; m <= p; ++m) {
        Cyclotomic prod = gen_bernoulli(p + 1 - m, chi, Rational(0)) *
                          char_euler(m - 1, cj, Rational(0));
        if (prod.is_zero()) continue;
        sum = sum + BigComplex(Rational(binomial(p + 1, m)) * Rational(m, 2), prec) *
                        embed_value(prod, prec) * (-z).pow_int(m - 1);
    }
    BigComplex pref(Rational(Int(-chi.parity()), int_pow(Int(k), p - 1)), prec);
    return {lhs, pref * sum, zero_tail};
}

BigComplex reciprocity_g_residual(GReciprocityKind kind, long c, long d, const BigComplex& z,
                                  long p, const DirichletCharacter& chi, const SeriesConfig& cfg) {
    return reciprocity_g_sides(kind, c, d, z, p, chi, cfg).residual();
}

// ---------------------------------------------------------------------------
// series relations of the final section
// ---------------------------------------------------------------------------

namespace {

// sum over j in [1,k) of outer(j) * sum_n inner(n) / (n^p (e^{n a - 2 pi i j/k} +- 1));
// n runs over all or only odd positive integers.
BigComplex rearranged_sum(const DirichletCharacter& outer_chi, const DirichletCharacter& inner_chi,
                          long p, const BigFloat& a, bool plus_one, bool odd_only,
                          const SeriesConfig& cfg, BigFloat* tail_out) {
    const mpfr_prec_t prec = cfg.precision_bits;
    const long k = outer_chi.modulus();
    BigFloat eps = cfg.tail_tolerance();
    BigFloat one(1, prec);
    BigFloat q = (-a).exp();
    BigFloat two_pi = BigFloat(2, prec) * BigFloat::pi(prec);
    BigComplex total(prec);

    for (long j = 1; j < k; ++j) {
        if (outer_chi.eval_exponent(j) < 0) continue;
        BigComplex wj = outer_chi.eval(j).embed(prec);
        BigFloat angle = two_pi * BigFloat(j, prec) / BigFloat(k, prec);
        BigComplex rot(angle.cos(), -angle.sin());  // e^{-2 pi i j / k}
        BigComplex inner(prec);
        for (long n = 1;; n += odd_only ? 2 : 1) {
            if (n > cfg.max_terms)
                throw std::runtime_error("series: truncation cap exceeded before the tail tolerance");
            if (inner_chi.eval_exponent(n) >= 0) {
                BigFloat en = (BigFloat(n, prec) * a).exp();
                BigComplex denom = BigComplex(en, BigFloat(0, prec)) * rot;
                denom = plus_one ? denom + BigComplex(1, prec) : denom - BigComplex(1, prec);
                check_denominator(denom, prec);
                BigComplex term = inner_chi.eval(n).embed(prec) / denom;
                BigFloat np = inv_pow(n, p, prec);
                inner = inner + BigComplex(term.real() * np, term.imag() * np);
            }
            BigFloat tail = BigFloat(2, prec) * q.pow_int(n + 1) / (one - q);
            if (!(tail > eps)) {
                if (tail_out) *tail_out = *tail_out + tail;
                break;
            }
        }
        total = total + wj * inner;
    }
    return total;
}

// sum_{n>=1} (-1)^{n*sign_mult} chi(n) / (n^p (2 cosh(cosh_mult n w) - (-1)^n))
BigComplex cosh_series(const DirichletCharacter& chi, long p, const BigFloat& w, long cosh_mult,
                       long sign_mult, const SeriesConfig& cfg, BigFloat* tail_out) {
    const mpfr_prec_t prec = cfg.precision_bits;
    BigFloat eps = cfg.tail_tolerance();
    BigFloat one(1, prec);
    BigFloat q = (-(BigFloat(cosh_mult, prec) * w)).exp();
    BigComplex total(prec);
    for (long n = 1;; ++n) {
        if (n > cfg.max_terms)
            throw std::runtime_error("series: truncation cap exceeded before the tail tolerance");
        if (chi.eval_exponent(n) >= 0) {
            BigFloat ch = (BigFloat(cosh_mult * n, prec) * w).cosh();
            BigFloat denom = BigFloat(2, prec) * ch - BigFloat(mod_l(n, 2) == 0 ? 1 : -1, prec);
            BigFloat scale = one / (BigFloat(n, prec).pow_int(p) * denom);
            if (mod_l(n * sign_mult, 2) != 0) scale = -scale;
            BigComplex term = chi.eval(n).embed(prec);
            total = total + BigComplex(term.real() * scale, term.imag() * scale);
        }
        BigFloat tail = BigFloat(2, prec) * q.pow_int(n + 1) / (one - q);
        if (!(tail > eps)) {
            if (tail_out) *tail_out = *tail_out + tail;
            break;
        }
    }
    return total;
}

}  // namespace

NumericSides seri1_identity(const DirichletCharacter& chi, long p, const BigFloat& alpha,
                            const SeriesConfig& cfg) {
    require_odd_p(p, "seri1_identity");
    if (!(alpha.sign() > 0)) throw std::domain_error("seri1_identity: alpha > 0 required");
    const long k = chi.modulus();
    if (k % 2 == 0) throw std::domain_error("seri1_identity: odd character modulus required");
    const mpfr_prec_t prec = cfg.precision_bits;
    BigFloat pi_v = BigFloat::pi(prec);
    BigFloat beta = (pi_v / BigFloat(k, prec)).pow_int(2) / alpha;
    DirichletCharacter cj = chi.conjugate();
    BigFloat tail(prec);

    BigComplex t1 = rearranged_sum(cj, chi, p, BigFloat(2, prec) * alpha, true, false, cfg, &tail);
    BigComplex t2 = rearranged_sum(chi, cj, p, beta, false, true, cfg, &tail);

    BigComplex lhs = BigComplex((-beta).pow_int((p - 1) / 2), BigFloat(0, prec)) * t1
                   + embed_value(Rational(2).pow(p) * chi.eval(-2), prec) *
                         BigComplex(alpha.pow_int((p - 1) / 2), BigFloat(0, prec)) * t2;

    BigComplex rhs(prec);
    for (long m = 1; m <= p; ++m) {
        Cyclotomic prod = char_euler(p - m, cj, Rational(0)) * gen_bernoulli(m, chi, Rational(0));
        if (prod.is_zero()) continue;
        BigFloat apow = alpha.pow(BigFloat(p, prec) - BigFloat(m, prec) / BigFloat(2, prec));
        BigFloat bpow = beta.pow(BigFloat(Rational(p - 1 + m, 2), prec));
        rhs = rhs + BigComplex(Rational(binomial(p, m)), prec) * BigComplex::i(prec).pow_int(p + 1 - m) *
                        BigComplex(apow * bpow, BigFloat(0, prec)) * embed_value(prod, prec);
    }
    BigComplex pref(Rational(int_pow(Int(2), p) * Int(k), Int(4) * factorial(p)), prec);
    return {lhs, pref * rhs, tail};
}

NumericSides corollary21_identity(const DirichletCharacter& chi, long p, const SeriesConfig& cfg) {
    require_odd_p(p, "corollary21_identity");
    if (chi.modulus() != 3)
        throw std::domain_error("corollary21_identity: the modulus-3 character is required");
    const mpfr_prec_t prec = cfg.precision_bits;
    BigFloat pi_v = BigFloat::pi(prec);
    BigFloat w = pi_v / BigFloat(3, prec);
    BigFloat tail(prec);
    BigComplex lhs = cosh_series(chi, p, w, 1, (p + 1) / 2, cfg, &tail);

    BigComplex sum(prec);
    for (long m = 1; m <= p; ++m) {
        Cyclotomic prod = char_euler(p - m, chi, Rational(0)) * gen_bernoulli(m, chi, Rational(0));
        if (prod.is_zero()) continue;
        sum = sum + BigComplex(Rational(binomial(p, m)), prec) * BigComplex::i(prec).pow_int(p - m) *
                        embed_value(prod, prec);
    }
    BigFloat sqrt3 = BigFloat(3, prec).sqrt();
    BigComplex pref = BigComplex(3, prec) *
                      BigComplex(w.pow_int(p) / (BigFloat(4, prec) * sqrt3 *
                                                 BigFloat(Rational(factorial(p)), prec)),
                                 BigFloat(0, prec));
    if (mod_l((p + 1) / 2, 2) != 0) pref = -pref;
    return {lhs, pref * sum, tail};
}

NumericSides final_theorem_identity(const DirichletCharacter& chi, const BigFloat& alpha,
                                    const SeriesConfig& cfg) {
    if (chi.modulus() != 3)
        throw std::domain_error("final_theorem_identity: the modulus-3 character is required");
    if (!(alpha.sign() > 0)) throw std::domain_error("final_theorem_identity: alpha > 0 required");
    const mpfr_prec_t prec = cfg.precision_bits;
    BigFloat pi_v = BigFloat::pi(prec);
    BigFloat beta = (pi_v / BigFloat(3, prec)).pow_int(2) / alpha;
    BigFloat tail(prec);
    BigComplex lhs = cosh_series(chi, 1, alpha, 2, 1, cfg, &tail) +
                     cosh_series(chi, 1, beta, 2, 1, cfg, &tail);
    BigFloat claimed = -(pi_v / (BigFloat(3, prec) * BigFloat(3, prec).sqrt()));
    return {lhs, BigComplex(claimed, BigFloat(0, prec)), tail};
}

NumericSides final_theorem_particular(const DirichletCharacter& chi, const SeriesConfig& cfg) {
    if (chi.modulus() != 3)
        throw std::domain_error("final_theorem_particular: the modulus-3 character is required");
    const mpfr_prec_t prec = cfg.precision_bits;
    BigFloat pi_v = BigFloat::pi(prec);
    BigFloat w = pi_v / BigFloat(3, prec);
    BigFloat tail(prec);
    BigComplex lhs = cosh_series(chi, 1, w, 2, 1, cfg, &tail);
    BigFloat claimed = -(pi_v / (BigFloat(6, prec) * BigFloat(3, prec).sqrt()));
    return {lhs, BigComplex(claimed, BigFloat(0, prec)), tail};
}

}  // namespace charsums
