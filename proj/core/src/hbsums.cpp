#include "charsums/hbsums.hpp"

#include <stdexcept>

namespace charsums {

namespace {

long floor_div(long a, long b) {
    // b > 0
    long q = a / b, r = a % b;
    return (r != 0 && r < 0) ? q - 1 : q;
}

int alt_sign(long e) { return mod_l(e, 2) == 0 ? 1 : -1; }

void require_positive_c(long c, const char* what) {
    if (c <= 0) throw std::domain_error(std::string(what) + ": c > 0 required");
}

Rational parity_rational(const DirichletCharacter& chi) { return Rational(chi.parity()); }

}  // namespace

Rational classical_sum(ClassicalKind kind, long d, long c) {
    require_positive_c(c, "classical_sum");
    Rational total(0);
    for (long n = 1; n < c; ++n) {
        long fl = floor_div(d * n, c);
        switch (kind) {
            case ClassicalKind::S:
                total += Rational(alt_sign(n + 1 + fl));
                break;
            case ClassicalKind::s1:
                total += Rational(alt_sign(fl)) * periodic_bernoulli(1, Rational(n, c));
                break;
            case ClassicalKind::s2:
                total += Rational(alt_sign(n)) * periodic_bernoulli(1, Rational(n, c)) *
                         periodic_bernoulli(1, Rational(d * n, c));
                break;
            case ClassicalKind::s3:
                total += Rational(alt_sign(n)) * periodic_bernoulli(1, Rational(d * n, c));
                break;
            case ClassicalKind::s4:
                total += Rational(alt_sign(fl));
                break;
            case ClassicalKind::s5:
                total += Rational(alt_sign(n + fl)) * periodic_bernoulli(1, Rational(n, c));
                break;
        }
    }
    return total;
}

Cyclotomic dedekind_char_sum(long p, long d, long c, const DirichletCharacter& chi) {
    require_positive_c(c, "dedekind_char_sum");
    long k = chi.modulus();
    Cyclotomic total;
    for (long n = 1; n <= c * k; ++n) {
        if (chi.eval_exponent(n) < 0) continue;
        Rational b1 = periodic_bernoulli(1, Rational(n, c * k));
        Cyclotomic bp = gen_bernoulli(p, chi, Rational(d * n, c));
        total = total + b1 * (chi.eval(n) * bp);
    }
    return total;
}

Cyclotomic s1p(long p, long d, long c, const DirichletCharacter& chi) {
    require_positive_c(c, "s1p");
    long k = chi.modulus();
    Cyclotomic total;
    for (long n = 1; n <= c * k; ++n) {
        if (chi.eval_exponent(n) < 0) continue;
        Rational b1 = periodic_bernoulli(1, Rational(n, c * k));
        if (b1.is_zero()) continue;
        total = total + b1 * (chi.eval(n) * char_euler(p - 1, chi, Rational(d * n, c)));
    }
    return total;
}

Cyclotomic s2p(long p, long d, long c, const DirichletCharacter& chi) {
    require_positive_c(c, "s2p");
    long k = chi.modulus();
    Cyclotomic total;
    for (long n = 1; n <= c * k; ++n) {
        if (chi.eval_exponent(n) < 0) continue;
        Rational b1 = Rational(alt_sign(n)) * periodic_bernoulli(1, Rational(n, c * k));
        if (b1.is_zero()) continue;
        total = total + b1 * (chi.eval(n) * gen_bernoulli(p, chi, Rational(d * n, c)));
    }
    return total;
}

Cyclotomic s5p(long p, long d, long c, const DirichletCharacter& chi) {
    require_positive_c(c, "s5p");
    long k = chi.modulus();
    Cyclotomic total;
    for (long n = 1; n <= c * k; ++n) {
        if (chi.eval_exponent(n) < 0) continue;
        Rational b1 = Rational(alt_sign(n)) * periodic_bernoulli(1, Rational(n, c * k));
        if (b1.is_zero()) continue;
        total = total + b1 * (chi.eval(n) * char_euler(p - 1, chi, Rational(d * n, c)));
    }
    return total;
}

Cyclotomic mixed_sum(int family, long p, long m, long d, long c, const DirichletCharacter& chi) {
    require_positive_c(c, "mixed_sum");
    if (m < 1 || m > p) throw std::domain_error("mixed_sum: 1 <= m <= p required");
    if (family != 1 && family != 2 && family != 5)
        throw std::domain_error("mixed_sum: family must be 1, 2 or 5");
    long k = chi.modulus();
    Cyclotomic total;
    for (long n = 1; n <= c * k; ++n) {
        if (chi.eval_exponent(n) < 0) continue;
        Rational w = periodic_bernoulli(m, Rational(n, c * k));
        if (family != 1) w *= Rational(alt_sign(n));
        if (w.is_zero()) continue;
        Cyclotomic inner = family == 2 ? gen_bernoulli(p + 1 - m, chi, Rational(d * n, c))
                                       : char_euler(p - m, chi, Rational(d * n, c));
        total = total + w * (chi.eval(n) * inner);
    }
    return total;
}

ExactSides reciprocity_sides_s5(long p, long c, long d, const DirichletCharacter& chi) {
    if (p < 1 || p % 2 == 0) throw std::domain_error("s5 reciprocity: p must be odd (>= 1)");
    if (c <= 0 || d <= 0 || c % 2 == 0 || d % 2 == 0)
        throw std::domain_error("s5 reciprocity: c and d must be odd positive");
    if (gcd_l(c, d) != 1) throw std::domain_error("s5 reciprocity: gcd(c, d) = 1 required");
    long k = chi.modulus();
    if (c % k != 0 && d % k != 0)
        throw std::domain_error("s5 reciprocity: c or d must be divisible by the modulus");
    DirichletCharacter cj = chi.conjugate();

    Cyclotomic lhs = Rational(c) * Rational(Int(d)).pow(p) * s5p(p, c, d, chi)
                   + Rational(d) * Rational(Int(c)).pow(p) * s5p(p, d, c, cj);

    Cyclotomic sum;
    for (long m = 0; m <= p - 1; ++m) {
        Rational coef = Rational(binomial(p - 1, m)) * Rational(Int(c)).pow(m + 1) *
                        Rational(Int(d)).pow(p - m);
        sum = sum + coef * (char_euler(p - 1 - m, cj, Rational(0)) * char_euler(m, chi, Rational(0)));
    }
    Cyclotomic rhs = Rational(-1, 2) * (cj.eval(-4) * sum);
    return {lhs, rhs};
}

Cyclotomic reciprocity_residual_s5(long p, long c, long d, const DirichletCharacter& chi) {
    return reciprocity_sides_s5(p, c, d, chi).residual();
}

ExactSides reciprocity_sides_s1s2(long p, long c, long d, const DirichletCharacter& chi) {
    if (p < 1 || p % 2 == 0) throw std::domain_error("s1s2 reciprocity: p must be odd (>= 1)");
    if (c <= 0 || d <= 0) throw std::domain_error("s1s2 reciprocity: c, d > 0 required");
    if (d % 2 != 0) throw std::domain_error("s1s2 reciprocity: d must be even");
    if (gcd_l(c, d) != 1) throw std::domain_error("s1s2 reciprocity: gcd(d, c) = 1 required");
    long k = chi.modulus();
    if (c % k != 0 && d % k != 0)
        throw std::domain_error("s1s2 reciprocity: d or c must be divisible by the modulus");
    DirichletCharacter cj = chi.conjugate();
    Rational chi_m1 = parity_rational(chi);

    Cyclotomic lhs = Rational(p * d) * Rational(Int(c)).pow(p) * s1p(p, d, c, cj)
                   - (chi_m1 * Rational(2 * c)) * Rational(Int(d)).pow(p) * s2p(p, c, d, chi);

    Cyclotomic sum;
    for (long m = 1; m <= p; ++m) {
        Rational coef = Rational(alt_sign(m)) * Rational(binomial(p, m - 1)) *
                        Rational(Int(c)).pow(m) * Rational(Int(d)).pow(p + 1 - m);
        sum = sum + coef * (gen_bernoulli(p + 1 - m, chi, Rational(0)) *
                            char_euler(m - 1, cj, Rational(0)));
    }
    Cyclotomic rhs = chi_m1 * sum;
    return {lhs, rhs};
}

Cyclotomic reciprocity_residual_s1s2(long p, long c, long d, const DirichletCharacter& chi) {
    return reciprocity_sides_s1s2(p, c, d, chi).residual();
}

ExactSides zk_specialization_sides(long p, long c, long d, const DirichletCharacter& chi) {
    if (p < 1 || p % 2 == 0) throw std::domain_error("zk specialization: p must be odd");
    long k = chi.modulus();
    DirichletCharacter cj = chi.conjugate();
    Cyclotomic lhs;
    for (long m = 1; m <= p; ++m) {
        Rational coef = Rational(binomial(p, m)) * Rational(Int(-k * c)).pow(m - 1);
        lhs = lhs + coef * mixed_sum(5, p, m, c, d, chi);
    }
    Cyclotomic rhs = Rational(Int(-1)) * Rational(Int(k * c)).pow(p - 1) * mixed_sum(5, p, p, d, c, cj)
                   - Rational(p, 2) * (cj.eval(-4) * (char_euler(p - 1, cj, Rational(0)) *
                                                      char_euler(0, chi, Rational(0))));
    return {lhs, rhs};
}

ExactSides z0_specialization_sides(long p, long c, long d, const DirichletCharacter& chi) {
    if (p < 1 || p % 2 == 0) throw std::domain_error("z0 specialization: p must be odd");
    long k = chi.modulus();
    DirichletCharacter cj = chi.conjugate();
    Cyclotomic lhs;
    for (long m = 1; m <= p; ++m) {
        Rational coef = Rational(binomial(p + 1, m)) * Rational(Int(-c * k)).pow(m - 1);
        lhs = lhs + coef * mixed_sum(2, p, m, c, d, cj);
    }
    Cyclotomic rhs = Rational(p + 1, 2) *
                     (parity_rational(chi) * Rational(Int(c * k)).pow(p - 1) * mixed_sum(1, p, p, d, c, chi)
                      + gen_bernoulli(p, chi, Rational(0)) * char_euler(0, cj, Rational(0)));
    return {lhs, rhs};
}

Cyclotomic scaling_check(int family, long p, long q, long d, long c, const DirichletCharacter& chi) {
    if (q < 1) throw std::domain_error("scaling_check: q >= 1 required");
    if (p < 1 || p % 2 == 0) throw std::domain_error("scaling_check: p must be odd");
    if (gcd_l(d, c) != 1) throw std::domain_error("scaling_check: gcd(d, c) = 1 required");
    switch (family) {
        case 1:
            if (d % 2 != 0) throw std::domain_error("scaling_check: family 1 needs d even");
            return s1p(p, q * d, q * c, chi) - s1p(p, d, c, chi);
        case 2:
            if (c % 2 != 0) throw std::domain_error("scaling_check: family 2 needs c even");
            return s2p(p, q * d, q * c, chi) - s2p(p, d, c, chi);
        case 5:
            if ((c + d) % 2 != 0) throw std::domain_error("scaling_check: family 5 needs c+d even");
            return s5p(p, q * d, q * c, chi) - s5p(p, d, c, chi);
        default:
            throw std::domain_error("scaling_check: family must be 1, 2 or 5");
    }
}

}  // namespace charsums
