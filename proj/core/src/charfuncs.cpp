#include "charsums/charfuncs.hpp"

#include <stdexcept>

namespace charsums {

namespace {
// conj(chi)(j) as a Cyclotomic of the character's value order
Cyclotomic conj_value(const DirichletCharacter& chi, long j) {
    long t = chi.eval_exponent(j);
    if (t < 0) return Cyclotomic(Rational(0));
    return Cyclotomic::root_of_unity(chi.value_order(), -t);
}

void require_odd_modulus(const DirichletCharacter& chi, const char* what) {
    if (chi.modulus() % 2 == 0)
        throw std::domain_error(std::string(what) + ": requires an odd character modulus");
}
}  // namespace

Cyclotomic gen_bernoulli(long m, const DirichletCharacter& chi, const Rational& x) {
    if (m < 1) throw std::domain_error("gen_bernoulli: m >= 1 required");
    long k = chi.modulus();
    Cyclotomic sum;
    for (long j = 0; j < k; ++j) {
        long t = chi.eval_exponent(j);
        if (t < 0) continue;
        Rational b = periodic_bernoulli(m, (Rational(j) + x) / Rational(k));
        if (b.is_zero()) continue;
        sum = sum + b * conj_value(chi, j);
    }
    return Rational(Int(k)).pow(m - 1) * sum;
}

Cyclotomic char_euler(long m, const DirichletCharacter& chi, const Rational& x) {
    if (m < 0) throw std::domain_error("char_euler: m >= 0 required");
    require_odd_modulus(chi, "char_euler");
    long k = chi.modulus();
    Cyclotomic sum;
    for (long j = 0; j < k; ++j) {
        long t = chi.eval_exponent(j);
        if (t < 0) continue;
        Rational e = periodic_euler(m, (Rational(j) + x) / Rational(k));
        if (e.is_zero()) continue;
        if (j % 2 != 0) e = -e;
        sum = sum + e * conj_value(chi, j);
    }
    return Rational(Int(k)).pow(m) * sum;
}

std::pair<Cyclotomic, Cyclotomic> multiplication_bernoulli(long m, const DirichletCharacter& chi,
                                                           const Rational& x, long r) {
    if (m < 1) throw std::domain_error("multiplication_bernoulli: m >= 1 required");
    if (r < 1) throw std::domain_error("multiplication_bernoulli: r >= 1 required");
    long k = chi.modulus();
    Cyclotomic lhs;
    for (long j = 0; j < r; ++j)
        lhs = lhs + gen_bernoulli(m, chi, x + Rational(j * k, r));
    Cyclotomic rhs = Rational(1, r).pow(m - 1) * (chi.eval(r) * gen_bernoulli(m, chi, Rational(r) * x));
    return {lhs, rhs};
}

Cyclotomic halving_residual(long n, const DirichletCharacter& chi, const Rational& x) {
    if (n < 1) throw std::domain_error("halving_residual: n >= 1 required");
    require_odd_modulus(chi, "halving_residual");
    DirichletCharacter cj = chi.conjugate();
    Cyclotomic lhs = Rational(2).pow(n) * (chi.eval(2) * gen_bernoulli(n, cj, x / Rational(2)))
                     - gen_bernoulli(n, cj, x);
    Cyclotomic rhs = Rational(-n, 2) * char_euler(n - 1, cj, x);
    return lhs - rhs;
}

std::pair<Cyclotomic, Cyclotomic> fold_even_odd(long m, const DirichletCharacter& chi,
                                                const Rational& x) {
    require_odd_modulus(chi, "fold_even_odd");
    long k = chi.modulus();
    Cyclotomic lhs;
    for (long mu = 0; mu < k; ++mu) {
        Rational e = periodic_euler(m, (Rational(2 * mu) + x) / Rational(k));
        lhs = lhs + e * chi.eval(2 * mu);
    }
    Cyclotomic rhs;
    for (long mu = 0; mu < k; ++mu) {
        Rational e = periodic_euler(m, (Rational(mu) + x) / Rational(k));
        if (mu % 2 != 0) e = -e;
        rhs = rhs + e * chi.eval(mu);
    }
    return {lhs, rhs};
}

}  // namespace charsums
