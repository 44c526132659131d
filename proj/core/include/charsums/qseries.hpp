#pragma once

#include <string>
#include <vector>

#include "charsums/hbsums.hpp"

namespace charsums {

/// Modular substitution data: Tz = (az+b)/(cz+d), ad - bc = 1, c > 0.
struct ModularTuple {
    long a, b, c, d;
    void validate() const;
};

/// Truncation policy for the infinite series.  The truncation index is the
/// first n whose geometric tail bound drops below tail_tolerance().
struct SeriesConfig {
    mpfr_prec_t precision_bits = 256;
    /// log2 of the tail tolerance; 0 means the default 3*precision_bits/5.
    long tail_bits = 0;
    long max_terms = 200000;

    long effective_tail_bits() const { return tail_bits > 0 ? tail_bits : 3 * precision_bits / 5; }
    BigFloat tail_tolerance() const;
};

struct SeriesValue {
    BigComplex value;
    BigFloat tail_bound;
    long terms_used = 0;
};

/// A1(z, 1-p : chi) for Im z > 0; inner geometric sums in closed form.
SeriesValue a1_series(const BigComplex& z, long p, const DirichletCharacter& chi,
                      const SeriesConfig& cfg);

/// A(z, 1-p : chi) (non-alternating variant, used by reduction checks).
SeriesValue a_plain_series(const BigComplex& z, long p, const DirichletCharacter& chi,
                           const SeriesConfig& cfg);

/// B(z, 1-p : chi) over the odd inner index.
SeriesValue b_series(const BigComplex& z, long p, const DirichletCharacter& chi,
                     const SeriesConfig& cfg);

/// Per-degree Bernoulli bilinears of the loop-integral residue:
/// terms[m] = B_{p+1-m}((nu + {dj/c})/k) * B_m((mu*c + j)/(c*k)) for m = 0..p+1.
std::vector<Rational> f_residue_bilinear(long p, long k, long c, long d, long j, long mu, long nu);

/// Closed-form residue value f(z, 1-p, c, d) at the given (j, mu, nu).
BigComplex f_residue(const BigComplex& z, long p, long k, long c, long d, long j, long mu, long nu);

/// g1(c, d, z, p, chi): finite double sum pairing E_{p-m,chi}(dn/c) with
/// B_m(n/ck) under the complex base -(cz+d).  With shifted = true the sum
/// gains the (-1)^n weight and the base becomes -(cz+d+ck).
BigComplex g1_eval(long c, long d, const BigComplex& z, long p, const DirichletCharacter& chi,
                   bool shifted);

/// g2(c, d, z, p, chi): as g1 but with B_{p+1-m,chi}, (-1)^n weights and
/// binomials C(p+1,m).
BigComplex g2_eval(long c, long d, const BigComplex& z, long p, const DirichletCharacter& chi);

enum class TransformKind { d_even_ad, d_even_bc, shifted_ad, shifted_bc, c_even_ad, c_even_bc };
enum class GReciprocityKind { teoRP2, teoRP1 };

struct NumericSides {
    BigComplex lhs, rhs;
    BigFloat tail_bound;
    BigComplex residual() const { return lhs - rhs; }
};

/// Both sides of the corresponding displayed transformation formula; the
/// H1/B1 sides are evaluated by series, the g-side by finite sums.
NumericSides transform_sides(TransformKind kind, const ModularTuple& t, const BigComplex& z,
                             long p, const DirichletCharacter& chi, const SeriesConfig& cfg);

BigComplex transform_residual(TransformKind kind, const ModularTuple& t, const BigComplex& z,
                              long p, const DirichletCharacter& chi, const SeriesConfig& cfg);

/// Both sides of the displayed g1/g2 reciprocity functional equations.
NumericSides reciprocity_g_sides(GReciprocityKind kind, long c, long d, const BigComplex& z,
                                 long p, const DirichletCharacter& chi, const SeriesConfig& cfg);

BigComplex reciprocity_g_residual(GReciprocityKind kind, long c, long d, const BigComplex& z,
                                  long p, const DirichletCharacter& chi, const SeriesConfig& cfg);

/// Series relations: lhs = the convergent series, rhs = the displayed closed
/// form.  For seri1 the free parameter is alpha > 0 (beta = (pi/k)^2/alpha);
/// the corollary takes the mod-3 character; final_theorem evaluates the
/// displayed cosh(2n*alpha) relation, whose claimed value is reported but
/// not asserted anywhere.
NumericSides seri1_identity(const DirichletCharacter& chi, long p, const BigFloat& alpha,
                            const SeriesConfig& cfg);
NumericSides corollary21_identity(const DirichletCharacter& chi, long p, const SeriesConfig& cfg);
NumericSides final_theorem_identity(const DirichletCharacter& chi, const BigFloat& alpha,
                                    const SeriesConfig& cfg);
/// The "in particular" single series of the final theorem vs -pi/(6 sqrt 3).
NumericSides final_theorem_particular(const DirichletCharacter& chi, const SeriesConfig& cfg);

}  // namespace charsums
