#pragma once

#include "charsums/charfuncs.hpp"

namespace charsums {

enum class ClassicalKind { S, s1, s2, s3, s4, s5 };

/// Classical Hardy-Berndt sums over n = 1..c-1 (exact).
Rational classical_sum(ClassicalKind kind, long d, long c);

/// Dedekind character sum  sum_{n=1}^{ck} chi(n) B_{p,chi}(dn/c) B_1(n/ck).
Cyclotomic dedekind_char_sum(long p, long d, long c, const DirichletCharacter& chi);

/// Character Hardy-Berndt sums over n = 1..ck (first argument rides the
/// numerator: the evaluand is at d*n/c).  s1p/s5p need an odd modulus.
Cyclotomic s1p(long p, long d, long c, const DirichletCharacter& chi);
Cyclotomic s2p(long p, long d, long c, const DirichletCharacter& chi);
Cyclotomic s5p(long p, long d, long c, const DirichletCharacter& chi);

/// Mixed sums with split indices (p+1-m, m), 1 <= m <= p, same argument
/// convention as the plain sums (n runs to c*k, evaluand at d*n/c):
///   family 1:  sum chi(n)      E_{p-m,chi}(dn/c)   B_m(n/ck)
///   family 2:  sum (-1)^n chi(n) B_{p+1-m,chi}(dn/c) B_m(n/ck)
///   family 5:  sum (-1)^n chi(n) E_{p-m,chi}(dn/c)   B_m(n/ck)
Cyclotomic mixed_sum(int family, long p, long m, long d, long c, const DirichletCharacter& chi);

/// lhs/rhs pair of an identity; the residual lhs - rhs is exactly zero
/// when the identity holds.
struct ExactSides {
    Cyclotomic lhs, rhs;
    Cyclotomic residual() const { return lhs - rhs; }
};

/// Both sides of the s5 reciprocity as displayed:
///   c d^p s5p(c,d:chi) + d c^p s5p(d,c:conj)
///     = -(conj(-4)/2) sum_{m=0}^{p-1} C(p-1,m) c^{m+1} d^{p-m}
///         E_{p-1-m,conj}(0) E_{m,chi}(0)
ExactSides reciprocity_sides_s5(long p, long c, long d, const DirichletCharacter& chi);
Cyclotomic reciprocity_residual_s5(long p, long c, long d, const DirichletCharacter& chi);

/// Both sides of the s1/s2 reciprocity as displayed:
///   p d c^p s1p(d,c:conj) - chi(-1) 2 c d^p s2p(c,d:chi)
///     = chi(-1) sum_{m=1}^{p} (-1)^m C(p,m-1) c^m d^{p+1-m}
///         B_{p+1-m,chi}(0) E_{m-1,conj}(0)
ExactSides reciprocity_sides_s1s2(long p, long c, long d, const DirichletCharacter& chi);
Cyclotomic reciprocity_residual_s1s2(long p, long c, long d, const DirichletCharacter& chi);

/// Mixed-sum identity obtained by specializing the g1 reciprocity at z = k:
///   sum_m C(p,m) (-kc)^{m-1} s5mix_{p+1-m,m}(c,d:chi)
///     = -(kc)^{p-1} s5mix_{1,p}(d,c:conj) - conj(-4) (p/2) E_{p-1,conj}(0) E_{0,chi}(0)
ExactSides zk_specialization_sides(long p, long c, long d, const DirichletCharacter& chi);

/// Mixed-sum identity obtained by specializing the g1/g2 relation at z = 0:
///   sum_m C(p+1,m) (-ck)^{m-1} s2mix_{p+1-m,m}(c,d:conj)
///     = (p+1)/2 (chi(-1) (ck)^{p-1} s1mix_{1,p}(d,c:chi) + B_{p,chi}(0) E_{0,conj}(0))
ExactSides z0_specialization_sides(long p, long c, long d, const DirichletCharacter& chi);

/// s_{family,p}(qd, qc : chi) - s_{family,p}(d, c : chi); exactly zero by the
/// scaling lemma under the family's parity hypothesis.
Cyclotomic scaling_check(int family, long p, long q, long d, long c, const DirichletCharacter& chi);

}  // namespace charsums
