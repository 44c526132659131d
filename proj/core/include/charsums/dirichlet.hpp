#pragma once

#include <string>
#include <vector>

#include "charsums/cyclotomic.hpp"

namespace charsums {

/// One CRT factor of (Z/k)*: cyclic piece of order `order` generated by
/// `generator` modulo `prime_power` (2^a with a >= 3 contributes two pieces).
struct UnitComponent {
    long prime_power;
    long generator;
    long order;
};

/// Dirichlet character mod k, stored as exponents on the unit-group
/// generators.  Values are exact roots of unity in Q(zeta_L), L the order
/// of the character's image; chi(n) = 0 on non-units.  Immutable.
class DirichletCharacter {
public:
    DirichletCharacter(long modulus, std::vector<long> exponents);

    long modulus() const { return modulus_; }
    long conductor() const { return conductor_; }
    long value_order() const { return value_order_; }
    const std::vector<UnitComponent>& components() const { return components_; }
    const std::vector<long>& exponents() const { return exponents_; }

    bool is_principal() const;
    bool is_primitive() const { return conductor_ == modulus_; }
    /// True when all values are rational (image order <= 2).
    bool is_real() const { return value_order_ <= 2; }

    /// chi(n); total on Z.
    const Cyclotomic& eval(long n) const;
    /// t such that chi(n) = zeta_L^t, or -1 when chi(n) = 0.
    long eval_exponent(long n) const { return table_[mod_l(n, modulus_)]; }

    DirichletCharacter conjugate() const;
    /// chi(-1) as +1 or -1.
    int parity() const;

    /// Stable label "k=<k>;f=<f>;a=[a0,a1,...]".
    std::string label() const;

    /// All characters mod k, exponent-lexicographic order.
    static std::vector<DirichletCharacter> enumerate_all(long k);
    /// Primitive non-principal characters mod k (empty for k <= 2).
    static std::vector<DirichletCharacter> enumerate_primitive(long k);
    /// Characters matching a (possibly partial) label such as "k=3" or
    /// "k=5;a=[1]".
    static std::vector<DirichletCharacter> resolve(const std::string& label);

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus_ == b.modulus_ && a.exponents_ == b.exponents_;
    }

private:
    long modulus_;
    long conductor_;
    long value_order_;
    std::vector<UnitComponent> components_;
    std::vector<long> exponents_;
    std::vector<long> table_;        // n -> exponent of zeta_L, or -1
    std::vector<Cyclotomic> values_; // n -> chi(n) in Q(zeta_L)
};

/// Gauss sum G(z, chi) = sum_v chi(v) zeta_k^{vz}, exact in Q(zeta_lcm(k,L)).
/// Requires a primitive character (the twist identity can fail otherwise).
Cyclotomic gauss_sum(const DirichletCharacter& chi, long z);

}  // namespace charsums
