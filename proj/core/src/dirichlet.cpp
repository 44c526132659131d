#include "charsums/dirichlet.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace charsums {

namespace {

long pow_mod(long b, long e, long m) {
    long r = 1 % m;
    b = mod_l(b, m);
    while (e > 0) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

long order_mod(long g, long m) {
    long o = 1, x = mod_l(g, m);
    long v = x;
    while (v != 1) {
        v = (v * x) % m;
        ++o;
        if (o > m) throw std::logic_error("order_mod: not a unit");
    }
    return o;
}

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> f;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

// smallest generator of the (cyclic) unit group mod an odd prime power
long smallest_primitive_root(long pp) {
    long target = euler_phi(pp);
    for (long g = 2; g < pp; ++g) {
        if (gcd_l(g, pp) != 1) continue;
        if (order_mod(g, pp) == target) return g;
    }
    throw std::logic_error("smallest_primitive_root: none found");
}

std::vector<UnitComponent> unit_components(long k) {
    std::vector<UnitComponent> comps;
    for (auto [p, e] : factorize(k)) {
        long pp = 1;
        for (int i = 0; i < e; ++i) pp *= p;
        if (p == 2) {
            if (e == 1) continue;  // trivial group
            if (e == 2) {
                comps.push_back({pp, 3, 2});
            } else {
                comps.push_back({pp, pp - 1, 2});                    // -1
                comps.push_back({pp, 5, pp / 4});                    // 5, order 2^{a-2}
            }
        } else {
            comps.push_back({pp, smallest_primitive_root(pp), euler_phi(pp)});
        }
    }
    return comps;
}

// discrete logs of n (unit mod k) on each component, by direct search
std::vector<long> discrete_logs(long n, const std::vector<UnitComponent>& comps) {
    std::vector<long> logs;
    size_t i = 0;
    while (i < comps.size()) {
        long pp = comps[i].prime_power;
        long r = mod_l(n, pp);
        if (i + 1 < comps.size() && comps[i + 1].prime_power == pp) {
            // 2^a (a >= 3): r = (-1)^{l0} 5^{l1}
            for (long l0 = 0; l0 < 2; ++l0) {
                long base = l0 ? pp - 1 : 1;
                for (long l1 = 0; l1 < comps[i + 1].order; ++l1) {
                    if ((base * pow_mod(5, l1, pp)) % pp == r) {
                        logs.push_back(l0);
                        logs.push_back(l1);
                        goto found;
                    }
                }
            }
            throw std::logic_error("discrete_logs: 2-power factor");
        found:
            i += 2;
        } else {
            long g = comps[i].generator, v = 1 % pp;
            long l = 0;
            while (v != r) {
                v = (v * g) % pp;
                ++l;
                if (l > comps[i].order) throw std::logic_error("discrete_logs: odd factor");
            }
            logs.push_back(l);
            ++i;
        }
    }
    return logs;
}

}  // namespace

DirichletCharacter::DirichletCharacter(long modulus, std::vector<long> exponents)
    : modulus_(modulus), exponents_(std::move(exponents)) {
    if (modulus_ < 1) throw std::domain_error("DirichletCharacter: modulus must be positive");
    components_ = unit_components(modulus_);
    if (exponents_.size() != components_.size())
        throw std::invalid_argument("DirichletCharacter: exponent count mismatch");
    for (size_t i = 0; i < components_.size(); ++i)
        exponents_[i] = mod_l(exponents_[i], components_[i].order);

    // L = order of the image = lcm of per-component orders e_i / gcd(a_i, e_i)
    value_order_ = 1;
    for (size_t i = 0; i < components_.size(); ++i) {
        long e = components_[i].order;
        long a = exponents_[i];
        long comp_order = a == 0 ? 1 : e / gcd_l(a, e);
        value_order_ = lcm_l(value_order_, comp_order);
    }

    table_.assign(static_cast<size_t>(modulus_), -1);
    for (long n = 0; n < modulus_; ++n) {
        if (gcd_l(n == 0 ? modulus_ : n, modulus_) != 1) continue;
        auto logs = discrete_logs(n, components_);
        long t = 0;
        for (size_t i = 0; i < components_.size(); ++i) {
            long e = components_[i].order;
            // a_i * L / e_i is integral because the component order divides L
            long w = exponents_[i] * value_order_ / e;
            t = mod_l(t + logs[i] * w, value_order_);
        }
        table_[n] = t;
    }

    values_.reserve(static_cast<size_t>(modulus_));
    for (long n = 0; n < modulus_; ++n) {
        values_.push_back(table_[n] < 0 ? Cyclotomic(Rational(0))
                                        : Cyclotomic::root_of_unity(value_order_, table_[n]));
    }

    // conductor: smallest d | k such that chi is trivial on units = 1 (mod d)
    conductor_ = modulus_;
    for (long d = 1; d <= modulus_; ++d) {
        if (modulus_ % d != 0) continue;
        bool trivial = true;
        for (long n = 1; n <= modulus_ && trivial; ++n) {
            if (table_[mod_l(n, modulus_)] < 0) continue;
            if (mod_l(n - 1, d) == 0 && table_[mod_l(n, modulus_)] != 0) trivial = false;
        }
        if (trivial) { conductor_ = d; break; }
    }
}

bool DirichletCharacter::is_principal() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](long a) { return a == 0; });
}

const Cyclotomic& DirichletCharacter::eval(long n) const {
    return values_[static_cast<size_t>(mod_l(n, modulus_))];
}

DirichletCharacter DirichletCharacter::conjugate() const {
    std::vector<long> exps(exponents_);
    for (size_t i = 0; i < exps.size(); ++i)
        exps[i] = mod_l(components_[i].order - exps[i], components_[i].order);
    return DirichletCharacter(modulus_, std::move(exps));
}

int DirichletCharacter::parity() const {
    auto v = eval(-1).as_rational();
    if (!v) throw std::logic_error("parity: chi(-1) not rational");
    return *v == Rational(1) ? 1 : -1;
}

std::string DirichletCharacter::label() const {
    std::string s = "k=" + std::to_string(modulus_) + ";f=" + std::to_string(conductor_) + ";a=[";
    for (size_t i = 0; i < exponents_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(exponents_[i]);
    }
    return s + "]";
}

std::vector<DirichletCharacter> DirichletCharacter::enumerate_all(long k) {
    auto comps = unit_components(k);
    std::vector<DirichletCharacter> out;
    std::vector<long> exps(comps.size(), 0);
    while (true) {
        out.emplace_back(k, exps);
        size_t i = 0;
        while (i < comps.size()) {
            if (++exps[i] < comps[i].order) break;
            exps[i] = 0;
            ++i;
        }
        if (i == comps.size()) break;
        if (comps.empty()) break;
    }
    std::sort(out.begin(), out.end(), [](const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.exponents() < b.exponents();
    });
    return out;
}

std::vector<DirichletCharacter> DirichletCharacter::enumerate_primitive(long k) {
    std::vector<DirichletCharacter> out;
    for (auto& chi : enumerate_all(k))
        if (chi.is_primitive() && !chi.is_principal()) out.push_back(chi);
    return out;
}

std::vector<DirichletCharacter> DirichletCharacter::resolve(const std::string& label) {
    long k = -1, f = -1;
    std::vector<long> exps;
    bool have_exps = false;
    size_t pos = 0;
    while (pos < label.size()) {
        size_t end = label.find(';', pos);
        if (end == std::string::npos) end = label.size();
        std::string part = label.substr(pos, end - pos);
        if (part.rfind("k=", 0) == 0) {
            k = std::stol(part.substr(2));
        } else if (part.rfind("f=", 0) == 0) {
            f = std::stol(part.substr(2));
        } else if (part.rfind("a=[", 0) == 0 && part.back() == ']') {
            have_exps = true;
            std::string body = part.substr(3, part.size() - 4);
            size_t p2 = 0;
            while (p2 < body.size()) {
                size_t e2 = body.find(',', p2);
                if (e2 == std::string::npos) e2 = body.size();
                exps.push_back(std::stol(body.substr(p2, e2 - p2)));
                p2 = e2 + 1;
            }
            if (body.empty()) exps.clear();
        } else if (!part.empty()) {
            throw std::invalid_argument("character label: unrecognized part '" + part + "'");
        }
        pos = end + 1;
    }
    if (k < 1) throw std::invalid_argument("character label: missing k=<modulus>");
    std::vector<DirichletCharacter> out;
    for (auto& chi : enumerate_all(k)) {
        if (f >= 0 && chi.conductor() != f) continue;
        if (have_exps && chi.exponents() != exps) continue;
        if (!have_exps && f < 0 && (chi.is_principal() || !chi.is_primitive())) continue;
        out.push_back(chi);
    }
    return out;
}

Cyclotomic gauss_sum(const DirichletCharacter& chi, long z) {
    if (!chi.is_primitive())
        throw std::domain_error("gauss_sum: character must be primitive (twist identity can fail)");
    long k = chi.modulus();
    long L = chi.value_order();
    long m = lcm_l(k, L);
    std::vector<Rational> raw(static_cast<size_t>(m), Rational(0));
    for (long v = 0; v < k; ++v) {
        long t = chi.eval_exponent(v);
        if (t < 0) continue;
        long power = mod_l(t * (m / L) + mod_l(v * z, k) * (m / k), m);
        raw[static_cast<size_t>(power)] += Rational(1);
    }
    return Cyclotomic::canonicalize(m, raw);
}

}  // namespace charsums
