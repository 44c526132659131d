#include "charsums/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace charsums {

namespace {

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

// quotient of exact division a / b over Z[x], b monic
std::vector<Int> poly_divexact(std::vector<Int> a, const std::vector<Int>& b) {
    std::vector<Int> q(a.size() - b.size() + 1, Int(0));
    for (long i = static_cast<long>(a.size()) - 1; i >= static_cast<long>(b.size()) - 1; --i) {
        Int c = a[i];
        if (c == 0) continue;
        long shift = i - (static_cast<long>(b.size()) - 1);
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    }
    return q;
}

std::mutex g_phi_mutex;
std::map<long, std::vector<Int>> g_phi_cache;

}  // namespace

long euler_phi(long n) {
    long r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

const std::vector<Int>& cyclotomic_polynomial(long n) {
    if (n < 1) throw std::domain_error("cyclotomic_polynomial: order must be >= 1");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
    for (long m = 1; m <= n; ++m) {
        if (n % m != 0 || g_phi_cache.count(m)) continue;
        std::vector<Int> num(m + 1, Int(0));
        num[0] = -1;
        num[m] = 1;
        for (long d = 1; d < m; ++d)
            if (m % d == 0) num = poly_divexact(std::move(num), g_phi_cache.at(d));
        g_phi_cache.emplace(m, std::move(num));
    }
    return g_phi_cache.at(n);
}

Cyclotomic::Cyclotomic(long order, std::vector<Rational> reduced) : order_(order), coeffs_(std::move(reduced)) {
    if (order_ < 1) throw std::domain_error("Cyclotomic: invalid order");
    coeffs_.resize(static_cast<size_t>(euler_phi(order_)), Rational(0));
}

Cyclotomic Cyclotomic::canonicalize(long order, const std::vector<Rational>& raw) {
    if (order < 1) throw std::domain_error("Cyclotomic: invalid order");
    const auto& phi = cyclotomic_polynomial(order);
    const size_t deg = phi.size() - 1;  // = euler_phi(order)

    // remainder of raw modulo the monic Phi_order
    std::vector<Rational> r(raw);
    if (r.size() < deg) r.resize(deg, Rational(0));
    for (long i = static_cast<long>(r.size()) - 1; i >= static_cast<long>(deg); --i) {
        Rational c = r[i];
        if (c.is_zero()) continue;
        long shift = i - static_cast<long>(deg);
        for (size_t j = 0; j < phi.size(); ++j) {
            if (phi[j] == 0) continue;
            r[shift + j] -= c * Rational(phi[j]);
        }
    }
    r.resize(deg);
    return Cyclotomic(order, std::move(r));
}

Cyclotomic Cyclotomic::root_of_unity(long order, long power) {
    if (order < 1) throw std::domain_error("Cyclotomic: invalid order");
    long p = mod_l(power, order);
    std::vector<Rational> raw(static_cast<size_t>(p) + 1, Rational(0));
    raw[static_cast<size_t>(p)] = Rational(1);
    return canonicalize(order, raw);
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

Cyclotomic Cyclotomic::lifted(long m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw std::domain_error("Cyclotomic::lifted: target order not a multiple");
    long step = m / order_;
    std::vector<Rational> raw(static_cast<size_t>(euler_phi(order_) - 1) * step + 1, Rational(0));
    for (size_t j = 0; j < coeffs_.size(); ++j) raw[j * step] = coeffs_[j];
    return canonicalize(m, raw);
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& x : c) x = -x;
    return Cyclotomic(order_, std::move(c));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) {
        long m = lcm_l(a.order_, b.order_);
        return a.lifted(m) + b.lifted(m);
    }
    std::vector<Rational> c(a.coeffs_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
    return Cyclotomic(a.order_, std::move(c));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) {
        long m = lcm_l(a.order_, b.order_);
        return a.lifted(m) * b.lifted(m);
    }
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Cyclotomic::canonicalize(a.order_, prod);
}

Cyclotomic operator*(const Rational& a, const Cyclotomic& b) {
    std::vector<Rational> c(b.coeffs_);
    for (auto& x : c) x *= a;
    return Cyclotomic(b.order_, std::move(c));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    long m = lcm_l(a.order_, b.order_);
    return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

Cyclotomic Cyclotomic::galois(long j) const {
    long jj = mod_l(j, order_);
    if (gcd_l(jj == 0 ? order_ : jj, order_) != 1)
        throw std::domain_error("Cyclotomic::galois: exponent not coprime to order");
    std::vector<Rational> raw(static_cast<size_t>(order_), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        raw[static_cast<size_t>((static_cast<long>(i) * jj) % order_)] += coeffs_[i];
    }
    return canonicalize(order_, raw);
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic::inverse: zero element");
    // extended Euclid over Q[x]: u * f + v * Phi = 1, inverse = u
    const auto& phi_int = cyclotomic_polynomial(order_);
    std::vector<Rational> r0(phi_int.size());
    for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
    std::vector<Rational> r1(coeffs_);
    while (!r1.empty() && r1.back().is_zero()) r1.pop_back();

    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coeffs of f in the combination
    auto deg = [](const std::vector<Rational>& p) { return static_cast<long>(p.size()) - 1; };
    auto trim = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };

    while (deg(r1) > 0) {
        // r0 = q * r1 + r2
        std::vector<Rational> q(static_cast<size_t>(deg(r0) - deg(r1) + 1), Rational(0));
        std::vector<Rational> rem(r0);
        for (long i = deg(rem); i >= deg(r1); --i) {
            if (rem[i].is_zero()) continue;
            Rational c = rem[i] / r1.back();
            q[i - deg(r1)] = c;
            for (size_t j = 0; j < r1.size(); ++j) rem[i - deg(r1) + j] -= c * r1[j];
        }
        trim(rem);
        // s2 = s0 - q * s1
        std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size() - 1), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw std::domain_error("Cyclotomic::inverse: zero element");
    Rational unit = r1[0];
    std::vector<Rational> inv(s1);
    for (auto& c : inv) c /= unit;
    return canonicalize(order_, inv);
}

BigComplex Cyclotomic::embed(mpfr_prec_t bits) const {
    mpfr_prec_t work = bits + 64;
    BigFloat two_pi = BigFloat(2, work) * BigFloat::pi(work);
    BigFloat re(0, work), im(0, work);
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        BigFloat angle = two_pi * BigFloat(Rational(static_cast<long>(j), order_), work);
        BigFloat cj(coeffs_[j], work);
        re = re + cj * angle.cos();
        im = im + cj * angle.sin();
    }
    BigFloat re_out(bits), im_out(bits);
    mpfr_set(re_out.get(), re.get(), MPFR_RNDN);
    mpfr_set(im_out.get(), im.get(), MPFR_RNDN);
    return BigComplex(re_out, im_out);
}

std::string Cyclotomic::to_string() const {
    std::string s = "{order=" + std::to_string(order_) + ", coeffs=[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ", ";
        s += coeffs_[i].to_string();
    }
    return s + "]}";
}

}  // namespace charsums
