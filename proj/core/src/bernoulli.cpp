#include "charsums/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

namespace charsums {

namespace {
std::mutex g_mutex;
std::vector<Rational> g_bnum;
std::vector<PolyRational> g_bpoly;
std::vector<PolyRational> g_epoly;

void grow_tables(long n) {
    if (g_bnum.empty()) {
        g_bnum = {Rational(1), Rational(-1, 2)};
        g_bpoly = {{Rational(1)}, {Rational(-1, 2), Rational(1)}};
        g_epoly = {{Rational(1)}, {Rational(-1, 2), Rational(1)}};
    }
    while (static_cast<long>(g_bnum.size()) <= n) {
        long m = static_cast<long>(g_bnum.size());
        // sum_{j=0}^{m} C(m+1,j) B_j = 0
        Rational s(0);
        for (long j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * g_bnum[j];
        g_bnum.push_back(-s / Rational(m + 1));

        // B_m(x) = sum_j C(m,j) B_j x^{m-j}
        PolyRational bp(static_cast<size_t>(m) + 1, Rational(0));
        for (long j = 0; j <= m; ++j) bp[m - j] += Rational(binomial(m, j)) * g_bnum[j];
        g_bpoly.push_back(std::move(bp));

        // 2 E_m(x) = 2 x^m - sum_{j<m} C(m,j) E_j(x)
        PolyRational ep(static_cast<size_t>(m) + 1, Rational(0));
        ep[m] = Rational(1);
        for (long j = 0; j < m; ++j) {
            Rational half_binom(binomial(m, j), Int(2));
            for (size_t i = 0; i < g_epoly[j].size(); ++i) ep[i] -= half_binom * g_epoly[j][i];
        }
        g_epoly.push_back(std::move(ep));
    }
}
}  // namespace

Rational poly_eval(const PolyRational& p, const Rational& x) {
    Rational r(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

const Rational& bernoulli_number(long n) {
    if (n < 0) throw std::domain_error("bernoulli_number: n >= 0 required");
    std::lock_guard<std::mutex> lock(g_mutex);
    grow_tables(n);
    return g_bnum[n];
}

const PolyRational& bernoulli_poly(long n) {
    if (n < 0) throw std::domain_error("bernoulli_poly: n >= 0 required");
    std::lock_guard<std::mutex> lock(g_mutex);
    grow_tables(n);
    return g_bpoly[n];
}

const PolyRational& euler_poly(long n) {
    if (n < 0) throw std::domain_error("euler_poly: n >= 0 required");
    std::lock_guard<std::mutex> lock(g_mutex);
    grow_tables(n);
    return g_epoly[n];
}

Rational periodic_bernoulli(long n, const Rational& x) {
    if (n == 1 && x.is_integer()) return Rational(0);
    return poly_eval(bernoulli_poly(n), x.frac());
}

Rational periodic_euler(long n, const Rational& x) {
    Int fl = x.floor();
    Rational v = poly_eval(euler_poly(n), x.frac());
    bool odd_shift = mpz_odd_p(fl.get_mpz_t()) != 0;
    return odd_shift ? -v : v;
}

}  // namespace charsums
