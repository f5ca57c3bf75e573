#include "qcreg/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qcreg {

namespace {

using Poly = std::vector<Rational>;  // coefficient vector, index = power

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

// Remainder of a modulo monic divisor d.
Poly poly_rem(Poly a, const Poly& d) {
    trim(a);
    const size_t deg_d = d.size() - 1;
    while (a.size() > deg_d) {
        Rational lead = a.back();
        size_t shift = a.size() - 1 - deg_d;
        if (lead != 0) {
            for (size_t i = 0; i < d.size(); ++i) a[shift + i] -= lead * d[i];
        }
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Exact quotient a / d for monic d dividing a.
Poly poly_quot_exact(Poly a, const Poly& d) {
    trim(a);
    const size_t deg_d = d.size() - 1;
    if (a.empty()) return {};
    Poly q(a.size() - deg_d, Rational(0));
    while (a.size() > deg_d || (a.size() == d.size() && !a.empty())) {
        Rational lead = a.back();
        size_t shift = a.size() - 1 - deg_d;
        q[shift] = lead;
        for (size_t i = 0; i < d.size(); ++i) a[shift + i] -= lead * d[i];
        trim(a);
        if (a.empty()) break;
    }
    if (!a.empty()) throw std::logic_error("poly_quot_exact: division not exact");
    return q;
}

// Extended gcd over Q[x]: returns (g, u) with u*a + v*m = g, g monic.
std::pair<Poly, Poly> poly_ext_gcd(Poly a, Poly m) {
    trim(a);
    trim(m);
    Poly r0 = m, r1 = a;
    Poly u0 = {}, u1 = {Rational(1)};
    while (!r1.empty()) {
        // r0 = q*r1 + r
        Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
        Poly rem = r0;
        Rational inv_lead = 1 / r1.back();
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational c = rem.back() * inv_lead;
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            trim(rem);
        }
        Poly qu1 = poly_mul(q, u1);
        Poly u2 = u0;
        if (u2.size() < qu1.size()) u2.resize(qu1.size(), Rational(0));
        for (size_t i = 0; i < qu1.size(); ++i) u2[i] -= qu1[i];
        trim(u2);
        r0 = r1; r1 = rem;
        u0 = u1; u1 = u2;
    }
    // normalize gcd to monic
    if (!r0.empty() && r0.back() != 1) {
        Rational inv = 1 / r0.back();
        for (auto& c : r0) c *= inv;
        for (auto& c : u0) c *= inv;
    }
    return {r0, u0};
}

std::map<long, Poly> g_phi_cache;
std::mutex g_phi_mutex;

}  // namespace

long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<Rational>& cyclotomic_polynomial(long N) {
    if (N < 1) throw std::invalid_argument("cyclotomic_polynomial: N must be positive");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(N);
    if (it != g_phi_cache.end()) return it->second;
    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d, computed bottom-up so
    // every divisor is already in the cache.
    std::function<const Poly&(long)> get = [&](long n) -> const Poly& {
        auto found = g_phi_cache.find(n);
        if (found != g_phi_cache.end()) return found->second;
        Poly num(n + 1, Rational(0));
        num[0] = -1;
        num[n] = 1;
        for (long d = 1; d < n; ++d)
            if (n % d == 0) num = poly_quot_exact(num, get(d));
        return g_phi_cache.emplace(n, std::move(num)).first->second;
    };
    return get(N);
}

Cyclotomic::Cyclotomic(long order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
    size_t phi = static_cast<size_t>(euler_phi(order_));
    if (coeffs_.size() != phi)
        throw std::invalid_argument("Cyclotomic: coefficient vector length != phi(N)");
    canonicalize();
}

void Cyclotomic::canonicalize() {
    if (order_ == 1) return;
    bool rational_only = true;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) { rational_only = false; break; }
    if (rational_only) {
        coeffs_.resize(1);
        if (coeffs_.empty()) coeffs_.push_back(Rational(0));
        order_ = 1;
    }
}

Cyclotomic Cyclotomic::root(long N, long k) {
    if (N < 1) throw std::invalid_argument("root: N must be positive");
    k %= N;
    if (k < 0) k += N;
    const Poly& phi_poly = cyclotomic_polynomial(N);
    Poly x(static_cast<size_t>(k) + 1, Rational(0));
    x[static_cast<size_t>(k)] = 1;
    Poly r = poly_rem(std::move(x), phi_poly);
    r.resize(phi_poly.size() - 1, Rational(0));
    return Cyclotomic(N, std::move(r));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (order_ != 1) throw std::domain_error("rational_value: not a rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(long M) const {
    if (M % order_ != 0) throw std::invalid_argument("promoted: order must divide M");
    if (M == order_) return *this;
    const long step = M / order_;
    const Poly& phi_poly = cyclotomic_polynomial(M);
    Poly p(static_cast<size_t>((coeffs_.size() - 1) * step) + 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
    Poly r = poly_rem(std::move(p), phi_poly);
    r.resize(phi_poly.size() - 1, Rational(0));
    Cyclotomic out;
    out.order_ = M;
    out.coeffs_ = std::move(r);
    return out;  // deliberately skips canonicalize(): keeps the requested order
}

std::optional<Cyclotomic> Cyclotomic::demoted(long M) const {
    if (order_ % M != 0) throw std::invalid_argument("demoted: M must divide order");
    if (M == order_) return *this;
    // Solve for coordinates in the basis {zeta_order^{(order/M) j}}_{j < phi(M)}.
    size_t phi_m = static_cast<size_t>(euler_phi(M));
    size_t phi_n = coeffs_.size();
    std::vector<Poly> basis(phi_m);
    for (size_t j = 0; j < phi_m; ++j) {
        Cyclotomic bj = root(M, static_cast<long>(j)).promoted(order_);
        basis[j] = bj.coeffs_;
    }
    // Gaussian elimination on the phi_n x phi_m system basis * x = coeffs_.
    std::vector<std::vector<Rational>> aug(phi_n, std::vector<Rational>(phi_m + 1, Rational(0)));
    for (size_t r = 0; r < phi_n; ++r) {
        for (size_t j = 0; j < phi_m; ++j) aug[r][j] = basis[j][r];
        aug[r][phi_m] = coeffs_[r];
    }
    size_t row = 0;
    std::vector<long> pivot_col(phi_m, -1);
    for (size_t col = 0; col < phi_m && row < phi_n; ++col) {
        size_t sel = row;
        while (sel < phi_n && aug[sel][col] == 0) ++sel;
        if (sel == phi_n) continue;
        std::swap(aug[sel], aug[row]);
        Rational inv = 1 / aug[row][col];
        for (size_t j = col; j <= phi_m; ++j) aug[row][j] *= inv;
        for (size_t r = 0; r < phi_n; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            Rational f = aug[r][col];
            for (size_t j = col; j <= phi_m; ++j) aug[r][j] -= f * aug[row][j];
        }
        pivot_col[col] = static_cast<long>(row);
        ++row;
    }
    for (size_t r = row; r < phi_n; ++r)
        if (aug[r][phi_m] != 0) return std::nullopt;  // not in the subfield
    std::vector<Rational> x(phi_m, Rational(0));
    for (size_t col = 0; col < phi_m; ++col)
        if (pivot_col[col] >= 0) x[col] = aug[static_cast<size_t>(pivot_col[col])][phi_m];
    return Cyclotomic(M, std::move(x));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    long L = std::lcm(order_, o.order_);
    Cyclotomic a = promoted(L), b = o.promoted(L);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    a.canonicalize();
    *this = std::move(a);
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    return *this += -o;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    long L = std::lcm(order_, o.order_);
    Cyclotomic a = promoted(L), b = o.promoted(L);
    if (L == 1) {
        a.coeffs_[0] *= b.coeffs_[0];
        *this = std::move(a);
        return *this;
    }
    const Poly& phi_poly = cyclotomic_polynomial(L);
    Poly p = poly_mul(a.coeffs_, b.coeffs_);
    Poly r = poly_rem(std::move(p), phi_poly);
    r.resize(phi_poly.size() - 1, Rational(0));
    a.coeffs_ = std::move(r);
    a.canonicalize();
    *this = std::move(a);
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inverse: division by zero");
    if (order_ == 1) return Cyclotomic(Rational(1 / coeffs_[0]));
    const Poly& phi_poly = cyclotomic_polynomial(order_);
    Poly a = coeffs_;
    trim(a);
    auto [g, u] = poly_ext_gcd(a, phi_poly);
    if (g.size() != 1) throw std::logic_error("inverse: gcd with cyclotomic polynomial not 1");
    Poly r = poly_rem(std::move(u), phi_poly);
    r.resize(phi_poly.size() - 1, Rational(0));
    return Cyclotomic(order_, std::move(r));
}

Cyclotomic Cyclotomic::pow(long e) const {
    Cyclotomic base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Cyclotomic acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (order_ == o.order_) return coeffs_ == o.coeffs_;
    long L = std::lcm(order_, o.order_);
    return promoted(L).coeffs_ == o.promoted(L).coeffs_;
}

std::optional<long> Cyclotomic::order_of_unity() const {
    if (is_zero()) return std::nullopt;
    Cyclotomic p(1);
    const long bound = 2 * order_;
    for (long t = 1; t <= bound; ++t) {
        p *= *this;
        if (p == Cyclotomic(1)) return t;
    }
    return std::nullopt;
}

std::string Cyclotomic::to_string() const {
    if (order_ == 1) return format_rational(coeffs_[0]);
    std::string s = "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ";";
        s += format_rational(coeffs_[i]);
    }
    s += "]@" + std::to_string(order_);
    return s;
}

}  // namespace qcreg
