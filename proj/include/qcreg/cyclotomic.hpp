#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcreg/rational.hpp"

namespace qcreg {

/// An element of the cyclotomic field Q(zeta_N), stored in the power basis
/// zeta^0, ..., zeta^{phi(N)-1} reduced modulo the N-th cyclotomic polynomial.
/// The representation is canonical for a fixed order N; values whose
/// coefficients above degree 0 vanish are demoted to order 1, so purely
/// rational results always compare equal regardless of how they were produced.
/// Mixed-order arithmetic promotes both operands to the lcm of the orders.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
    Cyclotomic(long v) : order_(1), coeffs_(1, Rational(v)) {}
    explicit Cyclotomic(const Rational& r) : order_(1), coeffs_(1, r) {}
    // From raw power-basis coefficients (length phi(N)); canonicalizes.
    Cyclotomic(long order, std::vector<Rational> coeffs);

    /// zeta_N^k, k arbitrary (taken mod N). root(N, 0) is 1.
    static Cyclotomic root(long N, long k);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const { return order_ == 1; }
    Rational rational_value() const;  // throws if not rational

    /// Re-expresses the value in Q(zeta_M); requires order() | M.
    /// Does not demote, so the result's order() is exactly M.
    Cyclotomic promoted(long M) const;
    /// Re-expresses in Q(zeta_M) for M | order(), if the value lies there.
    std::optional<Cyclotomic> demoted(long M) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

    Cyclotomic inverse() const;  // throws std::domain_error on zero
    Cyclotomic pow(long e) const;

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Smallest t <= 2*order() with value^t == 1, if any.
    /// Absent means the value is not a root of unity in its ambient field.
    std::optional<long> order_of_unity() const;

    std::string to_string() const;

private:
    long order_;
    std::vector<Rational> coeffs_;  // length phi(order_)
    void canonicalize();
};

/// Euler's totient.
long euler_phi(long n);

/// Monic N-th cyclotomic polynomial, degree phi(N), coefficient vector of
/// length phi(N)+1 (index = power). Cached; safe for concurrent callers.
const std::vector<Rational>& cyclotomic_polynomial(long N);

}  // namespace qcreg
