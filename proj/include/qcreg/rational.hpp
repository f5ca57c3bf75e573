#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qcreg {

// Exact rational scalar. GMP keeps the invariant gcd(|p|, q) = 1, q >= 1.
using Rational = mpq_class;

// Parses "p/q" or "p" (decimal-free). Throws std::invalid_argument on garbage.
inline Rational parse_rational(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw std::invalid_argument("invalid rational: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

// Renders "p" when the denominator is 1, else "p/q".
inline std::string format_rational(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace qcreg
