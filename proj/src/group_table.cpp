#include "qcreg/group_table.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qcreg {

long CayleyTable::inv(long g) const {
    for (long h = 0; h < m; ++h)
        if (mul(g, h) == identity) return h;
    throw std::logic_error("CayleyTable::inv: no inverse (table not a group)");
}

long CayleyTable::element_order(long g) const {
    long x = g, t = 1;
    while (x != identity) {
        x = mul(x, g);
        ++t;
        if (t > m) throw std::logic_error("element_order: table not a group");
    }
    return t;
}

bool CayleyTable::is_abelian() const {
    for (long g = 0; g < m; ++g)
        for (long h = g + 1; h < m; ++h)
            if (mul(g, h) != mul(h, g)) return false;
    return true;
}

std::vector<long> CayleyTable::centralizer(long g) const {
    std::vector<long> c;
    for (long h = 0; h < m; ++h)
        if (mul(g, h) == mul(h, g)) c.push_back(h);
    return c;
}

std::vector<std::vector<long>> CayleyTable::conjugacy_classes() const {
    std::vector<bool> seen(static_cast<size_t>(m), false);
    std::vector<std::vector<long>> classes;
    for (long g = 0; g < m; ++g) {
        if (seen[static_cast<size_t>(g)]) continue;
        std::vector<long> cls;
        for (long h = 0; h < m; ++h) {
            long c = mul(mul(h, g), inv(h));
            if (!seen[static_cast<size_t>(c)]) {
                seen[static_cast<size_t>(c)] = true;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::optional<std::string> CayleyTable::validate() const {
    if (m < 1) return "empty table";
    if (static_cast<long>(table.size()) != m) return "table row count != m";
    for (long g = 0; g < m; ++g) {
        if (static_cast<long>(table[static_cast<size_t>(g)].size()) != m)
            return "table column count != m at row " + std::to_string(g);
        for (long h = 0; h < m; ++h) {
            long v = mul(g, h);
            if (v < 0 || v >= m) return "entry out of range";
        }
    }
    // Latin square
    for (long g = 0; g < m; ++g) {
        std::vector<bool> row(static_cast<size_t>(m), false), col(static_cast<size_t>(m), false);
        for (long h = 0; h < m; ++h) {
            if (row[static_cast<size_t>(mul(g, h))]) return "row " + std::to_string(g) + " not a permutation";
            row[static_cast<size_t>(mul(g, h))] = true;
            if (col[static_cast<size_t>(mul(h, g))]) return "column " + std::to_string(g) + " not a permutation";
            col[static_cast<size_t>(mul(h, g))] = true;
        }
    }
    if (identity < 0 || identity >= m) return "identity index out of range";
    for (long g = 0; g < m; ++g)
        if (mul(identity, g) != g || mul(g, identity) != g)
            return "identity law fails at " + std::to_string(g);
    for (long g = 0; g < m; ++g)
        for (long h = 0; h < m; ++h)
            for (long k = 0; k < m; ++k)
                if (mul(mul(g, h), k) != mul(g, mul(h, k)))
                    return "associativity fails at (" + std::to_string(g) + "," +
                           std::to_string(h) + "," + std::to_string(k) + ")";
    return std::nullopt;
}

CayleyTable cyclic_group(long n) {
    CayleyTable t;
    t.m = n;
    t.identity = 0;
    t.table.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n)));
    for (long g = 0; g < n; ++g)
        for (long h = 0; h < n; ++h) t.table[static_cast<size_t>(g)][static_cast<size_t>(h)] = (g + h) % n;
    return t;
}

CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
    CayleyTable t;
    t.m = a.m * b.m;
    t.identity = a.identity * b.m + b.identity;
    t.table.assign(static_cast<size_t>(t.m), std::vector<long>(static_cast<size_t>(t.m)));
    for (long g = 0; g < t.m; ++g)
        for (long h = 0; h < t.m; ++h) {
            long ga = g / b.m, gb = g % b.m, ha = h / b.m, hb = h % b.m;
            t.table[static_cast<size_t>(g)][static_cast<size_t>(h)] =
                a.mul(ga, ha) * b.m + b.mul(gb, hb);
        }
    return t;
}

CayleyTable abelian_group(const std::vector<long>& factors) {
    if (factors.empty()) return cyclic_group(1);
    CayleyTable t = cyclic_group(factors[0]);
    for (size_t i = 1; i < factors.size(); ++i) t = direct_product(t, cyclic_group(factors[i]));
    return t;
}

Cocycle trivial_cocycle(const CayleyTable& g) {
    Cocycle a;
    a.group = g;
    a.values.assign(static_cast<size_t>(g.m),
                    std::vector<Cyclotomic>(static_cast<size_t>(g.m), Cyclotomic(1)));
    return a;
}

std::optional<CocycleViolation> validate_cocycle(const Cocycle& a) {
    const CayleyTable& g = a.group;
    const long m = g.m;
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y)
            if (a.values[static_cast<size_t>(x)][static_cast<size_t>(y)].is_zero())
                return CocycleViolation{x, y, -1, "cocycle value is zero"};
    const long e = g.identity;
    for (long x = 0; x < m; ++x) {
        if (a.values[static_cast<size_t>(e)][static_cast<size_t>(x)] != Cyclotomic(1) ||
            a.values[static_cast<size_t>(x)][static_cast<size_t>(e)] != Cyclotomic(1))
            return CocycleViolation{e, x, -1, "cocycle not normalized at identity"};
    }
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y)
            for (long z = 0; z < m; ++z) {
                const Cyclotomic lhs = a.values[static_cast<size_t>(x)][static_cast<size_t>(y)] *
                                       a.values[static_cast<size_t>(g.mul(x, y))][static_cast<size_t>(z)];
                const Cyclotomic rhs = a.values[static_cast<size_t>(x)][static_cast<size_t>(g.mul(y, z))] *
                                       a.values[static_cast<size_t>(y)][static_cast<size_t>(z)];
                if (lhs != rhs)
                    return CocycleViolation{x, y, z, "cocycle identity fails"};
            }
    return std::nullopt;
}

bool is_bicharacter(const Bicharacter& b) {
    const CayleyTable& g = b.group;
    for (long x = 0; x < g.m; ++x)
        for (long y = 0; y < g.m; ++y)
            for (long z = 0; z < g.m; ++z) {
                if (b.values[static_cast<size_t>(g.mul(x, y))][static_cast<size_t>(z)] !=
                    b.values[static_cast<size_t>(x)][static_cast<size_t>(z)] *
                        b.values[static_cast<size_t>(y)][static_cast<size_t>(z)])
                    return false;
                if (b.values[static_cast<size_t>(x)][static_cast<size_t>(g.mul(y, z))] !=
                    b.values[static_cast<size_t>(x)][static_cast<size_t>(y)] *
                        b.values[static_cast<size_t>(x)][static_cast<size_t>(z)])
                    return false;
            }
    return true;
}

bool is_skew_symmetric(const Bicharacter& b) {
    for (long x = 0; x < b.group.m; ++x)
        for (long y = 0; y < b.group.m; ++y)
            if (b.values[static_cast<size_t>(x)][static_cast<size_t>(y)] *
                    b.values[static_cast<size_t>(y)][static_cast<size_t>(x)] !=
                Cyclotomic(1))
                return false;
    return true;
}

Bicharacter induced_bicharacter(const Cocycle& a) {
    if (!a.group.is_abelian())
        throw std::invalid_argument("induced_bicharacter: group must be abelian");
    Bicharacter b;
    b.group = a.group;
    const long m = a.group.m;
    b.values.assign(static_cast<size_t>(m), std::vector<Cyclotomic>(static_cast<size_t>(m)));
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y)
            b.values[static_cast<size_t>(x)][static_cast<size_t>(y)] =
                a.values[static_cast<size_t>(x)][static_cast<size_t>(y)] *
                a.values[static_cast<size_t>(y)][static_cast<size_t>(x)].inverse();
    if (!is_bicharacter(b) || !is_skew_symmetric(b))
        throw std::logic_error("induced_bicharacter: induced table fails bicharacter scans");
    return b;
}

bool is_nondegenerate(const Bicharacter& b) {
    for (long x = 0; x < b.group.m; ++x) {
        if (x == b.group.identity) continue;
        bool all_one = true;
        for (long y = 0; y < b.group.m; ++y)
            if (b.values[static_cast<size_t>(x)][static_cast<size_t>(y)] != Cyclotomic(1)) {
                all_one = false;
                break;
            }
        if (all_one) return false;
    }
    return true;
}

std::vector<std::vector<long>> ray_classes(const Cocycle& a) {
    const CayleyTable& g = a.group;
    std::vector<bool> regular(static_cast<size_t>(g.m), true);
    for (long x = 0; x < g.m; ++x)
        for (long h : g.centralizer(x))
            if (a.values[static_cast<size_t>(x)][static_cast<size_t>(h)] !=
                a.values[static_cast<size_t>(h)][static_cast<size_t>(x)]) {
                regular[static_cast<size_t>(x)] = false;
                break;
            }
    std::vector<std::vector<long>> out;
    for (const auto& cls : g.conjugacy_classes()) {
        bool all_regular = true;
        for (long x : cls)
            if (!regular[static_cast<size_t>(x)]) { all_regular = false; break; }
        if (all_regular) out.push_back(cls);
    }
    return out;
}

namespace {

std::vector<long> divisors_of(long n) {
    std::vector<long> d;
    for (long i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

// Order statistics N(d) = #{g : g^d = e} determine an abelian group: for
// G = Z_{d_1} x ... x Z_{d_r}, N(d) = prod gcd(d, d_i). Search divisor chains.
bool search_factors(const std::vector<long>& divs, const std::vector<long>& counts,
                    long remaining, long min_factor, std::vector<long>& chain) {
    if (remaining == 1) {
        for (size_t i = 0; i < divs.size(); ++i) {
            long expect = 1;
            for (long f : chain) expect *= std::gcd(divs[i], f);
            if (expect != counts[i]) return false;
        }
        return true;
    }
    for (long f : divs) {
        if (f < min_factor || f == 1 || remaining % f != 0) continue;
        chain.push_back(f);
        // chain is built largest-last; require divisibility with the previous
        if (chain.size() < 2 || f % chain[chain.size() - 2] == 0) {
            if (search_factors(divs, counts, remaining / f, f, chain)) return true;
        }
        chain.pop_back();
    }
    return false;
}

}  // namespace

AbelianType classify_abelian(const CayleyTable& t) {
    if (!t.is_abelian()) throw std::invalid_argument("classify_abelian: group is not abelian");
    if (auto err = t.validate()) throw std::invalid_argument("classify_abelian: " + *err);
    std::vector<long> orders(static_cast<size_t>(t.m));
    for (long g = 0; g < t.m; ++g) orders[static_cast<size_t>(g)] = t.element_order(g);
    std::vector<long> divs = divisors_of(t.m);
    std::vector<long> counts;
    for (long d : divs) {
        long c = 0;
        for (long o : orders)
            if (d % o == 0) ++c;
        counts.push_back(c);
    }
    if (t.m == 1) return AbelianType{{1}};
    std::vector<long> chain;
    if (!search_factors(divs, counts, t.m, 2, chain))
        throw std::logic_error("classify_abelian: no invariant factor chain matches");
    return AbelianType{chain};
}

}  // namespace qcreg
