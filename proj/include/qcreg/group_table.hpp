#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcreg/cyclotomic.hpp"

namespace qcreg {

/// Finite group given by its multiplication table; elements are 0..m-1.
struct CayleyTable {
    long m = 0;
    long identity = 0;
    std::vector<std::vector<long>> table;  // table[g][h] = g*h

    long mul(long g, long h) const { return table[static_cast<size_t>(g)][static_cast<size_t>(h)]; }
    long inv(long g) const;
    long element_order(long g) const;
    bool is_abelian() const;
    std::vector<long> centralizer(long g) const;
    std::vector<std::vector<long>> conjugacy_classes() const;

    /// Latin square, identity laws, associativity on all triples.
    /// Returns an error description or nullopt when valid.
    std::optional<std::string> validate() const;
};

CayleyTable cyclic_group(long n);
CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);
/// Z_{d1} x ... x Z_{dr}; mixed-radix index, last factor fastest.
CayleyTable abelian_group(const std::vector<long>& factors);

struct Cocycle {
    CayleyTable group;
    std::vector<std::vector<Cyclotomic>> values;
};

struct Bicharacter {
    CayleyTable group;
    std::vector<std::vector<Cyclotomic>> values;
};

Cocycle trivial_cocycle(const CayleyTable& g);

struct CocycleViolation {
    long g, h, k;
    std::string message;
};

/// Full-triple check of the cocycle identity a(g,h)a(gh,k) = a(g,hk)a(h,k),
/// plus normalization a(e,g) = a(g,e) = 1.
std::optional<CocycleViolation> validate_cocycle(const Cocycle& a);

/// beta(g,h) = a(g,h) a(h,g)^{-1}; requires an abelian group. The result is
/// verified to be multiplicative in each argument and skew-symmetric.
Bicharacter induced_bicharacter(const Cocycle& a);

bool is_bicharacter(const Bicharacter& b);
bool is_skew_symmetric(const Bicharacter& b);

/// Only the identity row is all ones.
bool is_nondegenerate(const Bicharacter& b);

/// Conjugacy classes consisting of alpha-regular elements
/// (alpha symmetric on the centralizer).
std::vector<std::vector<long>> ray_classes(const Cocycle& a);

/// Invariant factor list d_1 | d_2 | ... | d_r with product = group order.
struct AbelianType {
    std::vector<long> invariant_factors;
    bool operator==(const AbelianType&) const = default;
};

/// Classifies a finite abelian group from its element-order statistics.
/// Throws std::invalid_argument on non-abelian input.
AbelianType classify_abelian(const CayleyTable& t);

}  // namespace qcreg
