#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcreg/group_table.hpp"
#include "qcreg/linalg.hpp"

namespace qcreg {

/// Coordinate vector of an algebra element in the structure-constant basis.
struct Element {
    std::vector<Cyclotomic> coords;

    Element() = default;
    explicit Element(long dim) : coords(static_cast<size_t>(dim)) {}

    bool is_zero() const;
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element scaled(const Cyclotomic& c) const;
    bool operator==(const Element& o) const { return coords == o.coords; }
};

/// Finite-dimensional unital associative algebra given by structure constants
/// b_i b_j = sum_k c_{ij}^k b_k, stored sparsely keyed by (i, j).
class Algebra {
public:
    using StructureMap = std::map<std::pair<long, long>, std::vector<std::pair<long, Cyclotomic>>>;

    Algebra(long dim, StructureMap structure, Element unit,
            std::optional<std::vector<std::pair<long, long>>> components = std::nullopt);

    long dim() const { return dim_; }
    const Element& unit() const { return unit_; }
    const StructureMap& structure() const { return structure_; }
    const std::optional<std::vector<std::pair<long, long>>>& components() const { return components_; }

    Element basis_element(long i) const;
    Element multiply(const Element& x, const Element& y) const;

    /// Smallest N with every structure constant and unit coordinate in Q(zeta_N).
    long conductor() const;

    /// Full-scan structural checks, O(dim^4); fine at desk scale.
    bool associativity_ok() const;
    bool unit_laws_ok() const;
    /// Components partition [0,dim), are multiplicatively closed, and
    /// cross-products vanish. Trivially true when no metadata is present.
    bool components_ok() const;

private:
    long dim_;
    StructureMap structure_;
    Element unit_;
    std::optional<std::vector<std::pair<long, long>>> components_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr matrix_algebra(long n);
AlgebraPtr direct_sum(const Algebra& a, const Algebra& b);
AlgebraPtr tensor_product(const Algebra& a, const Algebra& b);
AlgebraPtr group_algebra(const CayleyTable& t);
AlgebraPtr twisted_group_algebra(const CayleyTable& t, const Cocycle& alpha);
AlgebraPtr grassmann_truncated(long k);

/// Unital subalgebra generated by gens; closure by iterated products and exact
/// span saturation. Returns the subalgebra (own structure constants) and the
/// embedding matrix whose rows are the subalgebra basis in A-coordinates.
std::pair<AlgebraPtr, CMatrix> subalgebra_closure(const Algebra& a,
                                                  const std::vector<Element>& gens,
                                                  bool include_unit = true);

/// Basis of {x : x b_i = b_i x for all i}, via the exact kernel of the
/// stacked commutator system.
std::vector<Element> center(const Algebra& a);

/// x^dim == 0; valid bound for a unital algebra of that dimension.
bool is_nilpotent(const Algebra& a, const Element& x);

/// x has a two-sided inverse (the left-multiplication operator is invertible).
bool is_invertible(const Algebra& a, const Element& x);

/// x^e by binary exponentiation (e >= 0; x^0 is the unit).
Element element_power(const Algebra& a, const Element& x, long e);

}  // namespace qcreg
