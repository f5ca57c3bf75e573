#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcreg/decomp.hpp"
#include "qcreg/group_table.hpp"

namespace qcreg {

/// A named decomposition fixture with optional expected data for checking.
struct NamedConstruction {
    std::string name;
    AlgebraPtr algebra;
    Decomposition decomposition;
    std::optional<ThetaTable> expected_theta;
    std::optional<AbelianType> expected_group;
};

/// The clock/shift monomial P^i Q^j as an element of matrix_algebra(n):
/// P = diag(1, zeta_n, ..., zeta_n^{n-1}), Q the cyclic shift.
Element clock_shift_monomial(long n, long i, long j);

/// The n^2 x n^2 table zeta_n^{jk - il} indexed row-major by (i,j), (k,l).
ThetaTable clock_shift_table(long n);

/// M_n split into the n^2 one-dimensional spans of P^i Q^j, row-major order.
NamedConstruction pauli_decomposition(long n);

/// M_2 + M_4 with sixteen components: four two-dimensional ones pairing an
/// M_2 monomial with an M_4 monomial, twelve one-dimensional M_4-only ones.
NamedConstruction example_6_1();

/// The six-dimensional subalgebra of M_6 generated by L = diag(1,-1,...) and
/// a partial swap J, with one-dimensional components in the order
/// 1, J^2, LJ, LJ^2, J, L.
NamedConstruction example_6_2();

/// M_{n1} tensor (K + M_q), q = n2/n1, isomorphic to M_{n1} + M_{n2};
/// component table is the Kronecker product of the two factor tables.
/// Requires n1 | n2.
NamedConstruction kronecker_divisor_grading(long n1, long n2);

/// Recursive grading of M_{p^{l1}} + ... + M_{p^{lr}} (exponents ascending):
/// the M_{p^{l1}} factor is split off by tensoring, the scalar summand is
/// absorbed into the identity component, and the rest recurses.
NamedConstruction p_power_sum_grading(long p, const std::vector<long>& exponents);

/// Even/odd split of the truncated exterior algebra on k generators.
NamedConstruction grassmann_z2_decomposition(long k);

/// Names accepted by make_construction, for CLI listing.
std::vector<std::string> construction_names();

/// Builds a construction by name with numeric arguments; throws
/// std::invalid_argument on unknown names or bad arguments.
NamedConstruction make_construction(const std::string& name, const std::vector<long>& args);

}  // namespace qcreg
