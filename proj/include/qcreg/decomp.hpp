#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcreg/algebra.hpp"

namespace qcreg {

/// A candidate splitting R = R_1 + ... + R_m given by spanning sets.
struct Decomposition {
    AlgebraPtr algebra;
    std::vector<std::vector<Element>> components;  // components[i] spans R_i
};

/// True iff the concatenated component bases are jointly independent and
/// their span is the whole algebra.
bool check_direct_sum(const Decomposition& d);

/// Commutation-factor table: a b = entries[i][j] * b a for a in R_i, b in R_j.
/// constrained[i][j] is false when no basis pair had both products nonzero;
/// such entries default to 1 and carry no information.
struct ThetaTable {
    long m = 0;
    std::vector<std::vector<Cyclotomic>> entries;
    std::vector<std::vector<bool>> constrained;

    bool all_constrained() const;
};

struct ThetaFailure {
    enum class Kind { NotScalarMultiple, InconsistentScalar, OneSidedZero };
    Kind kind;
    long i, j;  // component pair
    long a, b;  // basis indices within components i and j naming the counterexample
    std::string message;
};

struct DetectResult {
    std::optional<ThetaTable> table;
    std::optional<ThetaFailure> failure;
    bool ok() const { return table.has_value(); }
};

/// Scans all basis pairs of each component pair for a single commutation
/// scalar. Bilinearity makes basis-pair validity sufficient.
DetectResult detect_theta(const Decomposition& d);

struct QcRelationsReport {
    bool relations_ok = true;                          // entries[i][i]^2 = 1 and entries[i][j]entries[j][i] = 1
    std::vector<std::pair<long, long>> violations;     // offending (i,j) on constrained pairs
    bool diagonal_all_one = true;                      // required in finite dimension
    std::vector<long> diagonal_not_one;                // indices i with entries[i][i] != 1
};

QcRelationsReport qc_relations_check(const ThetaTable& t);

/// Outcome of the search for elements w_i in R_i with non-nilpotent product.
struct RegularityWitness {
    enum class Status { found, refuted, inconclusive };
    Status status = Status::inconclusive;
    std::vector<Element> elements;
    Element product;
    std::string note;
};

/// Phase 1: random small-integer coordinates, up to budget attempts,
/// reproducible from seed (per-attempt seed = seed + index). With
/// definitive = true, a symbolic phase decides exactly: the product of
/// generic elements (one indeterminate per basis vector) is raised to the
/// algebra dimension; identically zero refutes, otherwise a specialization
/// is produced. The symbolic phase caps at 16 indeterminates.
RegularityWitness find_witness(const Decomposition& d, const ThetaTable& t,
                               long budget = 64, unsigned long seed = 0,
                               bool definitive = false);

struct UnconstrainedEntries : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MinimalityResult {
    bool minimal = true;
    std::optional<std::pair<long, long>> duplicate_rows;  // 0-based, first pair found
};

/// All rows pairwise distinct. Throws UnconstrainedEntries if any entry
/// carries no information.
MinimalityResult is_minimal(const ThetaTable& t);

/// Exact determinant (fraction-free elimination).
Cyclotomic det_exact(const CMatrix& m);

struct DetCriterionReport {
    Cyclotomic det;
    bool det_squared_matches = false;  // det^2 = m^m
    bool minimal = false;
    bool equivalence_holds = false;    // det_squared_matches == minimal
};

/// det(T)^2 = m^m, reported together with the minimality verdict so the
/// equivalence can be checked in both directions.
DetCriterionReport bahturin_regev_check(const ThetaTable& t);

/// T * T = m * identity.
bool msquared_check(const ThetaTable& t);

struct RootOrderReport {
    bool pass = true;
    std::vector<std::tuple<long, long, long>> violations;  // (i, j, order) with order not dividing bound
};

/// Every constrained entry is a root of unity of order dividing bound.
RootOrderReport root_order_check(const ThetaTable& t, long bound);

struct NecessaryConditionReport {
    bool pass = true;
    std::string message;
    std::optional<std::pair<long, long>> violating_pair;
    bool caution = false;  // set on pass: the condition is necessary, not sufficient
};

/// Size constraints for component dimension lists (q_1,...): the largest
/// q must satisfy q^2 <= m, and every intermediate size must share a
/// factor with the largest.
NecessaryConditionReport necessary_condition_check(const std::vector<long>& component_sizes, long m);

}  // namespace qcreg
