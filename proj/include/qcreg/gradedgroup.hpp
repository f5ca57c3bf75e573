#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcreg/decomp.hpp"
#include "qcreg/group_table.hpp"

namespace qcreg {

struct GroupReconstruction {
    enum class Failure { None, Precondition, MultiComponentProduct, NotAGroup };
    Failure failure = Failure::None;
    std::optional<CayleyTable> group;
    long j = -1, k = -1;            // offending component pair for MultiComponentProduct
    std::vector<long> support;      // components hit by that product
    std::string message;
    bool ok() const { return failure == Failure::None; }
};

/// From a minimal table with all one-dimensional components and a found
/// witness: sets j*k to the unique component containing w_j w_k, validates
/// the table as an abelian group with the unit's component as identity, and
/// verifies entries[i][j] * entries[i][k] = entries[i][j*k] on all triples.
GroupReconstruction reconstruct_group(const Decomposition& d, const ThetaTable& t,
                                      const RegularityWitness& w);

struct SetGradingResult {
    bool ok = false;
    std::vector<std::vector<long>> f;  // f[i][j] = component of R_i R_j, or -1 when zero
    long i = -1, j = -1;               // first component pair whose products straddle components
    std::vector<long> components_hit;
    std::string message;
};

/// For each component pair, the span of all basis-pair products must be zero
/// or inside a single component. First lexicographic violation is reported.
SetGradingResult set_grading_detect(const Decomposition& d);

struct RealizabilityReport {
    enum class Verdict { realizable, necessary_conditions_hold, violated };
    Verdict verdict = Verdict::violated;
    std::string message;
    std::optional<CayleyTable> group;  // present when total and realizable
};

/// Cancellation and associativity on the defined entries of a partial product
/// table; when the table is total and passes, full group axioms are verified.
/// A partial pass is only "necessary conditions hold", never realizability.
RealizabilityReport realizability_check(const std::vector<std::vector<long>>& f, long m);

/// The number of ray classes equals the center dimension of the associated
/// twisted group algebra; returns both for comparison.
std::pair<long, long> ray_class_center_dims(const Cocycle& a);

}  // namespace qcreg
