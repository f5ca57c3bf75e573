#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qcreg/decomp.hpp"

namespace qcreg {

/// Multilinear polynomial sum over permutations: sum_sigma c_sigma
/// x_{sigma(1)} ... x_{sigma(n)}. Permutations are 0-based index vectors.
struct MultilinearPoly {
    long degree = 0;
    std::map<std::vector<long>, Cyclotomic> terms;
};

/// Product of entries[l_{sigma(i)}][l_{sigma(j)}] over inversions of sigma
/// (pairs i < j with sigma(i) > sigma(j)). Components in tuple are 0-based.
Cyclotomic lambda_coefficient(const ThetaTable& t, const std::vector<long>& tuple,
                              const std::vector<long>& sigma);

/// Solves the homogeneous system indexed by component tuples (rows, m^n) and
/// permutations (columns, n!). Returns the reduced kernel vector with the
/// lexicographically smallest pivot, or nullopt when the kernel is zero.
/// Degree capped at 6 unless allow_large is set.
std::optional<MultilinearPoly> find_identity(const ThetaTable& t, long n, bool allow_large = false);

struct IdentityVerification {
    bool holds = true;
    long trials_run = 0;
    bool exhaustive = false;                   // all homogeneous basis tuples were checked
    std::optional<std::vector<long>> counterexample_tuple;  // component indices of a failure
};

/// Evaluates P on random homogeneous tuples (coordinates in {-3..3}, one
/// component per variable chosen uniformly) and, when the total basis size
/// is at most 8, exhaustively on all homogeneous basis tuples. Any nonzero
/// value refutes the identity.
IdentityVerification verify_identity(const MultilinearPoly& p, const Decomposition& d,
                                     long trials, unsigned long seed);

}  // namespace qcreg
