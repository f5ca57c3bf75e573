#pragma once

#include <optional>
#include <vector>

#include "qcreg/cyclotomic.hpp"

namespace qcreg {

/// Dense matrix over the cyclotomic field, row-major.
struct CMatrix {
    long rows = 0;
    long cols = 0;
    std::vector<Cyclotomic> data;

    CMatrix() = default;
    CMatrix(long r, long c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    Cyclotomic& at(long r, long c) { return data[static_cast<size_t>(r) * cols + c]; }
    const Cyclotomic& at(long r, long c) const { return data[static_cast<size_t>(r) * cols + c]; }

    static CMatrix identity(long n);
};

CMatrix mat_mul(const CMatrix& a, const CMatrix& b);
bool mat_equal(const CMatrix& a, const CMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Cyclotomic det_bareiss(CMatrix m);

/// In-place reduced row echelon form; returns rank and fills pivot columns.
long rref_in_place(CMatrix& m, std::vector<long>* pivot_cols = nullptr);

/// Basis of the right null space {x : m x = 0}, one vector per free column.
std::vector<std::vector<Cyclotomic>> kernel_basis(const CMatrix& m);

/// Unique solution of a x = b when a is square and invertible, else nullopt
/// (also nullopt for consistent-but-underdetermined systems).
std::optional<std::vector<Cyclotomic>> solve_unique(const CMatrix& a,
                                                    const std::vector<Cyclotomic>& b);

/// Kronecker product (a-index major).
CMatrix kronecker(const CMatrix& a, const CMatrix& b);

}  // namespace qcreg
