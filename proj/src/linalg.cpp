#include "qcreg/linalg.hpp"

#include <stdexcept>

namespace qcreg {

CMatrix CMatrix::identity(long n) {
    CMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
    return m;
}

CMatrix mat_mul(const CMatrix& a, const CMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    CMatrix r(a.rows, b.cols);
    for (long i = 0; i < a.rows; ++i)
        for (long k = 0; k < a.cols; ++k) {
            const Cyclotomic& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (long j = 0; j < b.cols; ++j) {
                const Cyclotomic& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

bool mat_equal(const CMatrix& a, const CMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (size_t i = 0; i < a.data.size(); ++i)
        if (a.data[i] != b.data[i]) return false;
    return true;
}

Cyclotomic det_bareiss(CMatrix m) {
    if (m.rows != m.cols) throw std::invalid_argument("det_bareiss: matrix not square");
    const long n = m.rows;
    if (n == 0) return Cyclotomic(1);
    Cyclotomic sign(1);
    Cyclotomic prev(1);
    for (long k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            long sel = -1;
            for (long i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) { sel = i; break; }
            if (sel < 0) return Cyclotomic(0);
            for (long j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(sel, j));
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                Cyclotomic num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num * prev.inverse();  // exact division, Bareiss step
            }
            m.at(i, k) = Cyclotomic(0);
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

long rref_in_place(CMatrix& m, std::vector<long>* pivot_cols) {
    long row = 0;
    if (pivot_cols) pivot_cols->clear();
    for (long col = 0; col < m.cols && row < m.rows; ++col) {
        long sel = -1;
        for (long i = row; i < m.rows; ++i)
            if (!m.at(i, col).is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != row)
            for (long j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(sel, j));
        Cyclotomic inv = m.at(row, col).inverse();
        for (long j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (long i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Cyclotomic f = m.at(i, col);
            for (long j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++row;
    }
    return row;
}

std::vector<std::vector<Cyclotomic>> kernel_basis(const CMatrix& m) {
    CMatrix r = m;
    std::vector<long> pivots;
    rref_in_place(r, &pivots);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (long c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Cyclotomic>> basis;
    for (long free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        std::vector<Cyclotomic> v(static_cast<size_t>(m.cols));
        v[static_cast<size_t>(free_col)] = Cyclotomic(1);
        for (size_t p = 0; p < pivots.size(); ++p)
            v[static_cast<size_t>(pivots[p])] = -r.at(static_cast<long>(p), free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Cyclotomic>> solve_unique(const CMatrix& a,
                                                    const std::vector<Cyclotomic>& b) {
    if (static_cast<long>(b.size()) != a.rows)
        throw std::invalid_argument("solve_unique: rhs length mismatch");
    CMatrix aug(a.rows, a.cols + 1);
    for (long i = 0; i < a.rows; ++i) {
        for (long j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[static_cast<size_t>(i)];
    }
    std::vector<long> pivots;
    long rank = rref_in_place(aug, &pivots);
    for (long p = 0; p < rank; ++p)
        if (pivots[static_cast<size_t>(p)] == a.cols) return std::nullopt;  // inconsistent
    if (rank != a.cols) return std::nullopt;  // underdetermined
    std::vector<Cyclotomic> x(static_cast<size_t>(a.cols));
    for (long p = 0; p < rank; ++p)
        x[static_cast<size_t>(pivots[static_cast<size_t>(p)])] = aug.at(p, a.cols);
    return x;
}

CMatrix kronecker(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.rows * b.rows, a.cols * b.cols);
    for (long i = 0; i < a.rows; ++i)
        for (long j = 0; j < a.cols; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (long k = 0; k < b.rows; ++k)
                for (long l = 0; l < b.cols; ++l)
                    r.at(i * b.rows + k, j * b.cols + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

}  // namespace qcreg
