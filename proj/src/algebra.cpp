#include "qcreg/algebra.hpp"

#include <numeric>
#include <stdexcept>

namespace qcreg {

bool Element::is_zero() const {
    for (const auto& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

Element Element::operator+(const Element& o) const {
    if (coords.size() != o.coords.size()) throw std::invalid_argument("Element: dimension mismatch");
    Element r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

Element Element::operator-(const Element& o) const {
    if (coords.size() != o.coords.size()) throw std::invalid_argument("Element: dimension mismatch");
    Element r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

Element Element::scaled(const Cyclotomic& c) const {
    Element r = *this;
    for (auto& x : r.coords) x *= c;
    return r;
}

Algebra::Algebra(long dim, StructureMap structure, Element unit,
                 std::optional<std::vector<std::pair<long, long>>> components)
    : dim_(dim), structure_(std::move(structure)), unit_(std::move(unit)),
      components_(std::move(components)) {
    if (dim_ < 1) throw std::invalid_argument("Algebra: dimension must be positive");
    if (static_cast<long>(unit_.coords.size()) != dim_)
        throw std::invalid_argument("Algebra: unit coordinate length mismatch");
}

Element Algebra::basis_element(long i) const {
    Element e(dim_);
    e.coords[static_cast<size_t>(i)] = Cyclotomic(1);
    return e;
}

Element Algebra::multiply(const Element& x, const Element& y) const {
    if (static_cast<long>(x.coords.size()) != dim_ || static_cast<long>(y.coords.size()) != dim_)
        throw std::invalid_argument("multiply: dimension mismatch");
    Element r(dim_);
    for (long i = 0; i < dim_; ++i) {
        const Cyclotomic& xi = x.coords[static_cast<size_t>(i)];
        if (xi.is_zero()) continue;
        for (long j = 0; j < dim_; ++j) {
            const Cyclotomic& yj = y.coords[static_cast<size_t>(j)];
            if (yj.is_zero()) continue;
            auto it = structure_.find({i, j});
            if (it == structure_.end()) continue;
            Cyclotomic f = xi * yj;
            for (const auto& [k, c] : it->second)
                r.coords[static_cast<size_t>(k)] += f * c;
        }
    }
    return r;
}

long Algebra::conductor() const {
    long n = 1;
    for (const auto& c : unit_.coords) n = std::lcm(n, c.order());
    for (const auto& [ij, terms] : structure_)
        for (const auto& [k, c] : terms) n = std::lcm(n, c.order());
    return n;
}

bool Algebra::associativity_ok() const {
    for (long i = 0; i < dim_; ++i) {
        Element bi = basis_element(i);
        for (long j = 0; j < dim_; ++j) {
            Element bj = basis_element(j);
            Element ij = multiply(bi, bj);
            for (long k = 0; k < dim_; ++k) {
                Element bk = basis_element(k);
                if (!(multiply(ij, bk) == multiply(bi, multiply(bj, bk)))) return false;
            }
        }
    }
    return true;
}

bool Algebra::unit_laws_ok() const {
    for (long i = 0; i < dim_; ++i) {
        Element bi = basis_element(i);
        if (!(multiply(unit_, bi) == bi) || !(multiply(bi, unit_) == bi)) return false;
    }
    return true;
}

bool Algebra::components_ok() const {
    if (!components_) return true;
    std::vector<bool> covered(static_cast<size_t>(dim_), false);
    for (const auto& [off, size] : *components_) {
        if (off < 0 || size < 1 || off + size > dim_) return false;
        long root = 1;
        while (root * root < size) ++root;
        if (size != 1 && root * root != size) return false;
        for (long i = off; i < off + size; ++i) {
            if (covered[static_cast<size_t>(i)]) return false;
            covered[static_cast<size_t>(i)] = true;
        }
    }
    for (bool c : covered)
        if (!c) return false;
    auto component_of = [&](long idx) {
        for (size_t c = 0; c < components_->size(); ++c) {
            auto [off, size] = (*components_)[c];
            if (idx >= off && idx < off + size) return static_cast<long>(c);
        }
        return -1L;
    };
    for (const auto& [ij, terms] : structure_) {
        long ci = component_of(ij.first), cj = component_of(ij.second);
        for (const auto& [k, c] : terms) {
            if (c.is_zero()) continue;
            if (ci != cj) return false;               // cross products must vanish
            if (component_of(k) != ci) return false;  // closure within the summand
        }
    }
    return true;
}

AlgebraPtr matrix_algebra(long n) {
    if (n < 1) throw std::invalid_argument("matrix_algebra: n must be positive");
    const long d = n * n;
    Algebra::StructureMap s;
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c)
                // e_{ab} e_{bc} = e_{ac}
                s[{a * n + b, b * n + c}] = {{a * n + c, Cyclotomic(1)}};
    Element unit(d);
    for (long a = 0; a < n; ++a) unit.coords[static_cast<size_t>(a * n + a)] = Cyclotomic(1);
    return std::make_shared<Algebra>(d, std::move(s), std::move(unit),
                                     std::vector<std::pair<long, long>>{{0, d}});
}

AlgebraPtr direct_sum(const Algebra& a, const Algebra& b) {
    const long d = a.dim() + b.dim();
    Algebra::StructureMap s = a.structure();
    for (const auto& [ij, terms] : b.structure()) {
        auto& out = s[{ij.first + a.dim(), ij.second + a.dim()}];
        for (const auto& [k, c] : terms) out.emplace_back(k + a.dim(), c);
    }
    Element unit(d);
    for (long i = 0; i < a.dim(); ++i) unit.coords[static_cast<size_t>(i)] = a.unit().coords[static_cast<size_t>(i)];
    for (long i = 0; i < b.dim(); ++i)
        unit.coords[static_cast<size_t>(i + a.dim())] = b.unit().coords[static_cast<size_t>(i)];
    std::optional<std::vector<std::pair<long, long>>> comps;
    if (a.components() && b.components()) {
        comps = *a.components();
        for (const auto& [off, size] : *b.components()) comps->emplace_back(off + a.dim(), size);
    }
    return std::make_shared<Algebra>(d, std::move(s), std::move(unit), std::move(comps));
}

AlgebraPtr tensor_product(const Algebra& a, const Algebra& b) {
    const long db = b.dim();
    const long d = a.dim() * db;
    Algebra::StructureMap s;
    for (const auto& [ij_a, terms_a] : a.structure())
        for (const auto& [ij_b, terms_b] : b.structure()) {
            auto& out = s[{ij_a.first * db + ij_b.first, ij_a.second * db + ij_b.second}];
            for (const auto& [ka, ca] : terms_a)
                for (const auto& [kb, cb] : terms_b) out.emplace_back(ka * db + kb, ca * cb);
        }
    Element unit(d);
    for (long i = 0; i < a.dim(); ++i)
        for (long j = 0; j < db; ++j)
            unit.coords[static_cast<size_t>(i * db + j)] =
                a.unit().coords[static_cast<size_t>(i)] * b.unit().coords[static_cast<size_t>(j)];
    // Kronecker ordering interleaves direct summands, so simple-component
    // metadata does not carry over as contiguous blocks.
    return std::make_shared<Algebra>(d, std::move(s), std::move(unit));
}

AlgebraPtr twisted_group_algebra(const CayleyTable& t, const Cocycle& alpha) {
    if (auto err = t.validate())
        throw std::invalid_argument("twisted_group_algebra: invalid table: " + *err);
    if (alpha.group.m != t.m)
        throw std::invalid_argument("twisted_group_algebra: cocycle group size mismatch");
    if (auto v = validate_cocycle(alpha))
        throw std::invalid_argument("twisted_group_algebra: invalid cocycle: " + v->message);
    Algebra::StructureMap s;
    for (long g = 0; g < t.m; ++g)
        for (long h = 0; h < t.m; ++h)
            s[{g, h}] = {{t.mul(g, h), alpha.values[static_cast<size_t>(g)][static_cast<size_t>(h)]}};
    Element unit(t.m);
    unit.coords[static_cast<size_t>(t.identity)] = Cyclotomic(1);
    return std::make_shared<Algebra>(t.m, std::move(s), std::move(unit));
}

AlgebraPtr group_algebra(const CayleyTable& t) {
    return twisted_group_algebra(t, trivial_cocycle(t));
}

namespace {

// Sign of merging two disjoint index sets: (-1)^{#{(s,t) in S x T : s > t}}.
int grassmann_sign(unsigned long s_mask, unsigned long t_mask, long k) {
    int inversions = 0;
    for (long s = 0; s < k; ++s) {
        if (!(s_mask >> s & 1)) continue;
        for (long t = 0; t < s; ++t)
            if (t_mask >> t & 1) ++inversions;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

AlgebraPtr grassmann_truncated(long k) {
    if (k < 1) throw std::invalid_argument("grassmann_truncated: k must be positive");
    if (k > 20) throw std::invalid_argument("grassmann_truncated: k too large");
    const long d = 1L << k;
    Algebra::StructureMap s;
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) {
            if (i & j) continue;  // repeated generator kills the product
            int sgn = grassmann_sign(static_cast<unsigned long>(i), static_cast<unsigned long>(j), k);
            s[{i, j}] = {{i | j, Cyclotomic(sgn)}};
        }
    Element unit(d);
    unit.coords[0] = Cyclotomic(1);
    return std::make_shared<Algebra>(d, std::move(s), std::move(unit));
}

namespace {

// Inserts v into the row-reduced span basis; returns true if the rank grew.
bool rref_insert(CMatrix& basis, long& rank, std::vector<long>& pivots, const Element& v) {
    std::vector<Cyclotomic> w = v.coords;
    for (long r = 0; r < rank; ++r) {
        const Cyclotomic& c = w[static_cast<size_t>(pivots[static_cast<size_t>(r)])];
        if (c.is_zero()) continue;
        Cyclotomic f = c;
        for (long j = 0; j < basis.cols; ++j) w[static_cast<size_t>(j)] -= f * basis.at(r, j);
    }
    long p = -1;
    for (long j = 0; j < basis.cols; ++j)
        if (!w[static_cast<size_t>(j)].is_zero()) { p = j; break; }
    if (p < 0) return false;
    Cyclotomic inv = w[static_cast<size_t>(p)].inverse();
    for (auto& c : w) c *= inv;
    // back-substitute into earlier rows to keep reduced form
    for (long r = 0; r < rank; ++r) {
        Cyclotomic f = basis.at(r, p);
        if (f.is_zero()) continue;
        for (long j = 0; j < basis.cols; ++j) basis.at(r, j) -= f * w[static_cast<size_t>(j)];
    }
    // keep rows ordered by pivot column
    long pos = rank;
    for (long r = 0; r < rank; ++r)
        if (pivots[static_cast<size_t>(r)] > p) { pos = r; break; }
    pivots.insert(pivots.begin() + pos, p);
    for (long j = 0; j < basis.cols; ++j) basis.at(rank, j) = Cyclotomic(0);  // ensure row exists
    // shift rows down
    for (long r = rank; r > pos; --r)
        for (long j = 0; j < basis.cols; ++j) basis.at(r, j) = basis.at(r - 1, j);
    for (long j = 0; j < basis.cols; ++j) basis.at(pos, j) = w[static_cast<size_t>(j)];
    ++rank;
    return true;
}

}  // namespace

std::pair<AlgebraPtr, CMatrix> subalgebra_closure(const Algebra& a,
                                                  const std::vector<Element>& gens,
                                                  bool include_unit) {
    if (gens.empty()) throw std::invalid_argument("subalgebra_closure: gens must be nonempty");
    const long d = a.dim();
    CMatrix basis(d, d);
    long rank = 0;
    std::vector<long> pivots;
    if (include_unit) rref_insert(basis, rank, pivots, a.unit());
    for (const auto& g : gens) {
        if (static_cast<long>(g.coords.size()) != d)
            throw std::invalid_argument("subalgebra_closure: generator dimension mismatch");
        rref_insert(basis, rank, pivots, g);
    }
    auto row_element = [&](long r) {
        Element e(d);
        for (long j = 0; j < d; ++j) e.coords[static_cast<size_t>(j)] = basis.at(r, j);
        return e;
    };
    for (long round = 0; round <= d; ++round) {
        if (round == d && rank < d)
            throw std::logic_error("subalgebra_closure: iteration cap exceeded");
        bool grew = false;
        long current = rank;
        for (long i = 0; i < current; ++i)
            for (long j = 0; j < current; ++j) {
                Element p = a.multiply(row_element(i), row_element(j));
                if (rref_insert(basis, rank, pivots, p)) grew = true;
            }
        if (!grew) break;
    }
    // Express unit and products in the reduced basis: coordinates are read off
    // the pivot columns, with an exactness check on the residual.
    auto coords_in_basis = [&](const Element& v) {
        std::vector<Cyclotomic> x(static_cast<size_t>(rank));
        Element resid = v;
        for (long r = 0; r < rank; ++r) {
            Cyclotomic c = resid.coords[static_cast<size_t>(pivots[static_cast<size_t>(r)])];
            x[static_cast<size_t>(r)] = c;
            if (!c.is_zero()) resid = resid - row_element(r).scaled(c);
        }
        if (!resid.is_zero())
            throw std::logic_error("subalgebra_closure: vector escapes the closed span");
        return x;
    };
    Algebra::StructureMap s;
    for (long i = 0; i < rank; ++i)
        for (long j = 0; j < rank; ++j) {
            auto x = coords_in_basis(a.multiply(row_element(i), row_element(j)));
            std::vector<std::pair<long, Cyclotomic>> terms;
            for (long kk = 0; kk < rank; ++kk)
                if (!x[static_cast<size_t>(kk)].is_zero()) terms.emplace_back(kk, x[static_cast<size_t>(kk)]);
            if (!terms.empty()) s[{i, j}] = std::move(terms);
        }
    Element sub_unit(rank);
    sub_unit.coords = coords_in_basis(a.unit());
    CMatrix embedding(rank, d);
    for (long r = 0; r < rank; ++r)
        for (long j = 0; j < d; ++j) embedding.at(r, j) = basis.at(r, j);
    auto sub = std::make_shared<Algebra>(rank, std::move(s), std::move(sub_unit));
    return {sub, embedding};
}

std::vector<Element> center(const Algebra& a) {
    const long d = a.dim();
    // Rows: for each basis index i and coordinate k, sum_j x_j (c_{ji}^k - c_{ij}^k) = 0.
    CMatrix sys(d * d, d);
    for (long j = 0; j < d; ++j) {
        Element bj = a.basis_element(j);
        for (long i = 0; i < d; ++i) {
            Element comm = a.multiply(bj, a.basis_element(i)) - a.multiply(a.basis_element(i), bj);
            for (long k = 0; k < d; ++k) sys.at(i * d + k, j) = comm.coords[static_cast<size_t>(k)];
        }
    }
    std::vector<Element> out;
    for (auto& v : kernel_basis(sys)) {
        Element e(d);
        e.coords = std::move(v);
        out.push_back(std::move(e));
    }
    return out;
}

Element element_power(const Algebra& a, const Element& x, long e) {
    if (e < 0) throw std::invalid_argument("element_power: negative exponent");
    Element acc = a.unit();
    Element base = x;
    while (e > 0) {
        if (e & 1) acc = a.multiply(acc, base);
        base = a.multiply(base, base);
        e >>= 1;
    }
    return acc;
}

bool is_nilpotent(const Algebra& a, const Element& x) {
    return element_power(a, x, a.dim()).is_zero();
}

bool is_invertible(const Algebra& a, const Element& x) {
    const long d = a.dim();
    CMatrix lm(d, d);
    for (long j = 0; j < d; ++j) {
        Element col = a.multiply(x, a.basis_element(j));
        for (long i = 0; i < d; ++i) lm.at(i, j) = col.coords[static_cast<size_t>(i)];
    }
    return rref_in_place(lm) == d;
}

}  // namespace qcreg
