#include "qcreg/decomp.hpp"

#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace qcreg {

bool check_direct_sum(const Decomposition& d) {
    if (!d.algebra || d.components.empty()) return false;
    const long dim = d.algebra->dim();
    long total = 0;
    for (const auto& comp : d.components) {
        if (comp.empty()) return false;
        bool nonzero = false;
        for (const auto& v : comp) {
            if (static_cast<long>(v.coords.size()) != dim) return false;
            if (!v.is_zero()) nonzero = true;
        }
        if (!nonzero) return false;
        total += static_cast<long>(comp.size());
    }
    if (total != dim) return false;
    CMatrix stacked(total, dim);
    long r = 0;
    for (const auto& comp : d.components)
        for (const auto& v : comp) {
            for (long j = 0; j < dim; ++j) stacked.at(r, j) = v.coords[static_cast<size_t>(j)];
            ++r;
        }
    return rref_in_place(stacked) == dim;
}

bool ThetaTable::all_constrained() const {
    for (const auto& row : constrained)
        for (bool c : row)
            if (!c) return false;
    return true;
}

DetectResult detect_theta(const Decomposition& d) {
    const long m = static_cast<long>(d.components.size());
    ThetaTable t;
    t.m = m;
    t.entries.assign(static_cast<size_t>(m),
                     std::vector<Cyclotomic>(static_cast<size_t>(m), Cyclotomic(1)));
    t.constrained.assign(static_cast<size_t>(m), std::vector<bool>(static_cast<size_t>(m), false));
    const Algebra& alg = *d.algebra;
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            const auto& ci = d.components[static_cast<size_t>(i)];
            const auto& cj = d.components[static_cast<size_t>(j)];
            bool have = false;
            Cyclotomic theta;
            for (long a = 0; a < static_cast<long>(ci.size()); ++a)
                for (long b = 0; b < static_cast<long>(cj.size()); ++b) {
                    Element ab = alg.multiply(ci[static_cast<size_t>(a)], cj[static_cast<size_t>(b)]);
                    Element ba = alg.multiply(cj[static_cast<size_t>(b)], ci[static_cast<size_t>(a)]);
                    bool abz = ab.is_zero(), baz = ba.is_zero();
                    if (abz && baz) continue;
                    if (abz != baz) {
                        std::ostringstream msg;
                        msg << "one-sided zero between components " << i << " and " << j
                            << " at basis pair (" << a << "," << b << ")";
                        return {std::nullopt,
                                ThetaFailure{ThetaFailure::Kind::OneSidedZero, i, j, a, b, msg.str()}};
                    }
                    // candidate scalar from the first nonzero coordinate of ba
                    Cyclotomic cand;
                    for (size_t k = 0; k < ba.coords.size(); ++k)
                        if (!ba.coords[k].is_zero()) {
                            cand = ab.coords[k] * ba.coords[k].inverse();
                            break;
                        }
                    if (!(ab == ba.scaled(cand))) {
                        std::ostringstream msg;
                        msg << "product not a scalar multiple of the reversed product at components ("
                            << i << "," << j << "), basis pair (" << a << "," << b << ")";
                        return {std::nullopt,
                                ThetaFailure{ThetaFailure::Kind::NotScalarMultiple, i, j, a, b, msg.str()}};
                    }
                    if (have && cand != theta) {
                        std::ostringstream msg;
                        msg << "basis pairs force different scalars at components (" << i << "," << j
                            << "); second pair (" << a << "," << b << ")";
                        return {std::nullopt,
                                ThetaFailure{ThetaFailure::Kind::InconsistentScalar, i, j, a, b, msg.str()}};
                    }
                    theta = cand;
                    have = true;
                }
            if (have) {
                t.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = theta;
                t.constrained[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
            }
        }
    return {std::move(t), std::nullopt};
}

QcRelationsReport qc_relations_check(const ThetaTable& t) {
    QcRelationsReport r;
    for (long i = 0; i < t.m; ++i) {
        if (t.constrained[static_cast<size_t>(i)][static_cast<size_t>(i)]) {
            const Cyclotomic& d = t.entries[static_cast<size_t>(i)][static_cast<size_t>(i)];
            if (d * d != Cyclotomic(1)) {
                r.relations_ok = false;
                r.violations.emplace_back(i, i);
            }
            if (d != Cyclotomic(1)) {
                r.diagonal_all_one = false;
                r.diagonal_not_one.push_back(i);
            }
        }
        for (long j = i + 1; j < t.m; ++j) {
            if (!t.constrained[static_cast<size_t>(i)][static_cast<size_t>(j)] ||
                !t.constrained[static_cast<size_t>(j)][static_cast<size_t>(i)])
                continue;
            if (t.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                    t.entries[static_cast<size_t>(j)][static_cast<size_t>(i)] !=
                Cyclotomic(1)) {
                r.relations_ok = false;
                r.violations.emplace_back(i, j);
            }
        }
    }
    return r;
}

namespace {

// Multivariate polynomial over the coefficient field: exponent vector -> coefficient.
using Monomial = std::vector<unsigned char>;
using Poly = std::map<Monomial, Cyclotomic>;
using PolyElement = std::vector<Poly>;  // one polynomial per algebra coordinate

void poly_add_term(Poly& p, const Monomial& mono, const Cyclotomic& c) {
    auto it = p.find(mono);
    if (it == p.end()) {
        if (!c.is_zero()) p.emplace(mono, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
}

PolyElement poly_multiply(const Algebra& alg, const PolyElement& x, const PolyElement& y) {
    const long d = alg.dim();
    PolyElement r(static_cast<size_t>(d));
    for (long i = 0; i < d; ++i) {
        if (x[static_cast<size_t>(i)].empty()) continue;
        for (long j = 0; j < d; ++j) {
            if (y[static_cast<size_t>(j)].empty()) continue;
            auto it = alg.structure().find({i, j});
            if (it == alg.structure().end()) continue;
            for (const auto& [mx, cx] : x[static_cast<size_t>(i)])
                for (const auto& [my, cy] : y[static_cast<size_t>(j)]) {
                    Monomial mono(mx.size());
                    for (size_t v = 0; v < mx.size(); ++v)
                        mono[v] = static_cast<unsigned char>(mx[v] + my[v]);
                    Cyclotomic c = cx * cy;
                    for (const auto& [k, sc] : it->second)
                        poly_add_term(r[static_cast<size_t>(k)], mono, c * sc);
                }
        }
    }
    return r;
}

bool poly_element_zero(const PolyElement& x) {
    for (const auto& p : x)
        if (!p.empty()) return false;
    return true;
}

}  // namespace

RegularityWitness find_witness(const Decomposition& d, const ThetaTable& t,
                               long budget, unsigned long seed, bool definitive) {
    (void)t;  // the table is part of the contract; the search needs only the products
    const Algebra& alg = *d.algebra;
    const long dim = alg.dim();
    const long m = static_cast<long>(d.components.size());

    auto try_tuple = [&](const std::vector<Element>& ws) -> std::optional<RegularityWitness> {
        Element prod = ws[0];
        for (long i = 1; i < m; ++i) prod = alg.multiply(prod, ws[static_cast<size_t>(i)]);
        if (prod.is_zero() || is_nilpotent(alg, prod)) return std::nullopt;
        RegularityWitness w;
        w.status = RegularityWitness::Status::found;
        w.elements = ws;
        w.product = std::move(prod);
        return w;
    };

    for (long attempt = 0; attempt < budget; ++attempt) {
        std::mt19937_64 rng(seed + static_cast<unsigned long>(attempt));
        std::uniform_int_distribution<int> coord(-3, 3);
        std::vector<Element> ws;
        ws.reserve(static_cast<size_t>(m));
        for (const auto& comp : d.components) {
            Element w(dim);
            for (const auto& v : comp) w = w + v.scaled(Cyclotomic(coord(rng)));
            ws.push_back(std::move(w));
        }
        if (auto found = try_tuple(ws)) return *found;
    }

    if (!definitive) {
        RegularityWitness w;
        w.status = RegularityWitness::Status::inconclusive;
        w.note = "random search exhausted the attempt budget";
        return w;
    }

    long nvars = 0;
    for (const auto& comp : d.components) nvars += static_cast<long>(comp.size());
    if (nvars > 16) {
        RegularityWitness w;
        w.status = RegularityWitness::Status::inconclusive;
        w.note = "symbolic phase skipped: more than 16 indeterminates";
        return w;
    }

    // Generic elements: one indeterminate per basis vector across all components.
    std::vector<PolyElement> generic;
    long var = 0;
    for (const auto& comp : d.components) {
        PolyElement g(static_cast<size_t>(dim));
        for (const auto& v : comp) {
            Monomial mono(static_cast<size_t>(nvars), 0);
            mono[static_cast<size_t>(var)] = 1;
            for (long k = 0; k < dim; ++k)
                poly_add_term(g[static_cast<size_t>(k)], mono, v.coords[static_cast<size_t>(k)]);
            ++var;
        }
        generic.push_back(std::move(g));
    }
    PolyElement prod = generic[0];
    for (long i = 1; i < m; ++i) prod = poly_multiply(alg, prod, generic[static_cast<size_t>(i)]);
    PolyElement pw = prod;
    bool vanished = poly_element_zero(pw);
    for (long e = 2; e <= dim && !vanished; ++e) {
        pw = poly_multiply(alg, pw, prod);
        vanished = poly_element_zero(pw);
    }
    if (vanished) {
        RegularityWitness w;
        w.status = RegularityWitness::Status::refuted;
        w.note = "generic product is nilpotent identically in the coefficients";
        return w;
    }
    // The generic power is a nonzero polynomial, so specializations with a
    // non-nilpotent product are dense; sample until one is hit.
    std::mt19937_64 rng(seed);
    for (long attempt = 0; attempt < 1000; ++attempt) {
        int range = 3 + static_cast<int>(attempt / 50);
        std::uniform_int_distribution<int> coord(-range, range);
        std::vector<Element> ws;
        ws.reserve(static_cast<size_t>(m));
        for (const auto& comp : d.components) {
            Element w(dim);
            for (const auto& v : comp) w = w + v.scaled(Cyclotomic(coord(rng)));
            ws.push_back(std::move(w));
        }
        if (auto found = try_tuple(ws)) return *found;
    }
    RegularityWitness w;
    w.status = RegularityWitness::Status::inconclusive;
    w.note = "generic product is non-nilpotent but no specialization was sampled";
    return w;
}

MinimalityResult is_minimal(const ThetaTable& t) {
    if (!t.all_constrained())
        throw UnconstrainedEntries("is_minimal: table has unconstrained entries");
    for (long i = 0; i < t.m; ++i)
        for (long j = i + 1; j < t.m; ++j)
            if (t.entries[static_cast<size_t>(i)] == t.entries[static_cast<size_t>(j)])
                return {false, std::make_pair(i, j)};
    return {true, std::nullopt};
}

Cyclotomic det_exact(const CMatrix& m) { return det_bareiss(m); }

namespace {

CMatrix theta_matrix(const ThetaTable& t) {
    CMatrix m(t.m, t.m);
    for (long i = 0; i < t.m; ++i)
        for (long j = 0; j < t.m; ++j) m.at(i, j) = t.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

}  // namespace

DetCriterionReport bahturin_regev_check(const ThetaTable& t) {
    if (!t.all_constrained())
        throw UnconstrainedEntries("bahturin_regev_check: table has unconstrained entries");
    DetCriterionReport r;
    r.det = det_exact(theta_matrix(t));
    r.det_squared_matches = (r.det * r.det == Cyclotomic(t.m).pow(t.m));
    r.minimal = is_minimal(t).minimal;
    r.equivalence_holds = (r.det_squared_matches == r.minimal);
    return r;
}

bool msquared_check(const ThetaTable& t) {
    if (!t.all_constrained())
        throw UnconstrainedEntries("msquared_check: table has unconstrained entries");
    CMatrix m = theta_matrix(t);
    CMatrix sq = mat_mul(m, m);
    CMatrix want = CMatrix::identity(t.m);
    for (long i = 0; i < t.m; ++i) want.at(i, i) = Cyclotomic(t.m);
    return mat_equal(sq, want);
}

RootOrderReport root_order_check(const ThetaTable& t, long bound) {
    RootOrderReport r;
    for (long i = 0; i < t.m; ++i)
        for (long j = 0; j < t.m; ++j) {
            if (!t.constrained[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
            auto ord = t.entries[static_cast<size_t>(i)][static_cast<size_t>(j)].order_of_unity();
            if (!ord || bound % *ord != 0) {
                r.pass = false;
                r.violations.emplace_back(i, j, ord.value_or(-1));
            }
        }
    return r;
}

NecessaryConditionReport necessary_condition_check(const std::vector<long>& sizes, long m) {
    NecessaryConditionReport r;
    for (long q : sizes)
        if (q < 1) throw std::invalid_argument("necessary_condition_check: sizes must be >= 1");
    long ql = 1;
    for (long q : sizes) ql = std::max(ql, q);
    if (ql * ql > m) {
        r.pass = false;
        std::ostringstream msg;
        msg << "largest component size " << ql << " exceeds the square root of " << m;
        r.message = msg.str();
        return r;
    }
    for (long q : sizes) {
        if (q <= 1 || q >= ql) continue;
        if (std::gcd(q, ql) == 1) {
            r.pass = false;
            r.violating_pair = {q, ql};
            std::ostringstream msg;
            msg << "component sizes " << q << " and " << ql << " are coprime";
            r.message = msg.str();
            return r;
        }
    }
    r.caution = true;
    r.message = "size constraints hold; they are necessary but not sufficient";
    return r;
}

}  // namespace qcreg
