#include "qcreg/gradedgroup.hpp"

#include <algorithm>
#include <sstream>

namespace qcreg {

namespace {

// Columns = decomposition basis vectors, so solving against it converts
// algebra coordinates to decomposition coordinates.
CMatrix basis_columns(const Decomposition& d) {
    const long dim = d.algebra->dim();
    CMatrix bt(dim, dim);
    long c = 0;
    for (const auto& comp : d.components)
        for (const auto& v : comp) {
            for (long r = 0; r < dim; ++r) bt.at(r, c) = v.coords[static_cast<size_t>(r)];
            ++c;
        }
    return bt;
}

std::vector<long> component_of_column(const Decomposition& d) {
    std::vector<long> owner;
    for (size_t i = 0; i < d.components.size(); ++i)
        for (size_t k = 0; k < d.components[i].size(); ++k) owner.push_back(static_cast<long>(i));
    return owner;
}

}  // namespace

GroupReconstruction reconstruct_group(const Decomposition& d, const ThetaTable& t,
                                      const RegularityWitness& w) {
    GroupReconstruction out;
    const long m = t.m;
    if (w.status != RegularityWitness::Status::found) {
        out.failure = GroupReconstruction::Failure::Precondition;
        out.message = "witness not found";
        return out;
    }
    for (const auto& comp : d.components)
        if (comp.size() != 1) {
            out.failure = GroupReconstruction::Failure::Precondition;
            out.message = "all components must be one-dimensional";
            return out;
        }
    MinimalityResult min = is_minimal(t);
    if (!min.minimal) {
        out.failure = GroupReconstruction::Failure::Precondition;
        std::ostringstream msg;
        msg << "table is not minimal: rows " << min.duplicate_rows->first << " and "
            << min.duplicate_rows->second << " coincide";
        out.message = msg.str();
        return out;
    }
    CMatrix bt = basis_columns(d);
    auto coords_of = [&](const Element& v) { return solve_unique(bt, v.coords); };

    CayleyTable g;
    g.m = m;
    g.table.assign(static_cast<size_t>(m), std::vector<long>(static_cast<size_t>(m), -1));
    for (long j = 0; j < m; ++j)
        for (long k = 0; k < m; ++k) {
            Element p = d.algebra->multiply(w.elements[static_cast<size_t>(j)],
                                            w.elements[static_cast<size_t>(k)]);
            auto c = coords_of(p);
            if (!c) {
                out.failure = GroupReconstruction::Failure::NotAGroup;
                out.message = "product does not lie in the decomposition span";
                return out;
            }
            std::vector<long> support;
            for (long s = 0; s < m; ++s)
                if (!(*c)[static_cast<size_t>(s)].is_zero()) support.push_back(s);
            if (support.size() != 1) {
                out.failure = GroupReconstruction::Failure::MultiComponentProduct;
                out.j = j;
                out.k = k;
                out.support = support;
                std::ostringstream msg;
                msg << "product of witness components " << j << " and " << k << " hits "
                    << support.size() << " components";
                out.message = msg.str();
                return out;
            }
            g.table[static_cast<size_t>(j)][static_cast<size_t>(k)] = support[0];
        }
    auto uc = coords_of(d.algebra->unit());
    if (!uc) {
        out.failure = GroupReconstruction::Failure::NotAGroup;
        out.message = "unit does not lie in the decomposition span";
        return out;
    }
    long e = -1;
    for (long s = 0; s < m; ++s)
        if (!(*uc)[static_cast<size_t>(s)].is_zero()) {
            if (e >= 0) {
                out.failure = GroupReconstruction::Failure::NotAGroup;
                out.message = "unit is spread over several components";
                return out;
            }
            e = s;
        }
    g.identity = e;
    if (auto err = g.validate()) {
        out.failure = GroupReconstruction::Failure::NotAGroup;
        out.message = "reconstructed table is not a group: " + *err;
        return out;
    }
    if (!g.is_abelian()) {
        out.failure = GroupReconstruction::Failure::NotAGroup;
        out.message = "reconstructed group is not abelian";
        return out;
    }
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j)
            for (long k = 0; k < m; ++k)
                if (t.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                        t.entries[static_cast<size_t>(i)][static_cast<size_t>(k)] !=
                    t.entries[static_cast<size_t>(i)][static_cast<size_t>(g.mul(j, k))]) {
                    out.failure = GroupReconstruction::Failure::NotAGroup;
                    std::ostringstream msg;
                    msg << "table is not multiplicative against the product at (" << i << "," << j
                        << "," << k << ")";
                    out.message = msg.str();
                    return out;
                }
    out.group = std::move(g);
    return out;
}

SetGradingResult set_grading_detect(const Decomposition& d) {
    SetGradingResult out;
    const long m = static_cast<long>(d.components.size());
    CMatrix bt = basis_columns(d);
    std::vector<long> owner = component_of_column(d);
    out.f.assign(static_cast<size_t>(m), std::vector<long>(static_cast<size_t>(m), -1));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            std::vector<long> hit;
            for (const auto& a : d.components[static_cast<size_t>(i)])
                for (const auto& b : d.components[static_cast<size_t>(j)]) {
                    Element p = d.algebra->multiply(a, b);
                    if (p.is_zero()) continue;
                    auto c = solve_unique(bt, p.coords);
                    if (!c) {
                        out.i = i;
                        out.j = j;
                        out.message = "product escapes the decomposition span";
                        return out;
                    }
                    for (size_t col = 0; col < c->size(); ++col)
                        if (!(*c)[col].is_zero()) {
                            long s = owner[col];
                            bool known = false;
                            for (long h : hit)
                                if (h == s) known = true;
                            if (!known) hit.push_back(s);
                        }
                }
            if (hit.empty()) continue;  // R_i R_j = 0, entry stays undefined
            if (hit.size() > 1) {
                out.i = i;
                out.j = j;
                std::sort(hit.begin(), hit.end());
                out.components_hit = hit;
                std::ostringstream msg;
                msg << "products of components " << i << " and " << j << " land in "
                    << hit.size() << " components";
                out.message = msg.str();
                return out;
            }
            out.f[static_cast<size_t>(i)][static_cast<size_t>(j)] = hit[0];
        }
    out.ok = true;
    return out;
}

RealizabilityReport realizability_check(const std::vector<std::vector<long>>& f, long m) {
    RealizabilityReport out;
    auto defined = [&](long i, long j) { return f[static_cast<size_t>(i)][static_cast<size_t>(j)] >= 0; };
    auto at = [&](long i, long j) { return f[static_cast<size_t>(i)][static_cast<size_t>(j)]; };
    // right and left cancellation on defined entries
    for (long k = 0; k < m; ++k)
        for (long i = 0; i < m; ++i)
            for (long j = i + 1; j < m; ++j) {
                if (defined(i, k) && defined(j, k) && at(i, k) == at(j, k)) {
                    std::ostringstream msg;
                    msg << "right cancellation fails: f(" << i << "," << k << ") = f(" << j << ","
                        << k << ") = " << at(i, k);
                    out.message = msg.str();
                    return out;
                }
                if (defined(k, i) && defined(k, j) && at(k, i) == at(k, j)) {
                    std::ostringstream msg;
                    msg << "left cancellation fails: f(" << k << "," << i << ") = f(" << k << ","
                        << j << ") = " << at(k, i);
                    out.message = msg.str();
                    return out;
                }
            }
    // associativity where all intermediate entries are defined
    bool total = true;
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            if (!defined(i, j)) total = false;
            for (long k = 0; k < m; ++k) {
                if (!defined(i, j) || !defined(j, k)) continue;
                if (!defined(at(i, j), k) || !defined(i, at(j, k))) continue;
                if (at(at(i, j), k) != at(i, at(j, k))) {
                    std::ostringstream msg;
                    msg << "associativity fails at (" << i << "," << j << "," << k << ")";
                    out.message = msg.str();
                    return out;
                }
            }
        }
    if (!total) {
        out.verdict = RealizabilityReport::Verdict::necessary_conditions_hold;
        out.message = "partial table passes cancellation and associativity";
        return out;
    }
    CayleyTable g;
    g.m = m;
    g.table = f;
    g.identity = -1;
    for (long e = 0; e < m; ++e) {
        bool id = true;
        for (long i = 0; i < m; ++i)
            if (at(e, i) != i || at(i, e) != i) { id = false; break; }
        if (id) { g.identity = e; break; }
    }
    if (g.identity < 0) {
        out.message = "total table has no two-sided identity";
        return out;
    }
    if (auto err = g.validate()) {
        out.message = "total table is not a group: " + *err;
        return out;
    }
    out.verdict = RealizabilityReport::Verdict::realizable;
    out.message = "total table is a group";
    out.group = std::move(g);
    return out;
}

std::pair<long, long> ray_class_center_dims(const Cocycle& a) {
    long classes = static_cast<long>(ray_classes(a).size());
    AlgebraPtr alg = twisted_group_algebra(a.group, a);
    long dim = static_cast<long>(center(*alg).size());
    return {classes, dim};
}

}  // namespace qcreg
