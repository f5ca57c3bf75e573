#include "qcreg/identities.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qcreg {

Cyclotomic lambda_coefficient(const ThetaTable& t, const std::vector<long>& tuple,
                              const std::vector<long>& sigma) {
    const size_t n = sigma.size();
    if (tuple.size() != n) throw std::invalid_argument("lambda_coefficient: length mismatch");
    Cyclotomic r(1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (sigma[i] > sigma[j])
                r *= t.entries[static_cast<size_t>(tuple[static_cast<size_t>(sigma[i])])]
                              [static_cast<size_t>(tuple[static_cast<size_t>(sigma[j])])];
    return r;
}

std::optional<MultilinearPoly> find_identity(const ThetaTable& t, long n, bool allow_large) {
    if (n < 1) throw std::invalid_argument("find_identity: degree must be positive");
    if (n > 6 && !allow_large)
        throw std::invalid_argument("find_identity: degree above 6 requires the large flag");
    std::vector<std::vector<long>> perms;
    std::vector<long> p(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    long rows = 1;
    for (long i = 0; i < n; ++i) rows *= t.m;
    CMatrix sys(rows, static_cast<long>(perms.size()));
    std::vector<long> tuple(static_cast<size_t>(n), 0);
    for (long r = 0; r < rows; ++r) {
        long rem = r;
        for (long i = n - 1; i >= 0; --i) {
            tuple[static_cast<size_t>(i)] = rem % t.m;
            rem /= t.m;
        }
        for (size_t c = 0; c < perms.size(); ++c)
            sys.at(r, static_cast<long>(c)) = lambda_coefficient(t, tuple, perms[c]);
    }
    auto kernel = kernel_basis(sys);
    if (kernel.empty()) return std::nullopt;
    MultilinearPoly out;
    out.degree = n;
    for (size_t c = 0; c < perms.size(); ++c)
        if (!kernel[0][c].is_zero()) out.terms[perms[c]] = kernel[0][c];
    return out;
}

namespace {

Element evaluate_poly(const MultilinearPoly& p, const Algebra& alg,
                      const std::vector<Element>& args) {
    Element r(alg.dim());
    for (const auto& [perm, coeff] : p.terms) {
        Element prod = args[static_cast<size_t>(perm[0])];
        for (size_t i = 1; i < perm.size(); ++i)
            prod = alg.multiply(prod, args[static_cast<size_t>(perm[i])]);
        r = r + prod.scaled(coeff);
    }
    return r;
}

}  // namespace

IdentityVerification verify_identity(const MultilinearPoly& p, const Decomposition& d,
                                     long trials, unsigned long seed) {
    IdentityVerification out;
    const Algebra& alg = *d.algebra;
    const long n = p.degree;
    const long m = static_cast<long>(d.components.size());

    for (long trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seed + static_cast<unsigned long>(trial));
        std::uniform_int_distribution<long> comp(0, m - 1);
        std::uniform_int_distribution<int> coord(-3, 3);
        std::vector<Element> args;
        std::vector<long> comps;
        for (long i = 0; i < n; ++i) {
            long ci = comp(rng);
            comps.push_back(ci);
            Element w(alg.dim());
            for (const auto& v : d.components[static_cast<size_t>(ci)])
                w = w + v.scaled(Cyclotomic(coord(rng)));
            args.push_back(std::move(w));
        }
        ++out.trials_run;
        if (!evaluate_poly(p, alg, args).is_zero()) {
            out.holds = false;
            out.counterexample_tuple = comps;
            return out;
        }
    }

    long total_basis = 0;
    for (const auto& c : d.components) total_basis += static_cast<long>(c.size());
    if (total_basis <= 8) {
        out.exhaustive = true;
        // flat index -> (component, vector)
        std::vector<std::pair<long, const Element*>> flat;
        for (size_t c = 0; c < d.components.size(); ++c)
            for (const auto& v : d.components[c]) flat.emplace_back(static_cast<long>(c), &v);
        std::vector<long> idx(static_cast<size_t>(n), 0);
        while (true) {
            std::vector<Element> args;
            std::vector<long> comps;
            for (long i = 0; i < n; ++i) {
                args.push_back(*flat[static_cast<size_t>(idx[static_cast<size_t>(i)])].second);
                comps.push_back(flat[static_cast<size_t>(idx[static_cast<size_t>(i)])].first);
            }
            if (!evaluate_poly(p, alg, args).is_zero()) {
                out.holds = false;
                out.counterexample_tuple = comps;
                return out;
            }
            long pos = n - 1;
            while (pos >= 0) {
                if (++idx[static_cast<size_t>(pos)] < total_basis) break;
                idx[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return out;
}

}  // namespace qcreg
