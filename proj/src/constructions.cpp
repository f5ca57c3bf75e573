#include "qcreg/constructions.hpp"

#include <sstream>
#include <stdexcept>

namespace qcreg {

Element clock_shift_monomial(long n, long i, long j) {
    Element e(n * n);
    i = ((i % n) + n) % n;
    j = ((j % n) + n) % n;
    for (long a = 0; a < n; ++a) {
        long b = (a + j) % n;
        e.coords[static_cast<size_t>(a * n + b)] = Cyclotomic::root(n, i * a);
    }
    return e;
}

ThetaTable clock_shift_table(long n) {
    ThetaTable t;
    t.m = n * n;
    t.entries.assign(static_cast<size_t>(t.m), std::vector<Cyclotomic>(static_cast<size_t>(t.m)));
    t.constrained.assign(static_cast<size_t>(t.m), std::vector<bool>(static_cast<size_t>(t.m), true));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k)
                for (long l = 0; l < n; ++l)
                    t.entries[static_cast<size_t>(i * n + j)][static_cast<size_t>(k * n + l)] =
                        Cyclotomic::root(n, j * k - i * l);
    return t;
}

NamedConstruction pauli_decomposition(long n) {
    if (n < 1) throw std::invalid_argument("pauli_decomposition: n must be positive");
    NamedConstruction c;
    std::ostringstream name;
    name << "pauli(" << n << ")";
    c.name = name.str();
    c.algebra = matrix_algebra(n);
    c.decomposition.algebra = c.algebra;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            c.decomposition.components.push_back({clock_shift_monomial(n, i, j)});
    c.expected_theta = clock_shift_table(n);
    c.expected_group = (n == 1) ? AbelianType{{1}} : AbelianType{{n, n}};
    return c;
}

namespace {

// Element of a direct sum from a summand element placed at a coordinate offset.
Element embed(long total_dim, long offset, const Element& v) {
    Element e(total_dim);
    for (size_t i = 0; i < v.coords.size(); ++i) e.coords[static_cast<size_t>(offset) + i] = v.coords[i];
    return e;
}

Element tensor_element(const Element& u, const Element& v) {
    const long db = static_cast<long>(v.coords.size());
    Element w(static_cast<long>(u.coords.size()) * db);
    for (size_t a = 0; a < u.coords.size(); ++a) {
        if (u.coords[a].is_zero()) continue;
        for (size_t b = 0; b < v.coords.size(); ++b)
            w.coords[a * static_cast<size_t>(db) + b] = u.coords[a] * v.coords[b];
    }
    return w;
}

ThetaTable kron_table(const ThetaTable& a, const ThetaTable& b) {
    ThetaTable t;
    t.m = a.m * b.m;
    t.entries.assign(static_cast<size_t>(t.m), std::vector<Cyclotomic>(static_cast<size_t>(t.m)));
    t.constrained.assign(static_cast<size_t>(t.m), std::vector<bool>(static_cast<size_t>(t.m), true));
    for (long i = 0; i < a.m; ++i)
        for (long j = 0; j < b.m; ++j)
            for (long k = 0; k < a.m; ++k)
                for (long l = 0; l < b.m; ++l)
                    t.entries[static_cast<size_t>(i * b.m + j)][static_cast<size_t>(k * b.m + l)] =
                        a.entries[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                        b.entries[static_cast<size_t>(j)][static_cast<size_t>(l)];
    return t;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

NamedConstruction example_6_1() {
    NamedConstruction c;
    c.name = "example-6-1";
    AlgebraPtr m2 = matrix_algebra(2);
    AlgebraPtr m4 = matrix_algebra(4);
    c.algebra = direct_sum(*m2, *m4);
    c.decomposition.algebra = c.algebra;
    const long total = c.algebra->dim();  // 20; M2 coords at offset 0, M4 at offset 4
    for (long k = 0; k < 4; ++k)
        for (long l = 0; l < 4; ++l) {
            std::vector<Element> comp;
            bool doubled = (k % 2 == 0) && (l == 0 || l == 1) && (k == 0 || k == 2);
            if (doubled)
                comp.push_back(embed(total, 0, clock_shift_monomial(2, k / 2, l)));
            comp.push_back(embed(total, 4, clock_shift_monomial(4, k, l)));
            c.decomposition.components.push_back(std::move(comp));
        }
    c.expected_theta = clock_shift_table(4);
    return c;
}

NamedConstruction example_6_2() {
    AlgebraPtr m6 = matrix_algebra(6);
    auto mat = [&](std::initializer_list<std::pair<std::pair<long, long>, long>> entries) {
        Element e(36);
        for (const auto& [pos, v] : entries)
            e.coords[static_cast<size_t>(pos.first * 6 + pos.second)] = Cyclotomic(v);
        return e;
    };
    // L alternates signs on the diagonal; J swaps the last two coordinates.
    Element L = mat({{{0, 0}, 1}, {{1, 1}, -1}, {{2, 2}, 1}, {{3, 3}, -1}, {{4, 4}, 1}, {{5, 5}, -1}});
    Element J = mat({{{4, 5}, 1}, {{5, 4}, 1}});
    auto [sub, embedding] = subalgebra_closure(*m6, {L, J});
    if (sub->dim() != 6) throw std::logic_error("example_6_2: closure dimension unexpected");
    // convert a 6x6 matrix into subalgebra coordinates
    CMatrix bt(36, 6);
    for (long r = 0; r < 6; ++r)
        for (long j = 0; j < 36; ++j) bt.at(j, r) = embedding.at(r, j);
    auto in_sub = [&](const Element& v) {
        auto x = solve_unique(bt, v.coords);
        if (!x) throw std::logic_error("example_6_2: element outside the closure");
        Element e(6);
        e.coords = *x;
        return e;
    };
    Element J2 = m6->multiply(J, J);
    Element LJ = m6->multiply(L, J);
    Element LJ2 = m6->multiply(L, J2);
    Element I6 = m6->unit();

    NamedConstruction c;
    c.name = "example-6-2";
    c.algebra = sub;
    c.decomposition.algebra = sub;
    for (const Element* v : {&I6, &J2, &LJ, &LJ2, &J, &L})
        c.decomposition.components.push_back({in_sub(*v)});
    ThetaTable t;
    t.m = 6;
    const long rows[6][6] = {{1, 1, 1, 1, 1, 1},    {1, 1, 1, 1, 1, 1},
                             {1, 1, 1, -1, -1, -1}, {1, 1, -1, 1, -1, 1},
                             {1, 1, -1, -1, 1, -1}, {1, 1, -1, 1, -1, 1}};
    t.entries.assign(6, std::vector<Cyclotomic>(6));
    t.constrained.assign(6, std::vector<bool>(6, true));
    for (long i = 0; i < 6; ++i)
        for (long j = 0; j < 6; ++j) t.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = Cyclotomic(rows[i][j]);
    c.expected_theta = std::move(t);
    return c;
}

namespace {

// K + M_q with the q^2 clock/shift components; the scalar summand joins the
// identity component. Components are returned in row-major (k,l) order.
std::pair<AlgebraPtr, std::vector<std::vector<Element>>> scalar_plus_matrix(long q) {
    AlgebraPtr k1 = matrix_algebra(1);
    AlgebraPtr mq = matrix_algebra(q);
    AlgebraPtr alg = direct_sum(*k1, *mq);
    const long total = alg->dim();
    std::vector<std::vector<Element>> comps;
    for (long k = 0; k < q; ++k)
        for (long l = 0; l < q; ++l) {
            std::vector<Element> comp;
            if (k == 0 && l == 0) comp.push_back(alg->basis_element(0));  // the scalar summand
            comp.push_back(embed(total, 1, clock_shift_monomial(q, k, l)));
            comps.push_back(std::move(comp));
        }
    return {alg, comps};
}

// Tensor of a decomposition of A with a decomposition of B, components
// ordered with the A-index major.
std::pair<AlgebraPtr, std::vector<std::vector<Element>>> tensor_decomposition(
    const AlgebraPtr& a, const std::vector<std::vector<Element>>& ca,
    const AlgebraPtr& b, const std::vector<std::vector<Element>>& cb) {
    AlgebraPtr alg = tensor_product(*a, *b);
    std::vector<std::vector<Element>> comps;
    for (const auto& compA : ca)
        for (const auto& compB : cb) {
            std::vector<Element> comp;
            for (const auto& u : compA)
                for (const auto& v : compB) comp.push_back(tensor_element(u, v));
            comps.push_back(std::move(comp));
        }
    return {alg, comps};
}

}  // namespace

NamedConstruction kronecker_divisor_grading(long n1, long n2) {
    if (n1 < 1 || n2 < 1 || n2 % n1 != 0)
        throw std::invalid_argument("kronecker_divisor_grading: n1 must divide n2");
    const long q = n2 / n1;
    NamedConstruction pauli = pauli_decomposition(n1);
    auto [kb, kb_comps] = scalar_plus_matrix(q);
    auto [alg, comps] = tensor_decomposition(pauli.algebra, pauli.decomposition.components, kb, kb_comps);
    NamedConstruction c;
    std::ostringstream name;
    name << "kronecker(" << n1 << "," << n2 << ")";
    c.name = name.str();
    c.algebra = alg;
    c.decomposition.algebra = alg;
    c.decomposition.components = std::move(comps);
    c.expected_theta = kron_table(clock_shift_table(n1), clock_shift_table(q));
    if (n1 * n1 * q * q <= 64) c.expected_group = classify_abelian(abelian_group({n1, n1, q, q}));
    return c;
}

NamedConstruction p_power_sum_grading(long p, const std::vector<long>& exponents) {
    if (!is_prime(p)) throw std::invalid_argument("p_power_sum_grading: p must be prime");
    if (exponents.empty()) throw std::invalid_argument("p_power_sum_grading: need at least one exponent");
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0) throw std::invalid_argument("p_power_sum_grading: exponents must be >= 0");
        if (i > 0 && exponents[i] < exponents[i - 1])
            throw std::invalid_argument("p_power_sum_grading: exponents must be nondecreasing");
    }
    long n1 = 1;
    for (long e = 0; e < exponents[0]; ++e) n1 *= p;
    if (exponents.size() == 1) {
        NamedConstruction c = pauli_decomposition(n1);
        std::ostringstream name;
        name << "p-power(" << p << ";" << exponents[0] << ")";
        c.name = name.str();
        return c;
    }
    std::vector<long> rest;
    for (size_t i = 1; i < exponents.size(); ++i) rest.push_back(exponents[i] - exponents[0]);
    NamedConstruction inner = p_power_sum_grading(p, rest);
    // wrap the inner algebra as K + inner, scalar absorbed into component 0
    AlgebraPtr k1 = matrix_algebra(1);
    AlgebraPtr kb = direct_sum(*k1, *inner.algebra);
    std::vector<std::vector<Element>> kb_comps;
    for (size_t t = 0; t < inner.decomposition.components.size(); ++t) {
        std::vector<Element> comp;
        if (t == 0) comp.push_back(kb->basis_element(0));
        for (const auto& v : inner.decomposition.components[t]) comp.push_back(embed(kb->dim(), 1, v));
        kb_comps.push_back(std::move(comp));
    }
    NamedConstruction pauli = pauli_decomposition(n1);
    auto [alg, comps] = tensor_decomposition(pauli.algebra, pauli.decomposition.components, kb, kb_comps);
    NamedConstruction c;
    std::ostringstream name;
    name << "p-power(" << p << ";";
    for (size_t i = 0; i < exponents.size(); ++i) name << (i ? "," : "") << exponents[i];
    name << ")";
    c.name = name.str();
    c.algebra = alg;
    c.decomposition.algebra = alg;
    c.decomposition.components = std::move(comps);
    if (inner.expected_theta)
        c.expected_theta = kron_table(clock_shift_table(n1), *inner.expected_theta);
    return c;
}

NamedConstruction grassmann_z2_decomposition(long k) {
    if (k < 1) throw std::invalid_argument("grassmann_z2_decomposition: k must be positive");
    NamedConstruction c;
    std::ostringstream name;
    name << "grassmann-z2(" << k << ")";
    c.name = name.str();
    c.algebra = grassmann_truncated(k);
    c.decomposition.algebra = c.algebra;
    std::vector<Element> even, odd;
    for (long mask = 0; mask < c.algebra->dim(); ++mask) {
        long bits = 0;
        for (long b = 0; b < k; ++b) bits += (mask >> b) & 1;
        (bits % 2 == 0 ? even : odd).push_back(c.algebra->basis_element(mask));
    }
    c.decomposition.components = {std::move(even), std::move(odd)};
    ThetaTable t;
    t.m = 2;
    t.entries = {{Cyclotomic(1), Cyclotomic(1)}, {Cyclotomic(1), Cyclotomic(-1)}};
    t.constrained = {{true, true}, {true, true}};
    c.expected_theta = std::move(t);
    return c;
}

std::vector<std::string> construction_names() {
    return {"pauli", "example-6-1", "example-6-2", "kronecker", "p-power", "grassmann-z2"};
}

NamedConstruction make_construction(const std::string& name, const std::vector<long>& args) {
    auto need = [&](size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("construction '" + name + "' expects " + std::to_string(n) +
                                        " numeric argument(s)");
    };
    if (name == "pauli") {
        need(1);
        return pauli_decomposition(args[0]);
    }
    if (name == "example-6-1") {
        need(0);
        return example_6_1();
    }
    if (name == "example-6-2") {
        need(0);
        return example_6_2();
    }
    if (name == "kronecker") {
        need(2);
        return kronecker_divisor_grading(args[0], args[1]);
    }
    if (name == "p-power") {
        if (args.size() < 2) throw std::invalid_argument("p-power expects p followed by exponents");
        return p_power_sum_grading(args[0], std::vector<long>(args.begin() + 1, args.end()));
    }
    if (name == "grassmann-z2") {
        need(1);
        return grassmann_z2_decomposition(args[0]);
    }
    throw std::invalid_argument("unknown construction '" + name + "'");
}

}  // namespace qcreg
