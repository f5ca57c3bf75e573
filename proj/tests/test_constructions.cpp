#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qcreg/constructions.hpp"
#include "qcreg/gradedgroup.hpp"

using namespace qcreg;

namespace {

bool tables_equal(const ThetaTable& a, const ThetaTable& b) {
    if (a.m != b.m) return false;
    for (long i = 0; i < a.m; ++i)
        for (long j = 0; j < a.m; ++j) {
            if (a.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                b.entries[static_cast<size_t>(i)][static_cast<size_t>(j)])
                return false;
            if (a.constrained[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                b.constrained[static_cast<size_t>(i)][static_cast<size_t>(j)])
                return false;
        }
    return true;
}

// Multiset of row-multisets; invariant under simultaneous reordering.
std::vector<std::vector<std::string>> row_fingerprint(const ThetaTable& t) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : t.entries) {
        std::vector<std::string> r;
        for (const auto& c : row) r.push_back(c.to_string());
        std::sort(r.begin(), r.end());
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

}  // namespace

TEST_CASE("expected tables match detection") {
    std::vector<NamedConstruction> cs;
    for (long n : {1, 2, 3, 4}) cs.push_back(pauli_decomposition(n));
    cs.push_back(example_6_1());
    cs.push_back(example_6_2());
    cs.push_back(kronecker_divisor_grading(1, 2));
    cs.push_back(kronecker_divisor_grading(2, 4));
    cs.push_back(p_power_sum_grading(2, {1, 1}));
    cs.push_back(grassmann_z2_decomposition(3));
    for (const auto& c : cs) {
        INFO(c.name);
        REQUIRE(check_direct_sum(c.decomposition));
        DetectResult r = detect_theta(c.decomposition);
        REQUIRE(r.ok());
        REQUIRE(c.expected_theta);
        CHECK(tables_equal(*r.table, *c.expected_theta));
    }
}

TEST_CASE("clock and shift relations") {
    // Q P = zeta P Q, verified inside the algebra
    for (long n : {2, 3, 5}) {
        AlgebraPtr mn = matrix_algebra(n);
        Element p = clock_shift_monomial(n, 1, 0), q = clock_shift_monomial(n, 0, 1);
        CHECK(mn->multiply(q, p) == mn->multiply(p, q).scaled(Cyclotomic::root(n, 1)));
        Element pn = p;
        for (long i = 1; i < n; ++i) pn = mn->multiply(pn, p);
        CHECK(pn == mn->unit());  // P^n = I
    }
    NamedConstruction p1 = pauli_decomposition(1);
    CHECK(p1.decomposition.components.size() == 1);
    CHECK(p1.expected_theta->entries[0][0] == Cyclotomic(1));
}

TEST_CASE("two-summand fixture dimensions") {
    NamedConstruction c = example_6_1();
    CHECK(c.algebra->dim() == 20);
    REQUIRE(c.decomposition.components.size() == 16);
    long twos = 0, ones = 0;
    for (const auto& comp : c.decomposition.components)
        (comp.size() == 2 ? twos : ones) += 1;
    CHECK(twos == 4);
    CHECK(ones == 12);
    // doubled components sit at (0,0), (0,1), (2,0), (2,1) in row-major order
    for (long idx : {0, 1, 8, 9}) CHECK(c.decomposition.components[static_cast<size_t>(idx)].size() == 2);
}

TEST_CASE("six-dimensional subalgebra fixture") {
    AlgebraPtr m6 = matrix_algebra(6);
    Element L(36), J(36);
    for (long i = 0; i < 6; ++i) L.coords[static_cast<size_t>(i * 6 + i)] = Cyclotomic(i % 2 ? -1 : 1);
    J.coords[4 * 6 + 5] = Cyclotomic(1);
    J.coords[5 * 6 + 4] = Cyclotomic(1);
    CHECK(m6->multiply(L, L) == m6->unit());
    CHECK(m6->multiply(L, J) == m6->multiply(J, L).scaled(Cyclotomic(-1)));
    auto [sub, emb] = subalgebra_closure(*m6, {L, J});
    CHECK(sub->dim() == 6);
    CHECK(center(*sub).size() == 3);

    NamedConstruction c = example_6_2();
    CHECK(c.algebra->dim() == 6);
    CHECK(c.decomposition.components.size() == 6);
}

TEST_CASE("divisor tensor grading") {
    NamedConstruction c = kronecker_divisor_grading(2, 4);
    CHECK(c.algebra->dim() == 20);
    CHECK(c.decomposition.components.size() == 16);
    CHECK(tables_equal(*c.expected_theta,
                       [] {
                           ThetaTable a = clock_shift_table(2);
                           ThetaTable b = clock_shift_table(2);
                           ThetaTable t;
                           t.m = 16;
                           t.entries.assign(16, std::vector<Cyclotomic>(16));
                           t.constrained.assign(16, std::vector<bool>(16, true));
                           for (long i = 0; i < 4; ++i)
                               for (long j = 0; j < 4; ++j)
                                   for (long k = 0; k < 4; ++k)
                                       for (long l = 0; l < 4; ++l)
                                           t.entries[static_cast<size_t>(i * 4 + j)][static_cast<size_t>(k * 4 + l)] =
                                               a.entries[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                               b.entries[static_cast<size_t>(j)][static_cast<size_t>(l)];
                           return t;
                       }()));
    REQUIRE(c.expected_group);
    CHECK(*c.expected_group == AbelianType{{2, 2, 2, 2}});

    NamedConstruction boundary = kronecker_divisor_grading(1, 3);
    CHECK(boundary.algebra->dim() == 10);
    CHECK(boundary.decomposition.components.size() == 9);
    CHECK_THROWS_AS(kronecker_divisor_grading(2, 3), std::invalid_argument);
}

TEST_CASE("prime power sums") {
    NamedConstruction base = p_power_sum_grading(2, {2});
    CHECK(base.algebra->dim() == 16);  // plain clock/shift split of M_4
    CHECK(tables_equal(*base.expected_theta, clock_shift_table(4)));

    NamedConstruction two = p_power_sum_grading(2, {1, 1});
    CHECK(two.algebra->dim() == 8);  // M_2 + M_2
    CHECK(two.decomposition.components.size() == 4);
    DetectResult t = detect_theta(two.decomposition);
    REQUIRE(t.ok());
    RegularityWitness w = find_witness(two.decomposition, *t.table);
    CHECK(w.status == RegularityWitness::Status::found);
    QcRelationsReport q = qc_relations_check(*t.table);
    CHECK(q.relations_ok);
    CHECK(q.diagonal_all_one);

    NamedConstruction mix = p_power_sum_grading(2, {1, 2});
    CHECK(mix.algebra->dim() == 20);  // M_2 + M_4
    NamedConstruction kron = kronecker_divisor_grading(2, 4);
    CHECK(row_fingerprint(*mix.expected_theta) == row_fingerprint(*kron.expected_theta));

    CHECK_THROWS_AS(p_power_sum_grading(4, {1}), std::invalid_argument);
    CHECK_THROWS_AS(p_power_sum_grading(2, {2, 1}), std::invalid_argument);
}

TEST_CASE("even-odd split of the exterior algebra") {
    NamedConstruction g1 = grassmann_z2_decomposition(1);
    REQUIRE(g1.decomposition.components.size() == 2);
    CHECK(g1.decomposition.components[0].size() == 1);
    CHECK(g1.decomposition.components[1].size() == 1);
    CHECK(g1.decomposition.components[0][0] == g1.algebra->unit());

    NamedConstruction g3 = grassmann_z2_decomposition(3);
    CHECK(g3.decomposition.components[0].size() == 4);
    CHECK(g3.decomposition.components[1].size() == 4);
    DetectResult t = detect_theta(g3.decomposition);
    REQUIRE(t.ok());
    CHECK(t.table->entries[1][1] == Cyclotomic(-1));
}

TEST_CASE("registry") {
    CHECK(construction_names().size() == 6);
    CHECK(make_construction("pauli", {3}).decomposition.components.size() == 9);
    CHECK_THROWS_AS(make_construction("nope", {}), std::invalid_argument);
    CHECK_THROWS_AS(make_construction("pauli", {}), std::invalid_argument);
}
