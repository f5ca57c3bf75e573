#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qcreg/constructions.hpp"
#include "qcreg/identities.hpp"

using namespace qcreg;

namespace {

ThetaTable ones_table(long m) {
    ThetaTable t;
    t.m = m;
    t.entries.assign(static_cast<size_t>(m), std::vector<Cyclotomic>(static_cast<size_t>(m), Cyclotomic(1)));
    t.constrained.assign(static_cast<size_t>(m), std::vector<bool>(static_cast<size_t>(m), true));
    return t;
}

ThetaTable grassmann_table() {
    ThetaTable t;
    t.m = 2;
    t.entries = {{Cyclotomic(1), Cyclotomic(1)}, {Cyclotomic(1), Cyclotomic(-1)}};
    t.constrained = {{true, true}, {true, true}};
    return t;
}

}  // namespace

TEST_CASE("inversion coefficients") {
    ThetaTable g = grassmann_table();
    CHECK(lambda_coefficient(g, {0, 1, 0}, {0, 1, 2}) == Cyclotomic(1));  // identity permutation
    CHECK(lambda_coefficient(g, {1, 1}, {1, 0}) == Cyclotomic(-1));       // single inversion at (2,2)
    CHECK(lambda_coefficient(ones_table(3), {2, 0, 1, 2}, {3, 2, 1, 0}) == Cyclotomic(1));
    // multiplicativity over disjoint inversion blocks: sigma reverses {0,1},
    // tau reverses {2,3}; composed coefficient = product of the parts
    std::vector<long> tuple = {1, 1, 1, 1};
    Cyclotomic part = lambda_coefficient(g, {1, 1}, {1, 0});
    CHECK(lambda_coefficient(g, tuple, {1, 0, 3, 2}) == part * part);
}

TEST_CASE("degree-two identity in the commutative case") {
    auto p = find_identity(ones_table(1), 2);
    REQUIRE(p);
    REQUIRE(p->terms.size() == 2);
    Cyclotomic a = p->terms.at({0, 1});
    Cyclotomic b = p->terms.at({1, 0});
    CHECK(a == -b);
    CHECK(!a.is_zero());
}

TEST_CASE("degree-four identity for the sign table") {
    auto p = find_identity(grassmann_table(), 4);
    REQUIRE(p);
    CHECK(!p->terms.empty());

    // holds exhaustively on the k = 3 truncation (basis 8, within the sweep cap)
    NamedConstruction g3 = grassmann_z2_decomposition(3);
    IdentityVerification v = verify_identity(*p, g3.decomposition, 20, 7);
    CHECK(v.holds);
    CHECK(v.exhaustive);

    // kernel dimension is at least n! - m^n = 24 - 16
    std::vector<std::vector<long>> perms;
    std::vector<long> pe = {0, 1, 2, 3};
    do perms.push_back(pe);
    while (std::next_permutation(pe.begin(), pe.end()));
    CMatrix sys(16, 24);
    for (long r = 0; r < 16; ++r) {
        std::vector<long> tuple = {r / 8 % 2, r / 4 % 2, r / 2 % 2, r % 2};
        for (size_t c = 0; c < perms.size(); ++c)
            sys.at(r, static_cast<long>(c)) = lambda_coefficient(grassmann_table(), tuple, perms[c]);
    }
    CHECK(kernel_basis(sys).size() >= 8);
}

TEST_CASE("degree cap") {
    CHECK_THROWS_AS(find_identity(ones_table(1), 7), std::invalid_argument);
}

TEST_CASE("verification can refute") {
    auto comm = find_identity(ones_table(1), 2);
    REQUIRE(comm);
    // commutator fails on a full matrix algebra
    MultilinearPoly c2;
    c2.degree = 2;
    c2.terms[{0, 1}] = Cyclotomic(1);
    c2.terms[{1, 0}] = Cyclotomic(-1);
    NamedConstruction p2 = pauli_decomposition(2);
    IdentityVerification v = verify_identity(c2, p2.decomposition, 50, 3);
    CHECK(!v.holds);
    REQUIRE(v.counterexample_tuple);

    // but holds on the one-component scalar fixture
    NamedConstruction p1 = pauli_decomposition(1);
    IdentityVerification v1 = verify_identity(c2, p1.decomposition, 20, 3);
    CHECK(v1.holds);
    CHECK(v1.exhaustive);
}
