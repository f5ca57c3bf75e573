#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qcreg/constructions.hpp"
#include "qcreg/gradedgroup.hpp"

using namespace qcreg;

namespace {

// alpha((a1,a2),(b1,b2)) = (-1)^{a2 b1} on Z2 x Z2 (index a1*2 + a2).
Cocycle klein_sign_cocycle() {
    CayleyTable klein = abelian_group({2, 2});
    Cocycle a = trivial_cocycle(klein);
    for (long g = 0; g < 4; ++g)
        for (long h = 0; h < 4; ++h)
            if ((g % 2) * (h / 2) % 2 == 1) a.values[static_cast<size_t>(g)][static_cast<size_t>(h)] = Cyclotomic(-1);
    return a;
}

// Symmetric group on three letters via permutation composition.
CayleyTable s3_table() {
    const long perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    auto find = [&](const long* p) {
        for (long i = 0; i < 6; ++i)
            if (std::equal(p, p + 3, perms[i])) return i;
        return -1L;
    };
    CayleyTable t;
    t.m = 6;
    t.identity = 0;
    t.table.assign(6, std::vector<long>(6));
    for (long g = 0; g < 6; ++g)
        for (long h = 0; h < 6; ++h) {
            long comp[3];
            for (long x = 0; x < 3; ++x) comp[x] = perms[g][perms[h][x]];
            t.table[static_cast<size_t>(g)][static_cast<size_t>(h)] = find(comp);
        }
    return t;
}

}  // namespace

TEST_CASE("cocycle validation") {
    CayleyTable klein = abelian_group({2, 2});
    CHECK(!validate_cocycle(trivial_cocycle(klein)));
    CHECK(!validate_cocycle(klein_sign_cocycle()));
    Cocycle bad = klein_sign_cocycle();
    bad.values[3][3] = Cyclotomic(-1) * bad.values[3][3];
    auto v = validate_cocycle(bad);
    REQUIRE(v);
    CHECK(v->message == "cocycle identity fails");
}

TEST_CASE("induced skew-symmetric table") {
    Cocycle triv = trivial_cocycle(abelian_group({2, 2}));
    Bicharacter b0 = induced_bicharacter(triv);
    for (const auto& row : b0.values)
        for (const auto& c : row) CHECK(c == Cyclotomic(1));

    Bicharacter b = induced_bicharacter(klein_sign_cocycle());
    CHECK(is_bicharacter(b));
    CHECK(is_skew_symmetric(b));
    // beta((a1,a2),(b1,b2)) = (-1)^{a2 b1 - a1 b2}
    for (long g = 0; g < 4; ++g)
        for (long h = 0; h < 4; ++h) {
            long e = (g % 2) * (h / 2) - (g / 2) * (h % 2);
            CHECK(b.values[static_cast<size_t>(g)][static_cast<size_t>(h)] ==
                  Cyclotomic(((e % 2) + 2) % 2 == 0 ? 1 : -1));
        }
    CHECK(is_nondegenerate(b));
}

TEST_CASE("nondegeneracy") {
    Bicharacter triv;
    triv.group = cyclic_group(2);
    triv.values.assign(2, std::vector<Cyclotomic>(2, Cyclotomic(1)));
    CHECK(!is_nondegenerate(triv));

    // clock/shift table as a bicharacter on (Z_3)^2
    Bicharacter p3;
    p3.group = abelian_group({3, 3});
    ThetaTable t = clock_shift_table(3);
    p3.values = t.entries;
    CHECK(is_bicharacter(p3));
    CHECK(is_nondegenerate(p3));
}

TEST_CASE("ray classes and twisted centers") {
    CayleyTable klein = abelian_group({2, 2});
    auto all = ray_classes(trivial_cocycle(klein));
    CHECK(all.size() == 4);

    auto only_e = ray_classes(klein_sign_cocycle());
    REQUIRE(only_e.size() == 1);
    CHECK(only_e[0] == std::vector<long>{0});

    CayleyTable s3 = s3_table();
    REQUIRE(!s3.validate());
    CHECK(ray_classes(trivial_cocycle(s3)).size() == s3.conjugacy_classes().size());

    for (const Cocycle& a : {trivial_cocycle(klein), klein_sign_cocycle(), trivial_cocycle(s3)}) {
        auto [classes, dim] = ray_class_center_dims(a);
        CHECK(classes == dim);
    }
}

TEST_CASE("abelian classification") {
    CHECK(classify_abelian(abelian_group({2, 2})) == AbelianType{{2, 2}});
    CHECK(classify_abelian(cyclic_group(6)) == AbelianType{{6}});
    CHECK(classify_abelian(abelian_group({3, 3})) == AbelianType{{3, 3}});
    CHECK(classify_abelian(abelian_group({2, 4})) == AbelianType{{2, 4}});
    CHECK(classify_abelian(abelian_group({2, 3})) == AbelianType{{6}});
    CHECK(classify_abelian(cyclic_group(1)) == AbelianType{{1}});
    CHECK_THROWS_AS(classify_abelian(s3_table()), std::invalid_argument);
}

TEST_CASE("group reconstruction from one-dimensional components") {
    for (long n : {2, 3}) {
        NamedConstruction p = pauli_decomposition(n);
        DetectResult t = detect_theta(p.decomposition);
        REQUIRE(t.ok());
        RegularityWitness w = find_witness(p.decomposition, *t.table);
        REQUIRE(w.status == RegularityWitness::Status::found);
        GroupReconstruction r = reconstruct_group(p.decomposition, *t.table, w);
        REQUIRE(r.ok());
        CHECK(r.group->is_abelian());
        CHECK(classify_abelian(*r.group) == AbelianType{{n, n}});
    }

    NamedConstruction e62 = example_6_2();
    DetectResult t = detect_theta(e62.decomposition);
    REQUIRE(t.ok());
    RegularityWitness w = find_witness(e62.decomposition, *t.table);
    REQUIRE(w.status == RegularityWitness::Status::found);
    GroupReconstruction r = reconstruct_group(e62.decomposition, *t.table, w);
    CHECK(r.failure == GroupReconstruction::Failure::Precondition);  // not minimal
}

TEST_CASE("set grading detection") {
    SetGradingResult e62 = set_grading_detect(example_6_2().decomposition);
    REQUIRE(e62.ok);
    for (const auto& row : e62.f)
        for (long v : row) CHECK(v >= 0);  // total

    SetGradingResult e61 = set_grading_detect(example_6_1().decomposition);
    REQUIRE(!e61.ok);
    CHECK(e61.i == 1);  // component (0,1) in row-major order
    CHECK(e61.j == 1);
    CHECK(e61.components_hit == std::vector<long>{0, 2});

    NamedConstruction p3 = pauli_decomposition(3);
    SetGradingResult sp = set_grading_detect(p3.decomposition);
    REQUIRE(sp.ok);
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j)
            for (long k = 0; k < 3; ++k)
                for (long l = 0; l < 3; ++l)
                    CHECK(sp.f[static_cast<size_t>(i * 3 + j)][static_cast<size_t>(k * 3 + l)] ==
                          ((i + k) % 3) * 3 + (j + l) % 3);
}

TEST_CASE("realizability") {
    SetGradingResult e62 = set_grading_detect(example_6_2().decomposition);
    REQUIRE(e62.ok);
    RealizabilityReport r = realizability_check(e62.f, 6);
    CHECK(r.verdict == RealizabilityReport::Verdict::violated);
    CHECK(r.message.find("cancellation") != std::string::npos);
    // the documented duplicate-column instance is present in the table
    CHECK(e62.f[0][3] == e62.f[1][3]);

    NamedConstruction p2 = pauli_decomposition(2);
    SetGradingResult sp = set_grading_detect(p2.decomposition);
    REQUIRE(sp.ok);
    RealizabilityReport rp = realizability_check(sp.f, 4);
    REQUIRE(rp.verdict == RealizabilityReport::Verdict::realizable);
    DetectResult t = detect_theta(p2.decomposition);
    RegularityWitness w = find_witness(p2.decomposition, *t.table);
    GroupReconstruction g = reconstruct_group(p2.decomposition, *t.table, w);
    REQUIRE(g.ok());
    CHECK(rp.group->table == g.group->table);

    // a partial table: Z2 pattern with one entry removed
    std::vector<std::vector<long>> partial = {{0, 1}, {1, -1}};
    RealizabilityReport pr = realizability_check(partial, 2);
    CHECK(pr.verdict == RealizabilityReport::Verdict::necessary_conditions_hold);
}

TEST_CASE("nondegeneracy matches minimality on grading tables") {
    for (long n : {2, 3}) {
        ThetaTable t = clock_shift_table(n);
        Bicharacter b;
        b.group = abelian_group({n, n});
        b.values = t.entries;
        REQUIRE(is_bicharacter(b));
        CHECK(is_nondegenerate(b) == is_minimal(t).minimal);
    }
    ThetaTable k = *kronecker_divisor_grading(2, 4).expected_theta;
    Bicharacter bk;
    bk.group = abelian_group({2, 2, 2, 2});
    bk.values = k.entries;
    REQUIRE(is_bicharacter(bk));
    CHECK(is_nondegenerate(bk) == is_minimal(k).minimal);
}
