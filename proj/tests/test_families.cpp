#include <hlbip/families.hpp>
#include <hlbip/generate.hpp>

#include <doctest.h>
#include <support/oracles.hpp>

#include <vector>

using namespace hlbip;

namespace {

BipartitionFamily singletons(int n) {
    BipartitionFamily F(n);
    for (int v = 1; v <= n; ++v) F.add(Bipartition::of(IndexSet{v}, n));
    return F;
}

BipartitionFamily all_bipartitions(int n) {
    BipartitionFamily F(n);
    for_each_bipartition(n, [&](const Bipartition& b) { F.add(b); });
    return F;
}

// Weakly bipartitive but not bipartitive on [4].
BipartitionFamily f0() {
    BipartitionFamily F = singletons(4);
    F.add(Bipartition::of(IndexSet{1, 2}, 4));
    F.add(Bipartition::of(IndexSet{1, 3}, 4));
    return F;
}

// Random family that always contains the singleton bipartitions, and with
// probability 1/4 drops one of them so Q1 failures are exercised too.
BipartitionFamily random_family(int n, Rng& rng) {
    BipartitionFamily F(n);
    for_each_bipartition(n, [&](const Bipartition& b) {
        bool singleton = b.first().size() == 1 || b.second().size() == 1;
        if (singleton || rng.below(3) == 0) F.add(b);
    });
    return F;
}

SetFamily random_set_family(int n, Rng& rng) {
    SetFamily P(IndexSet::range(n));
    P.add(IndexSet::range(n));
    for (int v = 1; v <= n; ++v) P.add(IndexSet{v});
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m)
        if (rng.below(3) == 0) P.add(IndexSet::from_mask(m));
    return P;
}

} // namespace

TEST_CASE("bipartition canonicalization") {
    Bipartition b = Bipartition::of(IndexSet{3}, 4);
    CHECK(b.first() == IndexSet{1, 2, 4});
    CHECK(b.second() == IndexSet{3});
    CHECK(Bipartition::of(IndexSet{1, 2}, 4).first() == IndexSet{1, 2});
    CHECK(Bipartition::of(IndexSet{2, 3, 4}, 4) == Bipartition::of(IndexSet{1}, 4));
    CHECK(b.str() == "{{1,2,4},{3}}");
    CHECK(b.side_containing(3) == IndexSet{3});
    CHECK(b.side_avoiding(3) == IndexSet{1, 2, 4});
    CHECK_THROWS_AS(Bipartition::of(IndexSet{}, 3), input_error);
    CHECK_THROWS_AS(Bipartition::of(IndexSet::range(3), 3), input_error);
    CHECK_THROWS_AS(Bipartition::of(IndexSet{5}, 3), input_error);
    CHECK_THROWS_AS(Bipartition::of(IndexSet{1}, 1), input_error);
}

TEST_CASE("overlap of bipartitions") {
    Bipartition a = Bipartition::of(IndexSet{1, 2}, 4);
    Bipartition b = Bipartition::of(IndexSet{1, 3}, 4);
    CHECK(a.overlaps(b));
    CHECK(b.overlaps(a));
    CHECK_FALSE(a.overlaps(a));
    // A singleton side can never meet both sides of the other bipartition.
    for_each_bipartition(5, [&](const Bipartition& x) {
        CHECK_FALSE(Bipartition::of(IndexSet{2}, 5).overlaps(x));
    });
    CHECK_THROWS_AS(a.overlaps(Bipartition::of(IndexSet{1}, 5)), input_error);
}

TEST_CASE("weakly bipartitive checker fixtures") {
    CHECK(check_weakly_bipartitive(all_bipartitions(4)).passed);
    CHECK(check_weakly_bipartitive(singletons(4)).passed);

    BipartitionFamily missing(4);
    for (int v : {1, 3, 4}) missing.add(Bipartition::of(IndexSet{v}, 4));
    AxiomReport r = check_weakly_bipartitive(missing);
    REQUIRE_FALSE(r.passed);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].axiom == AxiomId::Q1);
    CHECK(r.violations[0].witnesses == std::vector<std::string>{"element 2"});
    CHECK(r.violations[0].missing == "{{1,3,4},{2}}");
}

TEST_CASE("Q2 violation carries the overlapping pair and the corner") {
    BipartitionFamily F = singletons(5);
    F.add(Bipartition::of(IndexSet{1, 2}, 5));
    F.add(Bipartition::of(IndexSet{1, 4}, 5));
    AxiomReport r = check_weakly_bipartitive(F);
    REQUIRE_FALSE(r.passed);
    bool found = false;
    for (const AxiomViolation& v : r.violations)
        if (v.axiom == AxiomId::Q2 && v.missing == "{{1,2,4},{3,5}}") found = true;
    CHECK(found);
}

TEST_CASE("bipartitive checker fixtures") {
    CHECK(check_bipartitive(all_bipartitions(4)).passed);

    AxiomReport r = check_bipartitive(f0());
    REQUIRE_FALSE(r.passed);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].axiom == AxiomId::Q3);
    CHECK(r.violations[0].missing == "{{1,4},{2,3}}");
    CHECK(r.violations[0].witnesses
          == std::vector<std::string>{"{{1,2},{3,4}}", "{{1,3},{2,4}}"});
    CHECK(describe(r.violations[0])
          == "Q3: {{1,2},{3,4}}, {{1,3},{2,4}} require {{1,4},{2,3}}");

    // Splits of the path on 4: no overlapping pair, so Q2/Q3 are vacuous.
    BipartitionFamily sp = singletons(4);
    sp.add(Bipartition::of(IndexSet{1, 2}, 4));
    CHECK(check_bipartitive(sp).passed);
}

TEST_CASE("both bipartition checkers agree with the mask oracle") {
    Rng rng(606);
    for (int t = 0; t < 150; ++t) {
        int n = static_cast<int>(rng.below(4)) + 2;
        BipartitionFamily F = random_family(n, rng);
        if (rng.below(4) == 0 && F.size() > 1) {
            // Drop a random member, which may be a singleton bipartition.
            int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(F.size())));
            BipartitionFamily G(n);
            int i = 0;
            for (const Bipartition& b : F)
                if (i++ != k) G.add(b);
            F = G;
        }
        CHECK(check_weakly_bipartitive(F).passed == oracles::weakly_bipartitive(F));
        CHECK(check_bipartitive(F).passed == oracles::bipartitive(F));
    }
}

TEST_CASE("partitive checker fixtures") {
    SetFamily all3(IndexSet::range(3));
    for (std::uint64_t m = 1; m < 8; ++m) all3.add(IndexSet::from_mask(m));
    CHECK(check_partitive(all3, false).passed);
    CHECK(check_partitive(all3, true).passed);

    SetFamily p0(IndexSet::range(3));
    for (const IndexSet& s :
         {IndexSet{1}, IndexSet{2}, IndexSet{3}, IndexSet{1, 2}, IndexSet{1, 3},
          IndexSet{1, 2, 3}})
        p0.add(s);
    CHECK(check_partitive(p0, true).passed);
    AxiomReport r = check_partitive(p0, false);
    REQUIRE_FALSE(r.passed);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].axiom == AxiomId::P3);
    CHECK(r.violations[0].missing == "{2,3}");

    SetFamily no_single(IndexSet::range(3));
    no_single.add(IndexSet::range(3));
    no_single.add(IndexSet{1});
    no_single.add(IndexSet{2});
    AxiomReport r1 = check_partitive(no_single, true);
    REQUIRE_FALSE(r1.passed);
    CHECK(r1.violations[0].axiom == AxiomId::P1);
}

TEST_CASE("partitive checker agrees with the mask oracle") {
    Rng rng(607);
    for (int t = 0; t < 150; ++t) {
        int n = static_cast<int>(rng.below(4)) + 1;
        SetFamily P = random_set_family(n, rng);
        CHECK(check_partitive(P, true).passed == oracles::partitive(P, true));
        CHECK(check_partitive(P, false).passed == oracles::partitive(P, false));
    }
}

TEST_CASE("restriction to sets fixtures") {
    SetFamily P = restrict_to_sets(f0(), 4);
    CHECK(P.ground() == IndexSet{1, 2, 3});
    SetFamily expect(IndexSet{1, 2, 3});
    for (const IndexSet& s :
         {IndexSet{1}, IndexSet{2}, IndexSet{3}, IndexSet{1, 2}, IndexSet{1, 3},
          IndexSet{1, 2, 3}})
        expect.add(s);
    CHECK(P == expect);

    SetFamily all2 = restrict_to_sets(all_bipartitions(3), 3);
    CHECK(all2.size() == 3); // {1}, {2}, {1,2}
    CHECK(all2.contains(IndexSet{1, 2}));

    SetFamily sing = restrict_to_sets(singletons(4), 4);
    SetFamily expect2(IndexSet{1, 2, 3});
    for (const IndexSet& s :
         {IndexSet{1}, IndexSet{2}, IndexSet{3}, IndexSet{1, 2, 3}})
        expect2.add(s);
    CHECK(sing == expect2);
}

TEST_CASE("lift inverts restriction") {
    SetFamily P(IndexSet{1, 2});
    P.add(IndexSet{1});
    P.add(IndexSet{2});
    P.add(IndexSet{1, 2});
    CHECK(lift_to_bipartitions(P, 3, 3) == all_bipartitions(3));
    CHECK(lift_to_bipartitions(SetFamily(IndexSet{1, 2}), 3, 3).empty());
    CHECK_THROWS_AS(lift_to_bipartitions(P, 3, 2), input_error);

    Rng rng(909);
    for (int t = 0; t < 60; ++t) {
        int n = static_cast<int>(rng.below(4)) + 2;
        BipartitionFamily F = random_family(n, rng);
        for (int v = 1; v <= n; ++v)
            CHECK(lift_to_bipartitions(restrict_to_sets(F, v), n, v) == F);
    }
}

TEST_CASE("axiom transfer across the reduction") {
    // A family is (weakly) bipartitive exactly when its restriction at any
    // element is (weakly) partitive.
    Rng rng(910);
    for (int t = 0; t < 80; ++t) {
        int n = static_cast<int>(rng.below(5)) + 2;
        BipartitionFamily F = random_family(n, rng);
        bool weak = check_weakly_bipartitive(F).passed;
        bool strict = check_bipartitive(F).passed;
        for (int v = 1; v <= n; ++v) {
            SetFamily P = restrict_to_sets(F, v);
            CHECK(check_partitive(P, true).passed == weak);
            CHECK(check_partitive(P, false).passed == strict);
        }
    }
}

TEST_CASE("two-element ground case is literal") {
    BipartitionFamily F(2);
    CHECK_FALSE(check_weakly_bipartitive(F).passed);
    F.add(Bipartition::of(IndexSet{1}, 2));
    CHECK(check_weakly_bipartitive(F).passed);
    CHECK(check_bipartitive(F).passed);
}

TEST_CASE("family ordering is deterministic") {
    BipartitionFamily F(4);
    F.add(Bipartition::of(IndexSet{1, 3}, 4));
    F.add(Bipartition::of(IndexSet{2}, 4));
    F.add(Bipartition::of(IndexSet{1, 2}, 4));
    std::vector<std::string> seen;
    for (const Bipartition& b : F) seen.push_back(b.str());
    CHECK(seen
          == std::vector<std::string>{"{{1,2},{3,4}}", "{{1,3},{2,4}}",
                                      "{{1,3,4},{2}}"});
}
