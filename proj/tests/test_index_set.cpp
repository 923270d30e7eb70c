#include <hlbip/generate.hpp>
#include <hlbip/index_set.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

using namespace hlbip;

TEST_CASE("construction sorts and deduplicates") {
    IndexSet s{3, 1, 2, 3, 1};
    CHECK(s.elements() == std::vector<int>{1, 2, 3});
    CHECK(s.size() == 3);
    CHECK_THROWS_AS((IndexSet{0, 1}), input_error);
    CHECK_THROWS_AS((IndexSet{-2}), input_error);
    CHECK(IndexSet{}.empty());
}

TEST_CASE("range and mask round-trip") {
    CHECK(IndexSet::range(4) == IndexSet{1, 2, 3, 4});
    CHECK(IndexSet::range(0).empty());
    CHECK(IndexSet::from_mask(0b1011) == IndexSet{1, 2, 4});
    for (std::uint64_t m = 0; m < 64; ++m)
        CHECK(IndexSet::from_mask(m).as_mask() == m);
}

TEST_CASE("membership and extremes") {
    IndexSet s{2, 5, 9};
    CHECK(s.contains(5));
    CHECK_FALSE(s.contains(3));
    CHECK(s.min() == 2);
    CHECK(s.max() == 9);
    CHECK_THROWS_AS(IndexSet{}.min(), internal_error);
}

TEST_CASE("set algebra agrees with std::set operations") {
    Rng rng(77);
    for (int t = 0; t < 200; ++t) {
        std::set<int> a, b;
        for (int x = 1; x <= 10; ++x) {
            if (rng.coin()) a.insert(x);
            if (rng.coin()) b.insert(x);
        }
        IndexSet A{std::vector<int>(a.begin(), a.end())};
        IndexSet B{std::vector<int>(b.begin(), b.end())};
        std::vector<int> expect;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                       std::back_inserter(expect));
        CHECK(A.set_union(B).elements() == expect);
        expect.clear();
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(expect));
        CHECK(A.set_intersection(B).elements() == expect);
        expect.clear();
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(expect));
        CHECK(A.set_difference(B).elements() == expect);
        expect.clear();
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(expect));
        CHECK(A.symmetric_difference(B).elements() == expect);
        CHECK(A.is_subset_of(B) == std::includes(b.begin(), b.end(),
                                                 a.begin(), a.end()));
        CHECK(A.intersects(B) == !A.set_intersection(B).empty());
    }
}

TEST_CASE("overlap needs all three regions") {
    IndexSet a{1, 2}, b{2, 3};
    CHECK(a.overlaps(b));
    CHECK(b.overlaps(a));
    CHECK_FALSE(a.overlaps(IndexSet{1, 2, 3})); // nested
    CHECK_FALSE(a.overlaps(IndexSet{3, 4}));    // disjoint
    CHECK_FALSE(a.overlaps(a));
}

TEST_CASE("complement, with, without") {
    IndexSet s{1, 3};
    CHECK(s.complement_in(4) == IndexSet{2, 4});
    CHECK_THROWS_AS(IndexSet{5}.complement_in(4), input_error);
    CHECK(s.with(2) == IndexSet{1, 2, 3});
    CHECK(s.with(3) == s);
    CHECK(s.without(3) == IndexSet{1});
    CHECK(s.without(2) == s);
}

TEST_CASE("lexicographic order") {
    std::vector<IndexSet> sorted{{1}, {1, 2}, {1, 2, 3}, {1, 3}, {2}, {2, 3}, {3}};
    CHECK(std::is_sorted(sorted.begin(), sorted.end()));
    CHECK(IndexSet{1} < IndexSet{1, 2});
    CHECK(IndexSet{1, 3} < IndexSet{2});
}

TEST_CASE("rendering") {
    CHECK(IndexSet{2, 1, 4}.str() == "{1,2,4}");
    CHECK(IndexSet{}.str() == "{}");
}
