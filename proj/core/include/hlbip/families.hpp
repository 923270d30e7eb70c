#ifndef HLBIP_FAMILIES_HPP
#define HLBIP_FAMILIES_HPP

#include <hlbip/index_set.hpp>

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hlbip {

// Unordered 2-partition {X, Y} of [n], both sides nonempty. Stored in the
// canonical orientation: first is the side containing element 1, so equality,
// ordering and output are independent of how the pair was presented.
class Bipartition {
public:
    static Bipartition of(const IndexSet& side, int n);

    int ground_size() const { return n_; }
    const IndexSet& first() const { return first_; }
    const IndexSet& second() const { return second_; }
    const IndexSet& side_containing(int x) const;
    const IndexSet& side_avoiding(int x) const;

    // All four corner intersections X∩X', X∩Y', Y∩X', Y∩Y' nonempty.
    // Symmetric, irreflexive; requires equal ground size.
    bool overlaps(const Bipartition& o) const;

    bool operator==(const Bipartition&) const = default;
    // first determines second, so ordering on (n, first) is total.
    std::strong_ordering operator<=>(const Bipartition& o) const;

    std::string str() const; // {{1,2},{3,4}}

private:
    Bipartition(int n, IndexSet f, IndexSet s)
        : n_(n), first_(std::move(f)), second_(std::move(s)) {}

    int n_ = 0;
    IndexSet first_;
    IndexSet second_;
};

inline Bipartition make_bipartition(const IndexSet& side, int n) {
    return Bipartition::of(side, n);
}

class BipartitionFamily {
public:
    explicit BipartitionFamily(int n);

    int ground_size() const { return n_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    void add(const Bipartition& b);
    bool contains(const Bipartition& b) const { return members_.count(b) > 0; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const BipartitionFamily&) const = default;

private:
    int n_;
    std::set<Bipartition> members_;
};

// Family of nonempty subsets of an arbitrary ground set. The ground keeps its
// original labels so restrictions of [n] to [n]∖{v} stay addressable.
class SetFamily {
public:
    explicit SetFamily(IndexSet ground);

    const IndexSet& ground() const { return ground_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    void add(const IndexSet& s);
    bool contains(const IndexSet& s) const { return members_.count(s) > 0; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const SetFamily&) const = default;

private:
    IndexSet ground_;
    std::set<IndexSet> members_;
};

enum class AxiomId { Q1, Q2, Q3, P1, P2, P3 };
std::string_view axiom_name(AxiomId a);

struct AxiomViolation {
    AxiomId axiom;
    std::vector<std::string> witnesses; // objects that force the requirement
    std::string missing;                // the required member that is absent
};

struct AxiomReport {
    bool passed = true;
    std::vector<AxiomViolation> violations;

    static AxiomReport from(std::vector<AxiomViolation> v) {
        return {v.empty(), std::move(v)};
    }
};

// One-line rendering: "Q3: {{1,2},{3,4}}, {{1,3},{2,4}} require {{2,3},{1,4}}".
std::string describe(const AxiomViolation& v);

// Q1: every single-element bipartition {{x},[n]∖{x}} is present.
// Q2: for each overlapping pair, the four corner bipartitions
//     {X∩X',Y∪Y'}, {X∩Y',Y∪X'}, {Y∩X',X∪Y'}, {Y∩Y',X∪X'} are present.
AxiomReport check_weakly_bipartitive(const BipartitionFamily& F);
// Q1 + Q2 + Q3, where Q3 adds {X△X', X△Y'} for each overlapping pair.
AxiomReport check_bipartitive(const BipartitionFamily& F);

// P1: ground present, every singleton present (empty members are excluded by
// the SetFamily type itself). P2: each overlapping pair is closed under
// intersection, both differences, and union. P3 unless weak_only: closed
// under symmetric difference. Sets overlap when X∩Y, X∖Y, Y∖X are nonempty.
AxiomReport check_partitive(const SetFamily& P, bool weak_only);

// Sides avoiding v, collected over the family: {X ⊆ [n]∖{v} : {X,[n]∖X} ∈ F}
// on ground [n]∖{v}. The weakly bipartitive / bipartitive property of F is
// equivalent to the weakly partitive / partitive property of the result.
SetFamily restrict_to_sets(const BipartitionFamily& F, int v);
// Inverse direction: {{X, [n]∖X} : X ∈ P} where P lives on [n]∖{v}.
BipartitionFamily lift_to_bipartitions(const SetFamily& P, int n, int v);

// Visit every bipartition of [n] exactly once (the 2^(n-1) - 1 sides that
// contain element 1), in increasing mask order over {2..n}.
template <class Fn>
void for_each_bipartition(int n, Fn&& fn) {
    if (n < 2 || n > 30) throw input_error("bipartition scan needs 2 <= n <= 30");
    std::uint64_t full = (std::uint64_t{1} << (n - 1)) - 1;
    for (std::uint64_t m = 0; m < full; ++m) {
        // bit i of m => element i+2 joins the side of element 1
        IndexSet side = IndexSet::from_mask(m << 1 | 1);
        fn(Bipartition::of(side, n));
    }
}

} // namespace hlbip

#endif
