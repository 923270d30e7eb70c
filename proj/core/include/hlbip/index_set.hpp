#ifndef HLBIP_INDEX_SET_HPP
#define HLBIP_INDEX_SET_HPP

#include <hlbip/errors.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hlbip {

// A sorted set of distinct 1-based indices. Everything downstream (matrix
// slices, bipartition sides, set-family members, l2 grounds) is built on it.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<int> elems);
    explicit IndexSet(std::vector<int> elems); // sorted + deduplicated

    // {1, ..., n}
    static IndexSet range(int n);
    // Bit i-1 of mask set => element i is present. Used by the subset scans.
    static IndexSet from_mask(std::uint64_t mask);

    bool empty() const { return elems_.empty(); }
    int size() const { return static_cast<int>(elems_.size()); }
    bool contains(int x) const;
    int min() const; // nonempty
    int max() const; // nonempty

    IndexSet set_union(const IndexSet& o) const;
    IndexSet set_intersection(const IndexSet& o) const;
    IndexSet set_difference(const IndexSet& o) const;
    IndexSet symmetric_difference(const IndexSet& o) const;
    // [n] \ *this; every element must lie in [n]
    IndexSet complement_in(int n) const;

    bool is_subset_of(const IndexSet& o) const;
    bool intersects(const IndexSet& o) const;
    // X and Y overlap when X∩Y, X\Y and Y\X are all nonempty.
    bool overlaps(const IndexSet& o) const;

    IndexSet with(int x) const;
    IndexSet without(int x) const;

    std::uint64_t as_mask() const; // all elements must be <= 64

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    const std::vector<int>& elements() const { return elems_; }

    bool operator==(const IndexSet&) const = default;
    // Lexicographic on the sorted element sequence: a deterministic order for
    // family iteration and document output.
    std::strong_ordering operator<=>(const IndexSet& o) const;

    std::string str() const;

private:
    std::vector<int> elems_;
};

} // namespace hlbip

#endif
