#include <hlbip/index_set.hpp>

#include <algorithm>
#include <sstream>

namespace hlbip {

IndexSet::IndexSet(std::initializer_list<int> elems)
    : IndexSet(std::vector<int>(elems)) {}

IndexSet::IndexSet(std::vector<int> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (!elems_.empty() && elems_.front() < 1)
        throw input_error("index sets hold 1-based indices");
}

IndexSet IndexSet::range(int n) {
    if (n < 0) throw input_error("range size must be nonnegative");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    IndexSet s;
    s.elems_ = std::move(v);
    return s;
}

IndexSet IndexSet::from_mask(std::uint64_t mask) {
    std::vector<int> v;
    for (int i = 0; i < 64; ++i)
        if (mask >> i & 1) v.push_back(i + 1);
    IndexSet s;
    s.elems_ = std::move(v);
    return s;
}

bool IndexSet::contains(int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

int IndexSet::min() const {
    if (elems_.empty()) throw internal_error("min of empty index set");
    return elems_.front();
}

int IndexSet::max() const {
    if (elems_.empty()) throw internal_error("max of empty index set");
    return elems_.back();
}

IndexSet IndexSet::set_union(const IndexSet& o) const {
    IndexSet r;
    std::set_union(elems_.begin(), elems_.end(), o.elems_.begin(),
                   o.elems_.end(), std::back_inserter(r.elems_));
    return r;
}

IndexSet IndexSet::set_intersection(const IndexSet& o) const {
    IndexSet r;
    std::set_intersection(elems_.begin(), elems_.end(), o.elems_.begin(),
                          o.elems_.end(), std::back_inserter(r.elems_));
    return r;
}

IndexSet IndexSet::set_difference(const IndexSet& o) const {
    IndexSet r;
    std::set_difference(elems_.begin(), elems_.end(), o.elems_.begin(),
                        o.elems_.end(), std::back_inserter(r.elems_));
    return r;
}

IndexSet IndexSet::symmetric_difference(const IndexSet& o) const {
    IndexSet r;
    std::set_symmetric_difference(elems_.begin(), elems_.end(),
                                  o.elems_.begin(), o.elems_.end(),
                                  std::back_inserter(r.elems_));
    return r;
}

IndexSet IndexSet::complement_in(int n) const {
    if (!elems_.empty() && elems_.back() > n)
        throw input_error("complement: element outside ground range");
    return range(n).set_difference(*this);
}

bool IndexSet::is_subset_of(const IndexSet& o) const {
    return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(),
                         elems_.end());
}

bool IndexSet::intersects(const IndexSet& o) const {
    auto a = elems_.begin();
    auto b = o.elems_.begin();
    while (a != elems_.end() && b != o.elems_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a; else ++b;
    }
    return false;
}

bool IndexSet::overlaps(const IndexSet& o) const {
    return intersects(o) && !is_subset_of(o) && !o.is_subset_of(*this);
}

IndexSet IndexSet::with(int x) const {
    if (contains(x)) return *this;
    IndexSet r = *this;
    r.elems_.insert(std::upper_bound(r.elems_.begin(), r.elems_.end(), x), x);
    return r;
}

IndexSet IndexSet::without(int x) const {
    IndexSet r = *this;
    auto it = std::lower_bound(r.elems_.begin(), r.elems_.end(), x);
    if (it != r.elems_.end() && *it == x) r.elems_.erase(it);
    return r;
}

std::uint64_t IndexSet::as_mask() const {
    std::uint64_t m = 0;
    for (int x : elems_) {
        if (x > 64) throw internal_error("mask form needs elements <= 64");
        m |= std::uint64_t{1} << (x - 1);
    }
    return m;
}

std::strong_ordering IndexSet::operator<=>(const IndexSet& o) const {
    return std::lexicographical_compare_three_way(
        elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end());
}

std::string IndexSet::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) os << ',';
        os << elems_[i];
    }
    os << '}';
    return os.str();
}

} // namespace hlbip
