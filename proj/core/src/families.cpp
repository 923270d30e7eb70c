#include <hlbip/families.hpp>

#include <hlbip/errors.hpp>

namespace hlbip {

Bipartition Bipartition::of(const IndexSet& side, int n) {
    if (n < 2) throw input_error("bipartitions need ground size >= 2");
    if (side.empty()) throw input_error("bipartition side is empty");
    if (side.max() > n) throw input_error("bipartition side outside ground");
    IndexSet rest = side.complement_in(n);
    if (rest.empty()) throw input_error("bipartition side is the whole ground");
    if (side.contains(1)) return Bipartition(n, side, rest);
    return Bipartition(n, rest, side);
}

const IndexSet& Bipartition::side_containing(int x) const {
    if (first_.contains(x)) return first_;
    if (second_.contains(x)) return second_;
    throw input_error("element outside bipartition ground");
}

const IndexSet& Bipartition::side_avoiding(int x) const {
    const IndexSet& s = side_containing(x);
    return &s == &first_ ? second_ : first_;
}

bool Bipartition::overlaps(const Bipartition& o) const {
    if (n_ != o.n_) throw input_error("overlap across different ground sizes");
    return first_.intersects(o.first_) && first_.intersects(o.second_)
        && second_.intersects(o.first_) && second_.intersects(o.second_);
}

std::strong_ordering Bipartition::operator<=>(const Bipartition& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return first_ <=> o.first_;
}

std::string Bipartition::str() const {
    return "{" + first_.str() + "," + second_.str() + "}";
}

BipartitionFamily::BipartitionFamily(int n) : n_(n) {
    if (n < 2) throw input_error("bipartition families need ground size >= 2");
}

void BipartitionFamily::add(const Bipartition& b) {
    if (b.ground_size() != n_)
        throw input_error("bipartition ground size differs from family");
    members_.insert(b);
}

SetFamily::SetFamily(IndexSet ground) : ground_(std::move(ground)) {}

void SetFamily::add(const IndexSet& s) {
    if (s.empty()) throw input_error("set families hold nonempty members");
    if (!s.is_subset_of(ground_))
        throw input_error("set family member outside ground");
    members_.insert(s);
}

std::string_view axiom_name(AxiomId a) {
    switch (a) {
        case AxiomId::Q1: return "Q1";
        case AxiomId::Q2: return "Q2";
        case AxiomId::Q3: return "Q3";
        case AxiomId::P1: return "P1";
        case AxiomId::P2: return "P2";
        case AxiomId::P3: return "P3";
    }
    throw internal_error("unknown axiom id");
}

std::string describe(const AxiomViolation& v) {
    std::string s(axiom_name(v.axiom));
    s += ": ";
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
        if (i) s += ", ";
        s += v.witnesses[i];
    }
    s += " require ";
    s += v.missing;
    return s;
}

namespace {

void check_q1(const BipartitionFamily& F, std::vector<AxiomViolation>& out) {
    int n = F.ground_size();
    for (int v = 1; v <= n; ++v) {
        Bipartition b = Bipartition::of(IndexSet{v}, n);
        if (!F.contains(b))
            out.push_back({AxiomId::Q1, {"element " + std::to_string(v)}, b.str()});
    }
}

// Derived bipartitions forced by one overlapping pair; the overlap guarantees
// each listed side is a proper nonempty subset.
std::vector<Bipartition> q2_corners(const Bipartition& a, const Bipartition& b) {
    int n = a.ground_size();
    return {
        Bipartition::of(a.first().set_intersection(b.first()), n),
        Bipartition::of(a.first().set_intersection(b.second()), n),
        Bipartition::of(a.second().set_intersection(b.first()), n),
        Bipartition::of(a.second().set_intersection(b.second()), n),
    };
}

Bipartition q3_derived(const Bipartition& a, const Bipartition& b) {
    return Bipartition::of(a.first().symmetric_difference(b.first()),
                           a.ground_size());
}

void check_q2_q3(const BipartitionFamily& F, bool with_q3,
                 std::vector<AxiomViolation>& out) {
    for (auto i = F.begin(); i != F.end(); ++i)
        for (auto j = std::next(i); j != F.end(); ++j) {
            if (!i->overlaps(*j)) continue;
            std::vector<std::string> pair{i->str(), j->str()};
            for (const Bipartition& d : q2_corners(*i, *j))
                if (!F.contains(d))
                    out.push_back({AxiomId::Q2, pair, d.str()});
            if (with_q3) {
                Bipartition d = q3_derived(*i, *j);
                if (!F.contains(d))
                    out.push_back({AxiomId::Q3, pair, d.str()});
            }
        }
}

} // namespace

AxiomReport check_weakly_bipartitive(const BipartitionFamily& F) {
    std::vector<AxiomViolation> v;
    check_q1(F, v);
    check_q2_q3(F, false, v);
    return AxiomReport::from(std::move(v));
}

AxiomReport check_bipartitive(const BipartitionFamily& F) {
    std::vector<AxiomViolation> v;
    check_q1(F, v);
    check_q2_q3(F, true, v);
    return AxiomReport::from(std::move(v));
}

AxiomReport check_partitive(const SetFamily& P, bool weak_only) {
    if (P.ground().empty()) throw input_error("set family axioms need a nonempty ground");
    std::vector<AxiomViolation> out;
    if (!P.contains(P.ground()))
        out.push_back({AxiomId::P1, {"ground"}, P.ground().str()});
    for (int x : P.ground()) {
        IndexSet s{x};
        if (!P.contains(s))
            out.push_back({AxiomId::P1, {"element " + std::to_string(x)}, s.str()});
    }
    for (auto i = P.begin(); i != P.end(); ++i)
        for (auto j = std::next(i); j != P.end(); ++j) {
            if (!i->overlaps(*j)) continue;
            std::vector<std::string> pair{i->str(), j->str()};
            const IndexSet derived[] = {
                i->set_intersection(*j),
                i->set_difference(*j),
                j->set_difference(*i),
                i->set_union(*j),
            };
            for (const IndexSet& d : derived)
                if (!P.contains(d))
                    out.push_back({AxiomId::P2, pair, d.str()});
            if (!weak_only) {
                IndexSet d = i->symmetric_difference(*j);
                if (!P.contains(d))
                    out.push_back({AxiomId::P3, pair, d.str()});
            }
        }
    return AxiomReport::from(std::move(out));
}

SetFamily restrict_to_sets(const BipartitionFamily& F, int v) {
    int n = F.ground_size();
    if (v < 1 || v > n) throw input_error("restriction element outside ground");
    SetFamily P(IndexSet::range(n).without(v));
    for (const Bipartition& b : F) P.add(b.side_avoiding(v));
    return P;
}

BipartitionFamily lift_to_bipartitions(const SetFamily& P, int n, int v) {
    if (v < 1 || v > n) throw input_error("lift element outside ground");
    if (P.ground() != IndexSet::range(n).without(v))
        throw input_error("lift needs ground [n] minus the chosen element");
    BipartitionFamily F(n);
    for (const IndexSet& s : P) F.add(Bipartition::of(s, n));
    return F;
}

} // namespace hlbip
