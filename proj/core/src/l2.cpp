#include <hlbip/l2.hpp>

#include <algorithm>

namespace hlbip {

L2Structure::L2Structure(IndexSet ground, const FieldSpec& field)
    : ground_(std::move(ground)), field_(field) {
    std::size_t k = static_cast<std::size_t>(ground_.size());
    labels_.assign(k * k, field_.zero());
}

int L2Structure::slot(int x) const {
    const auto& v = ground_.elements();
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x)
        throw input_error("element outside structure ground");
    return static_cast<int>(it - v.begin());
}

const Scalar& L2Structure::label(int x, int y) const {
    if (x == y) throw input_error("labels live on distinct pairs");
    return labels_[static_cast<std::size_t>(slot(x)) * ground_.size() + slot(y)];
}

void L2Structure::set_label(int x, int y, const Scalar& v) {
    if (x == y) throw input_error("labels live on distinct pairs");
    if (!v.same_field(field_.zero()))
        throw input_error("label from a different field");
    labels_[static_cast<std::size_t>(slot(x)) * ground_.size() + slot(y)] = v;
}

L2Structure L2Structure::from_matrix(const Matrix& A) {
    if (!A.is_square()) throw input_error("structures come from square matrices");
    L2Structure g(IndexSet::range(A.rows()), A.field());
    for (int i = 1; i <= A.rows(); ++i)
        for (int j = 1; j <= A.cols(); ++j)
            if (i != j) g.set_label(i, j, A.at(i, j));
    return g;
}

Matrix L2Structure::to_matrix() const {
    int k = ground_.size();
    if (ground_ != IndexSet::range(k))
        throw input_error("matrix form needs ground {1..k}; relabel first");
    Matrix m(k, k, field_);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (i != j) m.set(i, j, label(i, j));
    return m;
}

bool L2Structure::is_symmetric() const {
    for (int x : ground_)
        for (int y : ground_) {
            if (x >= y) continue;
            if (label(x, y) != label(y, x)) return false;
        }
    return true;
}

L2Structure L2Structure::induce(const IndexSet& sub) const {
    if (!sub.is_subset_of(ground_))
        throw input_error("induced ground must lie inside the structure");
    L2Structure g(sub, field_);
    for (int x : sub)
        for (int y : sub)
            if (x != y) g.set_label(x, y, label(x, y));
    return g;
}

bool L2Structure::is_clan(const IndexSet& X) const {
    if (X.empty()) throw input_error("clans are nonempty");
    if (!X.is_subset_of(ground_))
        throw input_error("clan candidate outside ground");
    // Comparing everyone against one fixed a suffices.
    int a = X.min();
    IndexSet outside = ground_.set_difference(X);
    for (int b : X) {
        if (b == a) continue;
        for (int z : outside)
            if (label(a, z) != label(b, z) || label(z, a) != label(z, b))
                return false;
    }
    return true;
}

SetFamily L2Structure::clans() const {
    int k = ground_.size();
    if (k < 1) throw input_error("clan scan needs a nonempty ground");
    if (k > 24) throw input_error("clan scan capped at ground size 24");
    SetFamily out(ground_);
    const auto& elems = ground_.elements();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
        std::vector<int> members;
        for (int i = 0; i < k; ++i)
            if (m >> i & 1) members.push_back(elems[static_cast<std::size_t>(i)]);
        IndexSet X(std::move(members));
        if (is_clan(X)) out.add(X);
    }
    return out;
}

bool L2Structure::operator==(const L2Structure& o) const {
    return ground_ == o.ground_ && field_ == o.field_ && labels_ == o.labels_;
}

} // namespace hlbip
