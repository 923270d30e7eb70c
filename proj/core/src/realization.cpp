#include <hlbip/realization.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

namespace hlbip {

PartitiveTree::PartitiveTree(std::vector<TreeNode> nodes, int root, SetFamily family)
    : nodes_(std::move(nodes)), root_(root), family_(std::move(family)) {
    if (root_ < 0 || root_ >= static_cast<int>(nodes_.size()))
        throw internal_error("tree root out of range");
}

bool PartitiveTree::has_linear_node() const {
    for (const TreeNode& n : nodes_)
        if (n.kind == NodeKind::linear) return true;
    return false;
}

SetFamily strong_members(const SetFamily& P) {
    AxiomReport rep = check_partitive(P, true);
    if (!rep.passed)
        throw input_error("family is not weakly partitive; "
                          + describe(rep.violations.front()));
    SetFamily out(P.ground());
    for (const IndexSet& x : P) {
        bool strong = true;
        for (const IndexSet& y : P)
            if (x.overlaps(y)) { strong = false; break; }
        if (strong) out.add(x);
    }
    return out;
}

namespace {

bool mask_is_interval(std::uint32_t mask, const std::vector<int>& position) {
    int lo = 1 << 30, hi = -1, count = 0;
    for (int i = 0; i < static_cast<int>(position.size()); ++i) {
        if (!(mask >> i & 1)) continue;
        lo = std::min(lo, position[static_cast<std::size_t>(i)]);
        hi = std::max(hi, position[static_cast<std::size_t>(i)]);
        ++count;
    }
    return hi - lo + 1 == count;
}

} // namespace

PartitiveTree build_tree(const SetFamily& P) {
    SetFamily strong = strong_members(P); // also validates the precondition
    std::vector<IndexSet> sets(strong.begin(), strong.end());
    // Parents must precede children: size-descending order guarantees it.
    std::sort(sets.begin(), sets.end(), [](const IndexSet& a, const IndexSet& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    if (sets.empty() || sets.front() != P.ground())
        throw internal_error("ground set is not the top strong member");

    std::vector<TreeNode> nodes(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) nodes[i].member = sets[i];
    for (std::size_t i = 1; i < sets.size(); ++i) {
        int parent = -1;
        // Smallest strict superset = nearest earlier superset in this order.
        for (int j = static_cast<int>(i) - 1; j >= 0; --j)
            if (sets[i].is_subset_of(sets[static_cast<std::size_t>(j)])) {
                parent = j;
                break;
            }
        if (parent < 0) throw internal_error("strong member with no superset");
        nodes[i].parent = parent;
        nodes[static_cast<std::size_t>(parent)].children.push_back(static_cast<int>(i));
    }

    for (std::size_t u = 0; u < nodes.size(); ++u) {
        TreeNode& nd = nodes[u];
        std::sort(nd.children.begin(), nd.children.end(), [&](int a, int b) {
            return nodes[static_cast<std::size_t>(a)].member
                 < nodes[static_cast<std::size_t>(b)].member;
        });
        int k = static_cast<int>(nd.children.size());
        if (k == 0) {
            if (nd.member.size() != 1)
                throw internal_error("leaf node is not a singleton");
            nd.kind = NodeKind::leaf;
            continue;
        }
        if (k == 1) throw internal_error("internal node with one child");

        std::vector<IndexSet> child_sets;
        IndexSet covered;
        for (int c : nd.children) {
            const IndexSet& m = nodes[static_cast<std::size_t>(c)].member;
            if (covered.intersects(m))
                throw internal_error("children fail to be disjoint");
            covered = covered.set_union(m);
            child_sets.push_back(m);
        }
        if (covered != nd.member)
            throw internal_error("children fail to cover their parent");

        if (k == 2) { nd.kind = NodeKind::complete; continue; }
        if (k > 20) throw input_error("node arity beyond the classification scan");

        bool all_in = true, none_in = true;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
            int pc = std::popcount(mask);
            if (pc < 2 || pc > k - 1) continue;
            IndexSet un;
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1) un = un.set_union(child_sets[static_cast<std::size_t>(i)]);
            if (P.contains(un)) none_in = false; else all_in = false;
        }
        if (all_in) { nd.kind = NodeKind::complete; continue; }
        if (none_in) { nd.kind = NodeKind::prime; continue; }

        // Pair-union graph must be a simple path over the children.
        std::vector<std::vector<char>> adj(static_cast<std::size_t>(k),
                                           std::vector<char>(static_cast<std::size_t>(k), 0));
        std::vector<int> deg(static_cast<std::size_t>(k), 0);
        int edge_count = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (P.contains(child_sets[static_cast<std::size_t>(i)]
                                   .set_union(child_sets[static_cast<std::size_t>(j)]))) {
                    adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
                    adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
                    ++deg[static_cast<std::size_t>(i)];
                    ++deg[static_cast<std::size_t>(j)];
                    ++edge_count;
                }
        std::vector<int> ends;
        bool degrees_ok = true;
        for (int i = 0; i < k; ++i) {
            if (deg[static_cast<std::size_t>(i)] == 1) ends.push_back(i);
            if (deg[static_cast<std::size_t>(i)] > 2 || deg[static_cast<std::size_t>(i)] == 0)
                degrees_ok = false;
        }
        if (!degrees_ok || edge_count != k - 1 || ends.size() != 2)
            throw internal_error("children admit no node kind");

        // Orient the path so the first child precedes the last in set order.
        int start = ends[0], finish = ends[1];
        if (child_sets[static_cast<std::size_t>(finish)]
            < child_sets[static_cast<std::size_t>(start)])
            std::swap(start, finish);
        std::vector<int> order_pos(static_cast<std::size_t>(k), -1);
        std::vector<int> walk{start};
        order_pos[static_cast<std::size_t>(start)] = 0;
        int prev = -1, cur = start;
        for (int step = 1; step < k; ++step) {
            int next = -1;
            for (int j = 0; j < k; ++j)
                if (adj[static_cast<std::size_t>(cur)][static_cast<std::size_t>(j)] && j != prev) {
                    next = j;
                    break;
                }
            if (next < 0 || order_pos[static_cast<std::size_t>(next)] >= 0)
                throw internal_error("children admit no node kind");
            order_pos[static_cast<std::size_t>(next)] = step;
            walk.push_back(next);
            prev = cur;
            cur = next;
        }

        // P must contain exactly the order intervals among the child unions.
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
            int pc = std::popcount(mask);
            if (pc < 2 || pc > k - 1) continue;
            IndexSet un;
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1) un = un.set_union(child_sets[static_cast<std::size_t>(i)]);
            if (P.contains(un) != mask_is_interval(mask, order_pos))
                throw internal_error("children admit no node kind");
        }
        nd.kind = NodeKind::linear;
        for (int w : walk)
            nd.linear_order.push_back(nd.children[static_cast<std::size_t>(w)]);
    }
    return PartitiveTree(std::move(nodes), 0, P);
}

namespace {

const std::vector<long>& complete_values() {
    static const std::vector<long> v{1, 0, -1};
    return v;
}

// Ordered (forward, backward) pairs, distinct entries.
const std::vector<std::pair<long, long>>& linear_pairs() {
    static const std::vector<std::pair<long, long>> v{
        {1, -1}, {-1, 1}, {1, 0}, {0, 1}, {0, -1}, {-1, 0}};
    return v;
}

// Labels for the child pairs (0,1), (0,2), (1,2): permutations of (0,1,-1).
const std::vector<std::array<long, 3>>& triangle_labels() {
    static const std::vector<std::array<long, 3>> v{
        {0, 1, -1}, {0, -1, 1}, {1, 0, -1}, {1, -1, 0}, {-1, 0, 1}, {-1, 1, 0}};
    return v;
}

// (adjacent, distant) label pairs for the path template.
const std::vector<std::pair<long, long>>& path_labels() {
    static const std::vector<std::pair<long, long>> v{
        {1, 0}, {0, 1}, {1, -1}, {-1, 1}, {0, -1}, {-1, 0}};
    return v;
}

int variant_count(const TreeNode& nd) {
    switch (nd.kind) {
        case NodeKind::leaf: return 1;
        case NodeKind::complete: return 3;
        case NodeKind::linear: return 6;
        case NodeKind::prime: return 6;
    }
    throw internal_error("unknown node kind");
}

// Parent-child label combinations that would fuse members across the child's
// boundary into accidental clans. Three fusing shapes exist: equal constants
// on nested complete nodes, an equal or reversed pair on nested linear nodes,
// and a linear child reusing the constant of a complete parent in either
// slot. Everything else is blocked by a non-uniform observer regardless of
// the labels chosen.
bool variant_allowed(const PartitiveTree& tree, int id, int v,
                     const std::vector<int>& choice) {
    const TreeNode& nd = tree.node(id);
    if (nd.parent < 0) return true;
    const TreeNode& pd = tree.node(nd.parent);
    int pv = choice[static_cast<std::size_t>(nd.parent)];
    if (nd.kind == NodeKind::complete && pd.kind == NodeKind::complete)
        return complete_values()[static_cast<std::size_t>(v)]
            != complete_values()[static_cast<std::size_t>(pv)];
    if (nd.kind == NodeKind::linear && pd.kind == NodeKind::linear) {
        auto mine = linear_pairs()[static_cast<std::size_t>(v)];
        auto theirs = linear_pairs()[static_cast<std::size_t>(pv)];
        return mine != theirs
            && mine != std::make_pair(theirs.second, theirs.first);
    }
    if (nd.kind == NodeKind::linear && pd.kind == NodeKind::complete) {
        long c = complete_values()[static_cast<std::size_t>(pv)];
        auto mine = linear_pairs()[static_cast<std::size_t>(v)];
        return mine.first != c && mine.second != c;
    }
    return true;
}

L2Structure build_structure(const PartitiveTree& tree, const std::vector<int>& choice) {
    L2Structure g(tree.ground(), FieldSpec::rationals());
    std::array<Scalar, 3> val{Scalar::rational(-1), Scalar::rational(0),
                              Scalar::rational(1)};
    auto scalar_of = [&](long x) -> const Scalar& {
        return val[static_cast<std::size_t>(x + 1)];
    };
    for (int id = 0; id < tree.node_count(); ++id) {
        const TreeNode& nd = tree.node(id);
        if (nd.kind == NodeKind::leaf) continue;
        int k = static_cast<int>(nd.children.size());
        int v = choice[static_cast<std::size_t>(id)];
        // Ordered children: path order for linear nodes, set order otherwise.
        const std::vector<int>& ordered =
            nd.kind == NodeKind::linear ? nd.linear_order : nd.children;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (i == j) continue;
                long lab;
                switch (nd.kind) {
                    case NodeKind::complete:
                        lab = complete_values()[static_cast<std::size_t>(v)];
                        break;
                    case NodeKind::linear: {
                        auto [fwd, bwd] = linear_pairs()[static_cast<std::size_t>(v)];
                        lab = i < j ? fwd : bwd;
                        break;
                    }
                    case NodeKind::prime:
                        if (k == 3) {
                            int lo = std::min(i, j), hi = std::max(i, j);
                            int slot = lo == 0 ? (hi == 1 ? 0 : 1) : 2;
                            lab = triangle_labels()[static_cast<std::size_t>(v)]
                                                   [static_cast<std::size_t>(slot)];
                        } else {
                            auto [adj, dist] = path_labels()[static_cast<std::size_t>(v)];
                            lab = (i > j ? i - j : j - i) == 1 ? adj : dist;
                        }
                        break;
                    default:
                        throw internal_error("unexpected node kind");
                }
                const Scalar& s = scalar_of(lab);
                const IndexSet& from = tree.node(ordered[static_cast<std::size_t>(i)]).member;
                const IndexSet& to = tree.node(ordered[static_cast<std::size_t>(j)]).member;
                for (int x : from)
                    for (int y : to) g.set_label(x, y, s);
            }
    }
    return g;
}

} // namespace

L2Structure assign_labels(const PartitiveTree& tree, bool symmetric) {
    if (symmetric && tree.has_linear_node())
        throw input_error("symmetric labeling requires a tree without linear nodes");

    // Greedy pass; parents carry smaller ids, so choices are ready in order.
    std::vector<int> choice(static_cast<std::size_t>(tree.node_count()), 0);
    for (int id = 0; id < tree.node_count(); ++id) {
        int picked = -1;
        for (int v = 0; v < variant_count(tree.node(id)); ++v)
            if (variant_allowed(tree, id, v, choice)) { picked = v; break; }
        if (picked < 0) throw internal_error("greedy labeling found no variant");
        choice[static_cast<std::size_t>(id)] = picked;
    }
    L2Structure g = build_structure(tree, choice);
    if (g.clans() == tree.family()) return g;

    // Exhaustive fallback over all per-node variants, bounded.
    std::vector<int> ids;
    for (int id = 0; id < tree.node_count(); ++id)
        if (tree.node(id).kind != NodeKind::leaf) ids.push_back(id);
    std::vector<int> idx(ids.size(), 0);
    std::fill(choice.begin(), choice.end(), 0);
    long budget = 250000;
    for (;;) {
        for (std::size_t i = 0; i < ids.size(); ++i)
            choice[static_cast<std::size_t>(ids[i])] = idx[i];
        L2Structure cand = build_structure(tree, choice);
        if (cand.clans() == tree.family()) return cand;
        if (--budget <= 0)
            throw internal_error("label search exhausted its budget");
        std::size_t pos = 0;
        while (pos < ids.size()) {
            if (++idx[pos] < variant_count(tree.node(ids[pos]))) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == ids.size())
            throw internal_error("no label assignment realizes the family");
    }
}

Matrix realize(const BipartitionFamily& F) {
    AxiomReport weak = check_weakly_bipartitive(F);
    if (!weak.passed)
        throw input_error("family is not weakly bipartitive; "
                          + describe(weak.violations.front()));
    int n = F.ground_size();
    bool symmetric = check_bipartitive(F).passed;
    PartitiveTree tree = build_tree(restrict_to_sets(F, n));
    if (symmetric && tree.has_linear_node())
        throw internal_error("bipartitive family produced a linear node");
    L2Structure g = assign_labels(tree, symmetric);
    if (symmetric && !g.is_symmetric())
        throw internal_error("symmetric labeling produced an asymmetric structure");

    Matrix M = g.to_matrix();
    Matrix A(n, n, M.field());
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) A.set(i, j, M.at(i, j));
    Scalar one = Scalar::rational(1);
    for (int j = 1; j < n; ++j) {
        A.set(n, j, one);
        A.set(j, n, one);
    }
    return A;
}

} // namespace hlbip
