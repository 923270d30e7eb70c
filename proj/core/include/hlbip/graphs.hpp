#ifndef HLBIP_GRAPHS_HPP
#define HLBIP_GRAPHS_HPP

#include <hlbip/families.hpp>
#include <hlbip/matrix.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace hlbip {

// Simple undirected graph on vertices 1..n.
class Graph {
public:
    explicit Graph(int n); // edgeless
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph path(int n);     // 1-2, 2-3, ...
    static Graph cycle(int n);    // path plus n-1; n >= 3
    static Graph complete(int n);

    int vertex_count() const { return n_; }
    bool has_edge(int x, int y) const;
    void add_edge(int x, int y); // rejects loops, ignores duplicates
    std::vector<std::pair<int, int>> edges() const; // sorted, i < j
    IndexSet neighbors(int x) const;

    bool operator==(const Graph&) const = default;

private:
    std::size_t pos(int x, int y) const {
        return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(n_)
             + static_cast<std::size_t>(y - 1);
    }
    int n_ = 0;
    std::vector<char> adj_;
};

// Tournament on vertices 1..n: exactly one arc per unordered pair.
class Tournament {
public:
    static Tournament from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);
    static Tournament transitive(int n); // i -> j for i < j

    int vertex_count() const { return n_; }
    bool has_arc(int x, int y) const;
    std::vector<std::pair<int, int>> arcs() const; // sorted lexicographically
    IndexSet out_neighbors(int x) const;
    IndexSet in_neighbors(int x) const;

    bool operator==(const Tournament&) const = default;

private:
    explicit Tournament(int n) : n_(n), arc_(static_cast<std::size_t>(n) * n, 0) {}
    std::size_t pos(int x, int y) const {
        return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(n_)
             + static_cast<std::size_t>(y - 1);
    }
    int n_ = 0;
    std::vector<char> arc_;
};

// 0/1 symmetric, zero diagonal, over rationals.
Matrix adjacency_matrix(const Graph& G);
// Zero diagonal, -1 on edges, +1 on non-edges.
Matrix seidel_matrix(const Graph& G);
// Zero diagonal, entry (i,j) = -1 when the arc i->j is present, +1 otherwise.
Matrix seidel_matrix(const Tournament& T);

// All splits {X,Y}: some Y1 with every trace N(x) ∩ Y, x in X, equal to Y1 or
// empty (and the mirrored condition on the other side, which for graphs is
// implied). Purely definitional; no rank computations involved.
BipartitionFamily splits(const Graph& G);
// All bi-joins: traces N(x) ∩ Y take at most two values, complementary in Y.
BipartitionFamily bijoins(const Graph& G);
// Tournament bi-joins: out-neighborhood traces on Y take at most two values,
// complementary in Y (the in-neighborhood conditions follow automatically
// since out- and in-traces partition Y).
BipartitionFamily bijoins(const Tournament& T);

// Witness pair (X1, Y1) for a split: X1 = first-side vertices with nonzero
// trace, Y1 = their common trace. Empty when there are no cross edges.
std::optional<std::pair<IndexSet, IndexSet>> split_witness(const Graph& G,
                                                           const Bipartition& b);

} // namespace hlbip

#endif
