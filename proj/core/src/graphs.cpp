#include <hlbip/graphs.hpp>

#include <set>

namespace hlbip {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) throw input_error("graphs need at least one vertex");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [x, y] : edges) g.add_edge(x, y);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw input_error("cycles need at least three vertices");
    Graph g = path(n);
    g.add_edge(n, 1);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
}

bool Graph::has_edge(int x, int y) const {
    if (x < 1 || x > n_ || y < 1 || y > n_)
        throw input_error("vertex outside graph");
    if (x == y) return false;
    return adj_[pos(x, y)] != 0;
}

void Graph::add_edge(int x, int y) {
    if (x < 1 || x > n_ || y < 1 || y > n_)
        throw input_error("edge endpoint outside vertex range");
    if (x == y) throw input_error("loops are not allowed");
    adj_[pos(x, y)] = adj_[pos(y, x)] = 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (adj_[pos(i, j)]) out.emplace_back(i, j);
    return out;
}

IndexSet Graph::neighbors(int x) const {
    std::vector<int> v;
    for (int y = 1; y <= n_; ++y)
        if (y != x && has_edge(x, y)) v.push_back(y);
    return IndexSet(std::move(v));
}

Tournament Tournament::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    if (n < 1) throw input_error("tournaments need at least one vertex");
    Tournament t(n);
    for (auto [x, y] : arcs) {
        if (x < 1 || x > n || y < 1 || y > n)
            throw input_error("arc endpoint outside vertex range");
        if (x == y) throw input_error("loops are not allowed");
        if (t.arc_[t.pos(y, x)])
            throw input_error("both orientations of pair {" + std::to_string(x)
                              + "," + std::to_string(y) + "} present");
        if (t.arc_[t.pos(x, y)])
            throw input_error("duplicate arc (" + std::to_string(x) + ","
                              + std::to_string(y) + ")");
        t.arc_[t.pos(x, y)] = 1;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!t.arc_[t.pos(i, j)] && !t.arc_[t.pos(j, i)])
                throw input_error("pair {" + std::to_string(i) + ","
                                  + std::to_string(j) + "} has no arc");
    return t;
}

Tournament Tournament::transitive(int n) {
    if (n < 1) throw input_error("tournaments need at least one vertex");
    Tournament t(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) t.arc_[t.pos(i, j)] = 1;
    return t;
}

bool Tournament::has_arc(int x, int y) const {
    if (x < 1 || x > n_ || y < 1 || y > n_)
        throw input_error("vertex outside tournament");
    if (x == y) return false;
    return arc_[pos(x, y)] != 0;
}

std::vector<std::pair<int, int>> Tournament::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (i != j && arc_[pos(i, j)]) out.emplace_back(i, j);
    return out;
}

IndexSet Tournament::out_neighbors(int x) const {
    std::vector<int> v;
    for (int y = 1; y <= n_; ++y)
        if (y != x && has_arc(x, y)) v.push_back(y);
    return IndexSet(std::move(v));
}

IndexSet Tournament::in_neighbors(int x) const {
    std::vector<int> v;
    for (int y = 1; y <= n_; ++y)
        if (y != x && has_arc(y, x)) v.push_back(y);
    return IndexSet(std::move(v));
}

Matrix adjacency_matrix(const Graph& G) {
    int n = G.vertex_count();
    Matrix A(n, n, FieldSpec::rationals());
    Scalar one = Scalar::rational(1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && G.has_edge(i, j)) A.set(i, j, one);
    return A;
}

Matrix seidel_matrix(const Graph& G) {
    int n = G.vertex_count();
    Matrix S(n, n, FieldSpec::rationals());
    Scalar plus = Scalar::rational(1), minus = Scalar::rational(-1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) S.set(i, j, G.has_edge(i, j) ? minus : plus);
    return S;
}

Matrix seidel_matrix(const Tournament& T) {
    int n = T.vertex_count();
    Matrix S(n, n, FieldSpec::rationals());
    Scalar plus = Scalar::rational(1), minus = Scalar::rational(-1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) S.set(i, j, T.has_arc(i, j) ? minus : plus);
    return S;
}

namespace {

// Distinct traces N(x) ∩ Y over x in X must fit inside {∅, Y1}.
bool split_side_ok(const Graph& G, const IndexSet& X, const IndexSet& Y) {
    std::set<IndexSet> traces;
    for (int x : X) {
        IndexSet t = G.neighbors(x).set_intersection(Y);
        if (!t.empty()) traces.insert(std::move(t));
        if (traces.size() > 1) return false;
    }
    return true;
}

// Distinct traces must form {Y1} or a complementary pair {Y1, Y∖Y1}.
bool bijoin_traces_ok(std::set<IndexSet>& traces, const IndexSet& Y) {
    if (traces.size() > 2) return false;
    if (traces.size() < 2) return true;
    const IndexSet& a = *traces.begin();
    const IndexSet& b = *std::next(traces.begin());
    return !a.intersects(b) && a.set_union(b) == Y;
}

} // namespace

BipartitionFamily splits(const Graph& G) {
    int n = G.vertex_count();
    if (n < 2) throw input_error("splits need at least two vertices");
    BipartitionFamily F(n);
    for_each_bipartition(n, [&](const Bipartition& b) {
        if (split_side_ok(G, b.first(), b.second())
            && split_side_ok(G, b.second(), b.first()))
            F.add(b);
    });
    return F;
}

BipartitionFamily bijoins(const Graph& G) {
    int n = G.vertex_count();
    if (n < 2) throw input_error("bi-joins need at least two vertices");
    BipartitionFamily F(n);
    for_each_bipartition(n, [&](const Bipartition& b) {
        std::set<IndexSet> traces;
        for (int x : b.first())
            traces.insert(G.neighbors(x).set_intersection(b.second()));
        if (bijoin_traces_ok(traces, b.second())) F.add(b);
    });
    return F;
}

BipartitionFamily bijoins(const Tournament& T) {
    int n = T.vertex_count();
    if (n < 2) throw input_error("bi-joins need at least two vertices");
    BipartitionFamily F(n);
    for_each_bipartition(n, [&](const Bipartition& b) {
        std::set<IndexSet> traces;
        for (int x : b.first())
            traces.insert(T.out_neighbors(x).set_intersection(b.second()));
        if (bijoin_traces_ok(traces, b.second())) F.add(b);
    });
    return F;
}

std::optional<std::pair<IndexSet, IndexSet>> split_witness(const Graph& G,
                                                           const Bipartition& b) {
    if (b.ground_size() != G.vertex_count())
        throw input_error("bipartition ground differs from graph");
    const IndexSet& X = b.first();
    const IndexSet& Y = b.second();
    IndexSet X1, Y1;
    for (int x : X) {
        IndexSet t = G.neighbors(x).set_intersection(Y);
        if (t.empty()) continue;
        if (X1.empty()) {
            Y1 = t;
        } else if (t != Y1) {
            return std::nullopt;
        }
        X1 = X1.with(x);
    }
    if (!split_side_ok(G, Y, X)) return std::nullopt;
    return std::make_pair(X1, Y1);
}

} // namespace hlbip
