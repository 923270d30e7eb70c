#include <hlbip/io.hpp>

#include <json.hpp>

namespace hlbip {

namespace {

using ojson = nlohmann::ordered_json;

nlohmann::json parse_text(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("document is not valid JSON: ") + e.what());
    }
}

const nlohmann::json& field_of(const nlohmann::json& j, const char* key) {
    if (!j.is_object())
        throw input_error("document root must be an object");
    auto it = j.find(key);
    if (it == j.end())
        throw input_error(std::string("document lacks key \"") + key + "\"");
    return *it;
}

int int_of(const nlohmann::json& v, const char* what) {
    if (!v.is_number_integer())
        throw input_error(std::string(what) + " must be an integer");
    return v.get<int>();
}

IndexSet index_set_of(const nlohmann::json& v, const char* what) {
    if (!v.is_array())
        throw input_error(std::string(what) + " must be an array of indices");
    std::vector<int> elems;
    for (const auto& e : v) elems.push_back(int_of(e, what));
    return IndexSet(std::move(elems));
}

std::vector<std::pair<int, int>> pair_list_of(const nlohmann::json& v,
                                              const char* what) {
    if (!v.is_array())
        throw input_error(std::string(what) + " must be an array of pairs");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : v) {
        if (!e.is_array() || e.size() != 2)
            throw input_error(std::string(what) + " entries must be pairs");
        out.emplace_back(int_of(e[0], what), int_of(e[1], what));
    }
    return out;
}

ojson to_json(const IndexSet& s) {
    ojson a = ojson::array();
    for (int x : s) a.push_back(x);
    return a;
}

std::string finish(const ojson& j) { return j.dump() + "\n"; }

} // namespace

Matrix parse_matrix(const std::string& text, const FieldSpec& field) {
    nlohmann::json j = parse_text(text);
    int n = int_of(field_of(j, "n"), "\"n\"");
    if (n < 1) throw input_error("matrix size must be at least 1");
    const auto& entries = field_of(j, "entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != n)
        throw input_error("\"entries\" must hold n rows");
    Matrix A(n, n, field);
    for (int i = 1; i <= n; ++i) {
        const auto& row = entries[static_cast<std::size_t>(i - 1)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw input_error("matrix row " + std::to_string(i)
                              + " must hold n entries");
        for (int jx = 1; jx <= n; ++jx) {
            const auto& cell = row[static_cast<std::size_t>(jx - 1)];
            if (cell.is_number_integer())
                A.set(i, jx, field.from_int(cell.get<long>()));
            else if (cell.is_string())
                A.set(i, jx, field.parse(cell.get<std::string>()));
            else
                throw input_error("matrix entries must be integers or strings");
        }
    }
    return A;
}

Graph parse_graph(const std::string& text) {
    nlohmann::json j = parse_text(text);
    int n = int_of(field_of(j, "n"), "\"n\"");
    return Graph::from_edges(n, pair_list_of(field_of(j, "edges"), "\"edges\""));
}

Tournament parse_tournament(const std::string& text) {
    nlohmann::json j = parse_text(text);
    int n = int_of(field_of(j, "n"), "\"n\"");
    return Tournament::from_arcs(n, pair_list_of(field_of(j, "arcs"), "\"arcs\""));
}

BipartitionFamily parse_family(const std::string& text) {
    nlohmann::json j = parse_text(text);
    int n = int_of(field_of(j, "n"), "\"n\"");
    BipartitionFamily F(n);
    const auto& list = field_of(j, "bipartitions");
    if (!list.is_array())
        throw input_error("\"bipartitions\" must be an array");
    for (const auto& e : list) {
        if (!e.is_array() || e.size() != 2)
            throw input_error("each bipartition must hold two sides");
        IndexSet a = index_set_of(e[0], "bipartition side");
        IndexSet b = index_set_of(e[1], "bipartition side");
        Bipartition bp = Bipartition::of(a, n); // validates a itself
        if (a.complement_in(n) != b)
            throw input_error("sides " + a.str() + " and " + b.str()
                              + " do not partition the ground set");
        F.add(bp);
    }
    return F;
}

SetFamily parse_set_family(const std::string& text) {
    nlohmann::json j = parse_text(text);
    SetFamily P(index_set_of(field_of(j, "ground"), "\"ground\""));
    const auto& list = field_of(j, "members");
    if (!list.is_array())
        throw input_error("\"members\" must be an array");
    for (const auto& e : list) P.add(index_set_of(e, "member"));
    return P;
}

std::string emit(const Matrix& A) {
    ojson j;
    if (!A.is_square()) throw input_error("matrix documents are square");
    j["n"] = A.rows();
    ojson rows = ojson::array();
    for (int i = 1; i <= A.rows(); ++i) {
        ojson row = ojson::array();
        for (int jx = 1; jx <= A.cols(); ++jx) row.push_back(A.at(i, jx).str());
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return finish(j);
}

std::string emit(const Graph& G) {
    ojson j;
    j["n"] = G.vertex_count();
    ojson edges = ojson::array();
    for (auto [x, y] : G.edges()) edges.push_back(ojson::array({x, y}));
    j["edges"] = std::move(edges);
    return finish(j);
}

std::string emit(const Tournament& T) {
    ojson j;
    j["n"] = T.vertex_count();
    ojson arcs = ojson::array();
    for (auto [x, y] : T.arcs()) arcs.push_back(ojson::array({x, y}));
    j["arcs"] = std::move(arcs);
    return finish(j);
}

std::string emit(const BipartitionFamily& F) {
    ojson j;
    j["n"] = F.ground_size();
    ojson list = ojson::array();
    for (const Bipartition& b : F)
        list.push_back(ojson::array({to_json(b.first()), to_json(b.second())}));
    j["bipartitions"] = std::move(list);
    return finish(j);
}

std::string emit(const SetFamily& P) {
    ojson j;
    j["ground"] = to_json(P.ground());
    ojson list = ojson::array();
    for (const IndexSet& s : P) list.push_back(to_json(s));
    j["members"] = std::move(list);
    return finish(j);
}

std::string emit(const AxiomReport& r) {
    ojson j;
    j["passed"] = r.passed;
    ojson list = ojson::array();
    for (const AxiomViolation& v : r.violations) {
        ojson e;
        e["axiom"] = std::string(axiom_name(v.axiom));
        ojson w = ojson::array();
        for (const std::string& s : v.witnesses) w.push_back(s);
        e["witnesses"] = std::move(w);
        e["missing"] = v.missing;
        list.push_back(std::move(e));
    }
    j["violations"] = std::move(list);
    return finish(j);
}

} // namespace hlbip
