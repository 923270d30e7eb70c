#ifndef HLBIP_IO_HPP
#define HLBIP_IO_HPP

#include <hlbip/families.hpp>
#include <hlbip/graphs.hpp>
#include <hlbip/matrix.hpp>

#include <string>

namespace hlbip {

// JSON-shaped documents with 1-based indices:
//   matrix     {"n": 2, "entries": [["0","1/2"],["-1","0"]]}  (ints accepted)
//   graph      {"n": 4, "edges": [[1,2],[2,3]]}
//   tournament {"n": 3, "arcs": [[1,2],[2,3],[3,1]]}
//   family     {"n": 4, "bipartitions": [[[1],[2,3,4]], ...]}
//   set-family {"ground": [1,2,3], "members": [[1],[1,2]]}
// emit output is canonical and byte-stable: fixed key order, sorted members,
// rationals as strings, compact layout, one trailing newline. parse accepts
// any member order and integer entries; parse(emit(x)) == x for every kind.

Matrix parse_matrix(const std::string& text, const FieldSpec& field);
Graph parse_graph(const std::string& text);
Tournament parse_tournament(const std::string& text);
BipartitionFamily parse_family(const std::string& text);
SetFamily parse_set_family(const std::string& text);

std::string emit(const Matrix& A);
std::string emit(const Graph& G);
std::string emit(const Tournament& T);
std::string emit(const BipartitionFamily& F);
std::string emit(const SetFamily& P);
std::string emit(const AxiomReport& r);

} // namespace hlbip

#endif
