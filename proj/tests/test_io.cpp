#include <hlbip/generate.hpp>
#include <hlbip/graphs.hpp>
#include <hlbip/hl.hpp>
#include <hlbip/io.hpp>

#include <doctest.h>

using namespace hlbip;

TEST_CASE("matrix documents") {
    FieldSpec q = FieldSpec::rationals();
    Matrix A = parse_matrix(R"({"n":2,"entries":[[0,"1/2"],["-1",3]]})", q);
    CHECK(A.at(1, 2).str() == "1/2");
    CHECK(A.at(2, 1).str() == "-1");
    CHECK(A.at(2, 2).str() == "3");
    CHECK(emit(A) == "{\"n\":2,\"entries\":[[\"0\",\"1/2\"],[\"-1\",\"3\"]]}\n");
    CHECK(parse_matrix(emit(A), q) == A);

    Matrix P = parse_matrix(R"({"n":2,"entries":[[1,2],[3,4]]})", FieldSpec::prime(5));
    CHECK(P.at(2, 2).residue() == 4);
    CHECK(parse_matrix(emit(P), FieldSpec::prime(5)) == P);

    CHECK_THROWS_AS(parse_matrix("{", q), input_error);
    CHECK_THROWS_AS(parse_matrix(R"({"n":2,"entries":[[1,2]]})", q), input_error);
    CHECK_THROWS_AS(parse_matrix(R"({"n":2,"entries":[[1],[2,3]]})", q), input_error);
    CHECK_THROWS_AS(parse_matrix(R"({"n":0,"entries":[]})", q), input_error);
    CHECK_THROWS_AS(parse_matrix(R"({"entries":[[1]]})", q), input_error);
    CHECK_THROWS_AS(parse_matrix(R"({"n":1,"entries":[["1/0"]]})", q), input_error);
}

TEST_CASE("graph documents") {
    Graph G = parse_graph(R"({"n":4,"edges":[[2,1],[3,4]]})");
    CHECK(G == Graph::from_edges(4, {{1, 2}, {3, 4}}));
    CHECK(emit(G) == "{\"n\":4,\"edges\":[[1,2],[3,4]]}\n");
    CHECK(parse_graph(emit(G)) == G);
    CHECK(emit(Graph(2)) == "{\"n\":2,\"edges\":[]}\n");
    CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[1,1]]})"), input_error);
    CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[1,5]]})"), input_error);
    CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[1]]})"), input_error);
}

TEST_CASE("tournament documents") {
    Tournament T = parse_tournament(R"({"n":3,"arcs":[[1,2],[2,3],[3,1]]})");
    CHECK(T.has_arc(3, 1));
    CHECK(emit(T) == "{\"n\":3,\"arcs\":[[1,2],[2,3],[3,1]]}\n");
    CHECK(parse_tournament(emit(T)) == T);
    CHECK_THROWS_AS(parse_tournament(R"({"n":3,"arcs":[[1,2],[2,3]]})"),
                    input_error);
}

TEST_CASE("family documents") {
    BipartitionFamily F = parse_family(
        R"({"n":3,"bipartitions":[[[2],[1,3]],[[1],[2,3]]]})");
    CHECK(F.size() == 2);
    CHECK(F.contains(Bipartition::of(IndexSet{2}, 3)));
    CHECK(emit(F)
          == "{\"n\":3,\"bipartitions\":[[[1],[2,3]],[[1,3],[2]]]}\n");
    CHECK(parse_family(emit(F)) == F);

    // Sides must partition the ground set.
    CHECK_THROWS_AS(parse_family(R"({"n":3,"bipartitions":[[[1],[2]]]})"),
                    input_error);
    CHECK_THROWS_AS(parse_family(R"({"n":3,"bipartitions":[[[1],[1,2,3]]]})"),
                    input_error);
    CHECK_THROWS_AS(parse_family(R"({"n":3,"bipartitions":[[[],[1,2,3]]]})"),
                    input_error);
}

TEST_CASE("set family documents") {
    SetFamily P = parse_set_family(
        R"({"ground":[1,2,3],"members":[[3],[1,2],[1,2,3]]})");
    CHECK(P.size() == 3);
    CHECK(P.ground() == IndexSet::range(3));
    CHECK(emit(P)
          == "{\"ground\":[1,2,3],\"members\":[[1,2],[1,2,3],[3]]}\n");
    CHECK(parse_set_family(emit(P)) == P);
    CHECK_THROWS_AS(parse_set_family(R"({"ground":[1,2],"members":[[3]]})"),
                    input_error);
    CHECK_THROWS_AS(parse_set_family(R"({"ground":[1,2],"members":[[]]})"),
                    input_error);
}

TEST_CASE("report documents") {
    BipartitionFamily F(2);
    AxiomReport r = check_weakly_bipartitive(F);
    std::string doc = emit(r);
    CHECK(doc.find("\"passed\":false") != std::string::npos);
    CHECK(doc.find("\"axiom\":\"Q1\"") != std::string::npos);
    F.add(Bipartition::of(IndexSet{1}, 2));
    CHECK(emit(check_weakly_bipartitive(F))
          == "{\"passed\":true,\"violations\":[]}\n");
}

TEST_CASE("round-trips on random instances") {
    FieldSpec q = FieldSpec::rationals();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        int n = static_cast<int>(seed % 5) + 2;
        Graph G = random_graph(n, seed);
        CHECK(parse_graph(emit(G)) == G);
        Tournament T = random_tournament(n, seed);
        CHECK(parse_tournament(emit(T)) == T);
        Matrix A = random_rational_matrix(n, seed, false, false);
        CHECK(parse_matrix(emit(A), q) == A);
        BipartitionFamily F = random_weakly_bipartitive_family(n, seed);
        CHECK(parse_family(emit(F)) == F);
        SetFamily P = random_weakly_partitive_family(n, seed);
        CHECK(parse_set_family(emit(P)) == P);
    }
}
