// hlbip: exact computation of rank-one bipartition structure.
//
// Subcommands take JSON-shaped documents (see core/include/hlbip/io.hpp for
// the schemas), write one result document to standard output and diagnostics
// to standard error. Output is canonical and byte-stable for a fixed input
// and seed. Exit codes: 0 success, 1 usage error, 2 invalid input or failed
// precondition, 3 internal inconsistency.

#include <hlbip/generate.hpp>
#include <hlbip/hl.hpp>
#include <hlbip/io.hpp>
#include <hlbip/realization.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string read_document(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hlbip::input_error("cannot read \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

hlbip::FieldSpec parse_field_flag(const std::string& flag) {
    if (flag == "q") return hlbip::FieldSpec::rationals();
    if (flag.rfind("gf:", 0) == 0)
        return hlbip::FieldSpec::prime(std::stoull(flag.substr(3)));
    throw hlbip::input_error("field must be q or gf:<prime>");
}

std::string field_flag_shape(const std::string& flag) {
    if (flag == "q") return {};
    if (flag.rfind("gf:", 0) == 0 && flag.size() > 3
        && flag.find_first_not_of("0123456789", 3) == std::string::npos
        && flag.size() <= 3 + 20)
        return {};
    return "must be q or gf:<prime>";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact splits, bi-joins and rank-one bipartition families"};
    app.require_subcommand(1);

    std::string graph_path, tournament_path, matrix_path, family_path,
        set_family_path, field_flag = "q", gen_kind;
    int vertex = 1, gen_n = 0, gen_count = 1;
    std::uint64_t seed = 0;

    auto* sc_splits = app.add_subcommand("splits", "all splits of a graph");
    sc_splits->add_option("--graph", graph_path, "graph document")->required();

    auto* sc_bijoins = app.add_subcommand("bijoins",
                                          "all bi-joins of a graph or tournament");
    auto* bj_graph = sc_bijoins->add_option("--graph", graph_path, "graph document");
    auto* bj_tour = sc_bijoins->add_option("--tournament", tournament_path,
                                           "tournament document");
    bj_graph->excludes(bj_tour);
    bj_tour->excludes(bj_graph);

    auto* sc_hl = app.add_subcommand("hl",
                                     "all bipartitions with both cross blocks of rank at most one");
    sc_hl->add_option("--matrix", matrix_path, "matrix document")->required();
    sc_hl->add_option("--field", field_flag, "q (default) or gf:<prime>")
        ->check(CLI::Validator(field_flag_shape, "FIELD"));

    auto* sc_check = app.add_subcommand("check-family",
                                        "Q1/Q2/Q3 axiom report for a bipartition family");
    sc_check->add_option("--family", family_path, "family document")->required();

    auto* sc_check_set = app.add_subcommand("check-set-family",
                                            "P1/P2/P3 axiom report for a set family");
    sc_check_set->add_option("--set-family", set_family_path, "set-family document")
        ->required();

    auto* sc_normalize = app.add_subcommand("normalize",
                                            "equivalent matrix with all-ones row and column at the chosen vertex");
    sc_normalize->add_option("--matrix", matrix_path, "matrix document")->required();
    sc_normalize->add_option("--vertex", vertex, "vertex to normalize at (default 1)");
    sc_normalize->add_option("--seed", seed, "diagonal sampling seed (default 0)");

    auto* sc_realize = app.add_subcommand("realize",
                                          "matrix over {-1,0,1} whose rank-one bipartition family is the input");
    sc_realize->add_option("--family", family_path, "family document")->required();

    auto* sc_verify = app.add_subcommand("verify",
                                         "axiom report for the family of an irreducible matrix");
    sc_verify->add_option("--matrix", matrix_path, "matrix document")->required();
    sc_verify->add_option("--field", field_flag, "q (default) or gf:<prime>")
        ->check(CLI::Validator(field_flag_shape, "FIELD"));

    auto* sc_gen = app.add_subcommand("gen", "deterministic random instances, one per line");
    sc_gen->add_option("--kind", gen_kind, "matrix|graph|tournament|family|set-family")
        ->required()
        ->check(CLI::IsMember({"matrix", "graph", "tournament", "family", "set-family"}));
    sc_gen->add_option("--n", gen_n, "ground size")->required();
    sc_gen->add_option("--seed", seed, "seed (default 0)");
    sc_gen->add_option("--count", gen_count, "instances to emit (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(sc_splits)) {
            hlbip::Graph G = hlbip::parse_graph(read_document(graph_path));
            std::cout << hlbip::emit(hlbip::splits(G));
        } else if (app.got_subcommand(sc_bijoins)) {
            if (bj_graph->count() + bj_tour->count() != 1)
                throw hlbip::input_error("bijoins needs exactly one of --graph, --tournament");
            if (bj_graph->count()) {
                hlbip::Graph G = hlbip::parse_graph(read_document(graph_path));
                std::cout << hlbip::emit(hlbip::bijoins(G));
            } else {
                hlbip::Tournament T =
                    hlbip::parse_tournament(read_document(tournament_path));
                std::cout << hlbip::emit(hlbip::bijoins(T));
            }
        } else if (app.got_subcommand(sc_hl)) {
            hlbip::FieldSpec field = parse_field_flag(field_flag);
            hlbip::Matrix A = hlbip::parse_matrix(read_document(matrix_path), field);
            std::cout << hlbip::emit(hlbip::hl_family(A));
        } else if (app.got_subcommand(sc_check)) {
            hlbip::BipartitionFamily F =
                hlbip::parse_family(read_document(family_path));
            std::cout << hlbip::emit(hlbip::check_bipartitive(F));
        } else if (app.got_subcommand(sc_check_set)) {
            hlbip::SetFamily P =
                hlbip::parse_set_family(read_document(set_family_path));
            std::cout << hlbip::emit(hlbip::check_partitive(P, false));
        } else if (app.got_subcommand(sc_normalize)) {
            hlbip::Matrix A = hlbip::parse_matrix(read_document(matrix_path),
                                                  hlbip::FieldSpec::rationals());
            hlbip::NormalizationResult r = hlbip::normalize(A, vertex, seed);
            std::cerr << "vertex " << r.vertex << ", retries " << r.retries_used
                      << "\n";
            std::cout << hlbip::emit(r.matrix);
        } else if (app.got_subcommand(sc_realize)) {
            hlbip::BipartitionFamily F =
                hlbip::parse_family(read_document(family_path));
            std::cout << hlbip::emit(hlbip::realize(F));
        } else if (app.got_subcommand(sc_verify)) {
            hlbip::FieldSpec field = parse_field_flag(field_flag);
            hlbip::Matrix A = hlbip::parse_matrix(read_document(matrix_path), field);
            std::cout << hlbip::emit(hlbip::verify_forward(A));
        } else if (app.got_subcommand(sc_gen)) {
            if (gen_count < 1)
                throw hlbip::input_error("count must be at least 1");
            for (int i = 0; i < gen_count; ++i) {
                std::uint64_t s = hlbip::mix_seed(seed, static_cast<std::uint64_t>(i));
                if (gen_kind == "matrix")
                    std::cout << hlbip::emit(
                        hlbip::random_sign_matrix(gen_n, s, false, true));
                else if (gen_kind == "graph")
                    std::cout << hlbip::emit(hlbip::random_graph(gen_n, s));
                else if (gen_kind == "tournament")
                    std::cout << hlbip::emit(hlbip::random_tournament(gen_n, s));
                else if (gen_kind == "family")
                    std::cout << hlbip::emit(
                        hlbip::random_weakly_bipartitive_family(gen_n, s));
                else
                    std::cout << hlbip::emit(
                        hlbip::random_weakly_partitive_family(gen_n, s));
            }
        }
        return 0;
    } catch (const hlbip::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const hlbip::internal_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    }
}
