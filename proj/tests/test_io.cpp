#include <sstream>
#include <string>

#include "doctest.h"
#include "qchrom/datasets.hpp"
#include "qchrom/errors.hpp"
#include "qchrom/graph.hpp"
#include "qchrom/io.hpp"
#include "qchrom/jsoncert.hpp"
#include "qchrom/transforms.hpp"

using namespace qchrom;

TEST_CASE("dimacs round trip is canonical") {
    Graph g = gnp(20, 0.3, 7);
    std::ostringstream out;
    write_dimacs(out, g);
    std::istringstream in(out.str());
    Graph back = read_dimacs(in);
    CHECK(back == g);

    // writing again gives identical bytes
    std::ostringstream out2;
    write_dimacs(out2, back);
    CHECK(out2.str() == out.str());
}

TEST_CASE("dimacs parser rejects malformed input") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_dimacs(in);
    };
    CHECK_THROWS_AS(parse("p edge 0 0\n"), InvalidInput);
    CHECK_THROWS_AS(parse("e 1 2\n"), InvalidInput);              // edge before header
    CHECK_THROWS_AS(parse("p edge 3 1\ne 1 4\n"), InvalidInput);  // endpoint out of range
    CHECK_THROWS_AS(parse("p edge 3 1\ne 2 2\n"), InvalidInput);  // loop
    CHECK_THROWS_AS(parse(""), InvalidInput);
    Graph ok = parse("c comment\np edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(ok.vertex_count() == 3);
    CHECK(ok.edge_count() == 2);
}

TEST_CASE("graph json round trip") {
    Graph g(4, {{0, 1}, {2, 3}});
    Graph back = graph_from_json_text(graph_to_json_text(g));
    CHECK(back == g);
    CHECK_THROWS_AS(graph_from_json_text("{\"n\": 0, \"edges\": []}"), InvalidInput);
    CHECK_THROWS_AS(graph_from_json_text("nonsense"), InvalidInput);
}

TEST_CASE("read_graph_auto sniffs dimacs and json") {
    Graph g(3, {{0, 2}});
    std::istringstream json_in(graph_to_json_text(g));
    CHECK(read_graph_auto(json_in) == g);
    std::ostringstream dim;
    write_dimacs(dim, g);
    std::istringstream dim_in(dim.str());
    CHECK(read_graph_auto(dim_in) == g);
}

TEST_CASE("colouring json handles a base-1 palette") {
    ClassicalColouring one = colouring_from_json_text(
        "{\"c\": 3, \"colours\": [1, 3, 2], \"base\": 1}");
    CHECK(one.c == 3);
    CHECK(one.colour == std::vector<int>{0, 2, 1});

    ClassicalColouring zero = colouring_from_json_text("{\"c\": 2, \"colours\": [0, 1]}");
    CHECK(zero.colour == std::vector<int>{0, 1});

    // emitted form parses back unchanged
    ClassicalColouring rt = colouring_from_json_text(colouring_to_json_text(one));
    CHECK(rt.colour == one.colour);
    CHECK_THROWS_AS(colouring_from_json_text("{\"c\": 2, \"colours\": [0, 5]}"), InvalidInput);
}

TEST_CASE("certificate json: parse(emit(x)) = x for every kind") {
    Graph k2(2, {{0, 1}});
    Rank1Cert r1 = classical_to_rank1(k2, ClassicalColouring{2, {0, 1}});

    SUBCASE("rank1") {
        const std::string text = rank1_to_json_text(k2, r1);
        CertBundle b = cert_from_json_text(text);
        CHECK(b.kind == "rank1");
        CHECK(b.graph == k2);
        CHECK(b.rank1.c == 2);
        CHECK(rank1_to_json_text(b.graph, b.rank1) == text);  // byte-stable round trip
        CHECK(verify_bundle(b).pass);
    }
    SUBCASE("projector") {
        ProjectorCert pc = rank1_to_projector(r1);
        const std::string text = projector_to_json_text(k2, pc);
        CertBundle b = cert_from_json_text(text);
        CHECK(b.kind == "projector");
        CHECK(b.projector.r == 1);
        CHECK(b.projector.d == 2);
        CHECK(projector_to_json_text(b.graph, b.projector) == text);
        CHECK(verify_bundle(b).pass);
    }
    SUBCASE("general") {
        GeneralCert gc = rank1_to_general(r1);
        const std::string text = general_to_json_text(k2, gc);
        CertBundle b = cert_from_json_text(text);
        CHECK(b.kind == "general");
        CHECK(b.general.dA == 2);
        CHECK(general_to_json_text(b.graph, b.general) == text);
        CHECK(verify_bundle(b).pass);
    }
    SUBCASE("measurements") {
        MixedMeasurements mm{2, 2, {{Matrix::diag({1.0, 0.0}), Matrix::diag({0.0, 1.0})},
                                    {Matrix::diag({0.0, 1.0}), Matrix::diag({1.0, 0.0})}}};
        const std::string text = measurements_to_json_text(k2, mm);
        CertBundle b = cert_from_json_text(text);
        CHECK(b.kind == "measurements");
        CHECK(measurements_to_json_text(b.graph, b.measurements) == text);
        CHECK_THROWS_AS(verify_bundle(b), InvalidInput);  // not directly verifiable
    }
    SUBCASE("unknown kind rejected") {
        CHECK_THROWS_AS(cert_from_json_text("{\"kind\": \"sorcery\"}"), InvalidInput);
        CHECK_THROWS_AS(cert_from_json_text("]["), InvalidInput);
    }
}

TEST_CASE("verification reports serialize with their violations") {
    Graph k2(2, {{0, 1}});
    Rank1Cert bad{2, {Matrix::identity(2), Matrix::identity(2)}};
    VerifyReport r = verify_rank1(k2, bad);
    const std::string text = report_to_json_text(r);
    CHECK(text.find("\"pass\":false") != std::string::npos);
    CHECK(text.find("edge-diagonal") != std::string::npos);
}

TEST_CASE("manifest checksums gate the bundled datasets") {
    // FNV-1a test vectors pin the hash implementation
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    // the bundled files load (hash match) and parse
    auto [g, rep] = g18_dataset();
    CHECK(g.edge_count() == 44);
    ClassicalColouring col = dim4_published_colouring();
    CHECK(col.c == 4);
    CHECK(col.colour.size() == 64);
    CHECK_THROWS_AS(load_checked_data_file("no_such_file.json"), InvalidInput);
}
