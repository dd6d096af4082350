#include "greenseq/errors.hpp"
#include "greenseq/json_io.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace greenseq;
namespace ts = greenseq::testing;

TEST_CASE("quiver file parsing") {
    const QuiverSpec q = parse_quiver_json(R"({"vertices":2,"arrows":[[1,2],[1,2]]})");
    CHECK(q == ts::kronecker());
    CHECK_THROWS_AS(parse_quiver_json("not json"), MalformedInputError);
    CHECK_THROWS_AS(parse_quiver_json(R"({"vertices":2})"), MalformedInputError);
    CHECK_THROWS_AS(parse_quiver_json(R"({"vertices":2,"arrows":[[1,2],[2,1]]})"),
                    MalformedInputError);
    CHECK_THROWS_AS(parse_quiver_json(R"({"vertices":2,"arrows":[[1]]})"), MalformedInputError);
}

TEST_CASE("object encodings are byte exact") {
    ARCategory kr(ts::kronecker());
    CHECK(encode_object_string(kr.projective(1)) ==
          R"({"class":"preproj","tau":0,"vertex":1,"shift":0})");
    CHECK(encode_object_string(kr.preinjective(2, 1, -1)) ==
          R"({"class":"preinj","tau":2,"vertex":1,"shift":-1})");
    ARCategory at(ts::atilde21());
    CHECK(encode_object_string(at.regular(1, 2, 1, 3)) ==
          R"({"class":"regular","tube":1,"socle":2,"len":1,"shift":3})");
}

TEST_CASE("object round trips, including canonicalizing decode") {
    std::mt19937_64 rng(61);
    for (const QuiverSpec& q : {ts::a3(), ts::kronecker(), ts::dtilde4()}) {
        ARCategory cat(q);
        for (int trial = 0; trial < 300; ++trial) {
            const IndecObject x = ts::random_object(rng, cat);
            CHECK(decode_object_string(cat, encode_object_string(x)) == x);
        }
    }
    // a finite-type preinjective input normalizes into the preprojective chart
    ARCategory a2(ts::a2());
    const IndecObject decoded =
        decode_object_string(a2, R"({"class":"preinj","tau":0,"vertex":1,"shift":0})");
    CHECK(decoded == a2.preprojective(1, 2));
}

TEST_CASE("sequence emission matches the pinned A2 bytes and round trips") {
    ARCategory a2(ts::a2());
    const auto seqs = enumerate_mmgs(a2, 1);
    REQUIRE(seqs.size() == 2);
    const std::string expected_first =
        R"({"length":2,"steps":[)"
        R"({"pos":0,"out":{"class":"preproj","tau":0,"vertex":1,"shift":0},)"
        R"("in":{"class":"preproj","tau":0,"vertex":1,"shift":1},"color":"green"},)"
        R"({"pos":0,"out":{"class":"preproj","tau":0,"vertex":2,"shift":0},)"
        R"("in":{"class":"preproj","tau":0,"vertex":2,"shift":1},"color":"green"}]})";
    CHECK(encode_sequence_line(seqs[0]) == expected_first);

    const std::string blob = emit_sequences(seqs);
    std::size_t lines = 0;
    for (char c : blob) lines += c == '\n';
    CHECK(lines == 2);

    for (const MutationSequence& seq : seqs) {
        const MutationSequence back =
            decode_sequence_line(a2, seq.start, encode_sequence_line(seq));
        CHECK(back == seq);
    }
    CHECK(emit_sequences({}).empty());
}

TEST_CASE("sequence decoding validates the replay") {
    ARCategory a2(ts::a2());
    const auto seqs = enumerate_mmgs(a2, 1);
    std::string line = encode_sequence_line(seqs[0]);
    // mutate the position of the first step: the removed summand no longer matches
    const std::size_t pos = line.find("\"pos\":0");
    REQUIRE(pos != std::string::npos);
    line.replace(pos, 7, "\"pos\":1");
    CHECK_THROWS_AS(decode_sequence_line(a2, seqs[0].start, line), MalformedInputError);
}

TEST_CASE("dot output for the single-vertex graph") {
    ARCategory one(ts::a1());
    const ExchangeGraph g = exchange_graph(one, 1);
    const std::string dot = emit_dot(g);
    const std::string expected =
        "digraph exchange {\n"
        "  n0 [label=\"[{\\\"class\\\":\\\"preproj\\\",\\\"tau\\\":0,\\\"vertex\\\":1,\\\"shift\\\":0}]\"];\n"
        "  n1 [label=\"[{\\\"class\\\":\\\"preproj\\\",\\\"tau\\\":0,\\\"vertex\\\":1,\\\"shift\\\":1}]\"];\n"
        "  n0 -> n1 [color=green,style=solid];\n"
        "}\n";
    CHECK(dot == expected);
}

TEST_CASE("emission is deterministic across runs") {
    ARCategory a2(ts::a2());
    CHECK(emit_dot(exchange_graph(a2, 1)) == emit_dot(exchange_graph(a2, 1)));
    CHECK(emit_sequences(enumerate_mmgs(a2, 2)) == emit_sequences(enumerate_mmgs(a2, 2)));
    CHECK(emit_graph_json(exchange_graph(a2, 1)) == emit_graph_json(exchange_graph(a2, 1)));
}

TEST_CASE("silting object list encoding") {
    ARCategory a2(ts::a2());
    const SiltingObject lambda = algebra_object(a2);
    const std::string json = encode_silting_json(lambda);
    CHECK(json ==
          R"([{"class":"preproj","tau":0,"vertex":1,"shift":0},)"
          R"({"class":"preproj","tau":0,"vertex":2,"shift":0}])");
    const auto decoded = decode_object_list(a2, nlohmann::json::parse(json));
    CHECK(make_silting(a2, decoded) == lambda);
}
