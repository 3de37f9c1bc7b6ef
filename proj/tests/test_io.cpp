#include <doctest.h>

#include <set>

#include "hyprv/io.hpp"
#include "hyprv/verify.hpp"

using namespace hyprv;

TEST_CASE("matrix json round trip keeps arbitrary precision") {
    IntMatrix m(2);
    m.at(0, 0) = Int("123456789012345678901234567890");
    m.at(0, 1) = -1;
    m.at(1, 0) = 0;
    m.at(1, 1) = Int("-987654321098765432109876543210");
    json j = matrix_to_json(m);
    CHECK(j[0][0].get<std::string>() == "123456789012345678901234567890");
    CHECK(matrix_from_json(j) == m);
    // numeric entries parse too
    CHECK(matrix_from_json(json::parse("[[1,2],[3,7]]")).at(1, 1) == 7);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,2],[3]]")), Error);
}

TEST_CASE("vector and generator word json round trips") {
    IntVec v{Int(3), Int("-40000000000000000000"), Int(0)};
    CHECK(vector_from_json(vector_to_json(v)) == v);
    GeneratorWord w{{3, 1}, {-1, -1}, {1, 1}};
    CHECK(generator_word_from_json(generator_word_to_json(w)) == w);
    CHECK_THROWS_AS(generator_word_from_json(json::parse("[[1,2]]")), Error);
}

TEST_CASE("diagram json: d=4 has 7 vertices and 14 arrows") {
    HypDiagram hyp(4);
    json j = diagram_to_json(hyp);
    CHECK(j.at("d") == 4);
    CHECK(j.at("vertex_count") == 7);
    CHECK(j.at("arrows").size() == 14);
    // d=2: the single vertex
    CHECK(diagram_to_json(HypDiagram(2)).at("vertex_count") == 1);
    // arrow endpoints are valid ids and each vertex has two outgoing arrows
    std::vector<int> outdeg(7, 0);
    for (const json& a : j.at("arrows")) {
        int from = a.at("from").get<int>();
        int to = a.at("to").get<int>();
        CHECK(from >= 0);
        CHECK(from < 7);
        CHECK(to >= 0);
        CHECK(to < 7);
        outdeg[static_cast<size_t>(from)]++;
    }
    for (int k : outdeg) CHECK(k == 2);
}

TEST_CASE("dot export carries exactly the json arrow metadata") {
    HypDiagram hyp(4);
    json j = diagram_to_json(hyp);
    std::string dot = diagram_to_dot(hyp);
    // every arrow of the json appears in the dot output with the same
    // kind/winner/loser attributes, and nothing else does
    std::multiset<std::string> expected, found;
    for (const json& a : j.at("arrows"))
        expected.insert("v" + std::to_string(a.at("from").get<int>()) + " -> v" +
                        std::to_string(a.at("to").get<int>()) + " [color=" +
                        (a.at("kind") == "t" ? std::string("red") : std::string("blue")) + ", kind=\"" +
                        a.at("kind").get<std::string>() + "\", winner=\"" +
                        std::to_string(a.at("winner").get<int>()) + "\", loser=\"" +
                        std::to_string(a.at("loser").get<int>()) + "\", label=\"" +
                        std::to_string(a.at("winner").get<int>()) + "/" +
                        std::to_string(a.at("loser").get<int>()) + "\"];");
    size_t pos = 0;
    while ((pos = dot.find("->", pos)) != std::string::npos) {
        size_t start = dot.rfind('\n', pos) + 1;
        size_t end = dot.find('\n', pos);
        std::string line = dot.substr(start, end - start);
        while (!line.empty() && line.front() == ' ') line.erase(line.begin());
        found.insert(line);
        pos = end;
    }
    CHECK(expected == found);
    // vertex labels carry the words, the empty word shown as *
    CHECK(dot.find("label=\"*\"") != std::string::npos);
    CHECK(dot.find("label=\"tb\"") != std::string::npos);
}

TEST_CASE("packed word json uses decimal strings for exponents") {
    PackedWord w = packed_atom(3, Int("123456789123456789"));
    json j = packed_word_to_json(w);
    CHECK(j[0]["block"][0][1].get<std::string>() == "123456789123456789");
    CHECK(j[0]["repeats"].get<std::string>() == "1");
}

TEST_CASE("verification reports are deterministic for a fixed config") {
    VerifyConfig cfg;
    cfg.d_max = 4;
    cfg.radius = 2;
    cfg.random_words = 50;
    cfg.decompose_words = 10;
    cfg.seed = 42;
    for (const char* suite : {"structure", "group", "orbit", "decompose"}) {
        SuiteReport a = run_suite(suite, cfg);
        SuiteReport b = run_suite(suite, cfg);
        REQUIRE(a.checks.size() == b.checks.size());
        for (size_t i = 0; i < a.checks.size(); ++i) {
            CHECK(a.checks[i].name == b.checks[i].name);
            CHECK(a.checks[i].pass == b.checks[i].pass);
            CHECK(a.checks[i].detail == b.checks[i].detail);
            CHECK(a.checks[i].pass);
        }
    }
}

TEST_CASE("reports do not depend on the worker count") {
    VerifyConfig cfg;
    cfg.d_max = 4;
    cfg.radius = 2;
    cfg.random_words = 30;
    cfg.decompose_words = 5;
    setenv("RVD_THREADS", "1", 1);
    SuiteReport serial = run_suite("orbit", cfg);
    setenv("RVD_THREADS", "4", 1);
    SuiteReport parallel = run_suite("orbit", cfg);
    unsetenv("RVD_THREADS");
    REQUIRE(serial.checks.size() == parallel.checks.size());
    for (size_t i = 0; i < serial.checks.size(); ++i) {
        CHECK(serial.checks[i].name == parallel.checks[i].name);
        CHECK(serial.checks[i].detail == parallel.checks[i].detail);
    }
}
