#include <doctest.h>

#include <algorithm>
#include <random>

#include "dialnet/error.hpp"
#include "dialnet/netio.hpp"

using namespace dialnet;

namespace {
std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

const char* water_text = R"({
  "format_version": "1",
  "lineale": "nat",
  "default_weight": "0",
  "places": ["H2", "O2", "H2O"],
  "transitions": ["t"],
  "pre": [["H2", "t", "2"], ["O2", "t", "1"]],
  "post": [["H2O", "t", "2"]]
})";
}  // namespace

TEST_CASE("hand-written file matches the built-in net") {
    CHECK(net_from_text(water_text) == water_net());
}

TEST_CASE("examples round-trip byte for byte") {
    for (const auto& name : example_names()) {
        CAPTURE(name);
        auto net = build_example(name);
        auto text = net_to_text(net);
        auto back = net_from_text(text);
        CHECK(back == net);
        CHECK(net_to_text(back) == text);
        CHECK(parse_net_document(text) == document_from_net(net));
    }
}

TEST_CASE("random nets round-trip") {
    std::mt19937_64 rng(2024);
    for (auto tag : {"bool2", "kleene3", "nat", "int", "prob", "prod(prob,int)"}) {
        auto l = lineale_for(tag);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<std::string> places, transitions;
            for (std::size_t i = 0, n = 1 + rng() % 4; i < n; ++i) places.push_back("p" + std::to_string(i));
            for (std::size_t i = 0, n = 1 + rng() % 4; i < n; ++i) transitions.push_back("t" + std::to_string(i));
            auto d = l->sample(rng, 5);
            std::vector<Arc> pre, post;
            for (const auto& p : places)
                for (const auto& t : transitions) {
                    if (rng() % 2) pre.push_back({p, t, l->sample(rng, 5)});
                    if (rng() % 2) post.push_back({p, t, l->sample(rng, 5)});
                }
            auto net = build_net(l, places, transitions, pre, post, d);
            auto text = net_to_text(net);
            CHECK(net_from_text(text) == net);
            CHECK(net_to_text(net_from_text(text)) == text);
        }
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(net_from_text("{"), parse_error);
    CHECK_THROWS_AS(net_from_text("[]"), parse_error);
    CHECK_THROWS_AS(net_from_text(R"({"format_version": "1"})"), parse_error);
    std::string bad_triple = water_text;
    bad_triple.replace(bad_triple.find(R"(["O2", "t", "1"])"), 16, R"(["O2", "t"])");
    CHECK_THROWS_AS(net_from_text(bad_triple), parse_error);
}

TEST_CASE("semantic errors name the problem") {
    std::string unknown = water_text;
    unknown.replace(unknown.find(R"("O2", "t", "1")"), 4, R"("N2")");
    try {
        net_from_text(unknown);
        FAIL("expected semantic_error");
    } catch (const semantic_error& e) {
        CHECK(std::string(e.what()).find("N2") != std::string::npos);
    }

    std::string prob_text = R"({"format_version": "1", "lineale": "prob", "default_weight": "0",
      "places": ["a"], "transitions": ["t"], "pre": [["a", "t", "2"]], "post": []})";
    try {
        net_from_text(prob_text);
        FAIL("expected semantic_error");
    } catch (const semantic_error& e) {
        CHECK(std::string(e.what()).find("pre[0]") != std::string::npos);
    }

    std::string version = water_text;
    version.replace(version.find(R"("1")"), 3, R"("2")");
    CHECK_THROWS_AS(net_from_text(version), semantic_error);

    std::string tag = water_text;
    tag.replace(tag.find(R"("nat")"), 5, R"("real")");
    CHECK_THROWS_AS(net_from_text(tag), semantic_error);
}

TEST_CASE("DOT export") {
    auto dot = export_dot(water_net(), "water");
    CHECK(dot.starts_with("digraph \"water\" {"));
    CHECK(count(dot, "shape=circle") == 3);
    CHECK(count(dot, "shape=box") == 1);
    CHECK(count(dot, "->") == 3);
    CHECK(count(dot, "label=\"2\"") == 2);
    CHECK(count(dot, "label=\"1\"") == 1);
    CHECK(dot == export_dot(water_net(), "water"));

    CHECK(export_dot(inhibitor_net()).find("label=\"-3\"") != std::string::npos);

    auto empty = build_net(nat(), {"a", "b"}, {"t"}, {}, {}, LinealeValue::natural(0));
    auto plain = export_dot(empty);
    CHECK(count(plain, "->") == 0);
    CHECK(count(plain, "shape=circle") == 2);
}

TEST_CASE("morphism documents") {
    std::string doc = std::string(R"({"source": )") + water_text + R"(, "target": )" + water_text +
                      R"(, "f": {"H2": "H2", "O2": "O2", "H2O": "H2O"}, "F": {"t": "t"}})";
    auto m = parse_morphism_document(doc, ".");
    CHECK(check_net_morphism(m.source, m.target, m.forward, m.backward).empty());

    std::string partial = std::string(R"({"source": )") + water_text + R"(, "target": )" + water_text +
                          R"(, "f": {"H2": "H2", "O2": "O2"}, "F": {"t": "t"}})";
    CHECK_THROWS_AS(parse_morphism_document(partial, "."), semantic_error);

    std::string wrong = std::string(R"({"source": )") + water_text + R"(, "target": )" + water_text +
                        R"(, "f": {"H2": "H2", "O2": "O2", "H2O": "Pt"}, "F": {"t": "t"}})";
    CHECK_THROWS_AS(parse_morphism_document(wrong, "."), semantic_error);
}
