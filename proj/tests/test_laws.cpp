#include <doctest.h>

#include "dialnet/laws.hpp"

using namespace dialnet;

TEST_CASE("all_objects enumerates every weighting") {
    // bool2: sizes 1x1 (2), 1x2 (4), 2x1 (4), 2x2 (16)
    CHECK(all_objects(bool2(), 2, 2).size() == 26);
    CHECK(all_objects(kleene3(), 1, 2).size() == 12);
    CHECK_THROWS(all_objects(nat(), 1, 1));
}

TEST_CASE("random objects are reproducible from the seed") {
    std::mt19937_64 a(9), b(9);
    for (int i = 0; i < 20; ++i) CHECK(random_object(prob(), a, 1, 3, 4) == random_object(prob(), b, 1, 3, 4));
}

TEST_CASE("kleene3 lineale laws are exhaustive over 27 triples") {
    for (const auto& r : lineale_laws(*kleene3())) {
        CAPTURE(r.name);
        CHECK(r.passed);
        CHECK(r.exhaustive);
        if (r.name.starts_with("adjunction")) CHECK(r.cases == 27);
    }
}

TEST_CASE("category laws over kleene3 include the exhaustive pass") {
    LawOptions o;
    o.category_cases = 100;
    auto rs = category_laws(kleene3(), o);
    std::size_t exhaustive = 0;
    for (const auto& r : rs) {
        CAPTURE(r.name);
        CHECK(r.passed);
        exhaustive += r.exhaustive;
    }
    CHECK(exhaustive == 2);
}

TEST_CASE("a constant imp breaks the adjunction at the object level too") {
    auto bad = with_imp(kleene3(), [](const LinealeValue&, const LinealeValue&) { return LinealeValue::kleene(1); },
                        "kleene3-const");
    LawOptions o;
    o.adjunction_cases = 50;
    bool counted = false;
    for (const auto& r : adjunction_laws(bad, o))
        if (r.name.find("|Hom") != std::string::npos) counted = !r.passed && !r.counterexample.empty();
    CHECK(counted);
}

TEST_CASE("the seed drives the counterexample deterministically") {
    auto bad = with_imp(nat(), [](const LinealeValue&, const LinealeValue&) { return LinealeValue::natural(0); },
                        "nat-const");
    auto first = lineale_laws(*bad);
    auto second = lineale_laws(*bad);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i].counterexample == second[i].counterexample);
}

TEST_CASE("describe") {
    auto a = DialObject(bool2(), FinSet(1), FinSet(2), {LinealeValue::boolean(true), LinealeValue::boolean(false)});
    CHECK(describe(a) == "1x2 [true false]");
    CHECK(describe(identity(a)) == "(f=[0], F=[0,1]) : 1x2 [true false] -> 1x2 [true false]");
}
