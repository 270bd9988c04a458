#include <doctest.h>

#include "dialnet/error.hpp"
#include "dialnet/laws.hpp"

using namespace dialnet;

namespace {
LinealeValue b(bool v) { return LinealeValue::boolean(v); }
LinealeValue n(std::uint64_t v) { return LinealeValue::natural(v); }

DialObject obj(const LinealePtr& l, std::size_t rows, std::size_t cols, std::vector<LinealeValue> w) {
    return DialObject(l, FinSet(rows), FinSet(cols), std::move(w));
}
}  // namespace

TEST_CASE("morphism condition and enumeration on singletons") {
    auto t = obj(bool2(), 1, 1, {b(true)});
    auto f = obj(bool2(), 1, 1, {b(false)});
    CHECK(enumerate_morphisms(t, f).empty());
    CHECK(enumerate_morphisms(f, t).size() == 1);
    CHECK(enumerate_morphisms(t, t).size() == 1);
    auto one = FnTable::identity(FinSet(1));
    auto vs = check_morphism(t, f, one, one);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].source_weight == b(true));
    CHECK(vs[0].target_weight == b(false));
    CHECK_THROWS_AS(DialMorphism::make(t, f, one, one), invalid_morphism);
}

TEST_CASE("shape and lineale mismatches") {
    auto a = obj(bool2(), 1, 2, {b(true), b(false)});
    auto c = obj(kleene3(), 1, 1, {LinealeValue::kleene(1)});
    CHECK_THROWS_AS(compose(identity(a), identity(obj(bool2(), 2, 1, {b(true), b(true)}))), shape_mismatch);
    CHECK_THROWS_AS(check_morphism(a, c, FnTable::identity(FinSet(1)), FnTable(FinSet(1), FinSet(2), {0})),
                    tag_mismatch);
    CHECK_THROWS_AS(obj(bool2(), 1, 2, {b(true)}), shape_mismatch);
    CHECK_THROWS_AS(obj(bool2(), 1, 1, {n(1)}), tag_mismatch);
}

TEST_CASE("tensor weights against a hand computation over nat") {
    // A: 2 rows, 1 column [1; 2].  B: 1 row, 2 columns [3 5].
    auto a = obj(nat(), 2, 1, {n(1), n(2)});
    auto bb = obj(nat(), 1, 2, {n(3), n(5)});
    auto t = tensor_obj(a, bb);
    REQUIRE(t.rows().size() == 2);
    // X^V has one element; Y^U has four, g = (g(0), g(1)) in lexicographic order.
    REQUIRE(t.columns().size() == 4);
    std::vector<std::uint64_t> expect = {4, 4, 6, 6, 5, 7, 5, 7};
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(t.weights()[i] == n(expect[i]));
}

TEST_CASE("tensor of singletons multiplies the weights") {
    auto a = obj(nat(), 1, 1, {n(2)});
    auto c = obj(nat(), 1, 1, {n(3)});
    auto t = tensor_obj(a, c);
    CHECK(t.rows().size() == 1);
    CHECK(t.columns().size() == 1);
    CHECK(t.weight(0, 0) == n(5));
}

TEST_CASE("rows of the internal hom that are all e are exactly the morphisms") {
    std::mt19937_64 rng(3);
    auto l = bool2();
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_object(l, rng, 1, 2, 1);
        auto c = random_object(l, rng, 1, 2, 1);
        auto h = hom_obj(a, c);
        Exponential vu(a.rows(), c.rows());
        Exponential xy(c.columns(), a.columns());
        REQUIRE(h.rows().size() == vu.size() * xy.size());
        REQUIRE(h.columns().size() == a.rows().size() * c.columns().size());
        std::size_t morphisms = 0;
        for (std::size_t r = 0; r < h.rows().size(); ++r) {
            auto [fi, Fi] = split_pair(r, xy.size());
            auto f = vu.decode(fi);
            auto F = xy.decode(Fi);
            bool all_unit = true;
            for (std::size_t col = 0; col < h.columns().size(); ++col) {
                auto [u, y] = split_pair(col, c.columns().size());
                CHECK(h.weight(r, col) == l->imp(a.weight(u, F(y)), c.weight(f(u), y)));
                all_unit = all_unit && h.weight(r, col) == l->unit();
            }
            bool is_morphism = check_morphism(a, c, f, F).empty();
            CHECK(all_unit == is_morphism);
            morphisms += is_morphism;
        }
        CHECK(morphisms == enumerate_morphisms(a, c).size());
    }
}

TEST_CASE("product and coproduct carriers") {
    auto a = obj(bool2(), 2, 1, {b(true), b(false)});
    auto c = obj(bool2(), 1, 3, {b(true), b(false), b(true)});
    auto p = with_product(a, c);
    CHECK(p.rows().size() == 2);
    CHECK(p.columns().size() == 4);
    // (u, v) against inl(x) reads alpha, against inr(y) reads beta.
    CHECK(p.weight(1, 0) == b(false));
    CHECK(p.weight(1, 2) == b(false));
    CHECK(p.weight(1, 3) == b(true));
    auto s = oplus(a, c);
    CHECK(s.rows().size() == 3);
    CHECK(s.columns().size() == 3);
    CHECK(s.weight(2, 1) == b(false));
    CHECK(s.weight(0, 2) == b(true));
}

TEST_CASE("constructors produce valid morphisms") {
    std::mt19937_64 rng(5);
    auto l = kleene3();
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_object(l, rng, 1, 2, 1);
        auto c = random_object(l, rng, 1, 2, 1);
        for (const auto& m : {project_first(a, c), project_second(a, c), inject_left(a, c), inject_right(a, c),
                              symmetry(a, c), left_unitor(a), right_unitor(a), left_unitor_inverse(a),
                              right_unitor_inverse(a), associator(a, c, a), associator_inverse(a, c, a)})
            CHECK(check_morphism(m).empty());
    }
}

TEST_CASE("hom over too large carriers reports the cap") {
    auto big = DialObject::uniform(bool2(), FinSet(7), FinSet(7), b(true));
    CHECK_THROWS_AS(hom_obj(big, big), cap_exceeded);
    CHECK_THROWS_AS(enumerate_morphisms(big, big), cap_exceeded);
}

TEST_CASE("law suites pass on small options") {
    LawOptions o;
    o.category_cases = 50;
    o.functor_cases = o.adjunction_cases = o.universal_cases = 30;
    o.coherence_cases = 10;
    for (auto tag : {"bool2", "nat", "prod(prob,int)"}) {
        auto l = lineale_for(tag);
        for (auto suite : {&category_laws, &functoriality_laws, &adjunction_laws, &coherence_laws, &universal_laws})
            for (const auto& r : suite(l, o)) {
                CAPTURE(tag);
                CAPTURE(r.name);
                CAPTURE(r.counterexample);
                CHECK(r.passed);
                CHECK(r.cases > 0);
            }
    }
}
