#include <doctest.h>

#include "dialnet/error.hpp"
#include "dialnet/petrinet.hpp"

using namespace dialnet;

TEST_CASE("example nets have the expected carriers") {
    CHECK(water_net().places().size() == 3);
    CHECK(water_net().transitions().size() == 1);
    CHECK(sir_net().transitions().size() == 3);
    CHECK(circadian_net().places().size() == 7);
    CHECK(circadian_net().transitions().size() == 4);
    CHECK(inhibitor_net().pre().weight(3, 0) == LinealeValue::integer(-3));
    CHECK(catalysis_net().lineale()->name() == "prod(prob,int)");
    for (const auto& name : example_names()) CHECK(build_example(name).lineale());
    CHECK_THROWS_AS(build_example("nope"), semantic_error);
}

TEST_CASE("weight-lowering simulation over nat") {
    auto heavy = water_variant(2);
    auto light = water_variant(1);
    auto places = FnTable::identity(heavy.places());
    auto transitions = FnTable::identity(heavy.transitions());
    // Over nat a larger weight is lower in the order.
    CHECK(check_net_morphism(heavy, light, places, transitions).empty());
    auto back = check_net_morphism(light, heavy, places, transitions);
    REQUIRE(back.size() == 1);
    CHECK(back[0].side == NetSide::pre);
    CHECK(back[0].point.row == 0);
    CHECK_THROWS_AS(NetMorphism::make(light, heavy, places, transitions), invalid_net_morphism);
}

TEST_CASE("refinement by an extra place") {
    auto small = water_net();
    auto big = water_with_extra_place();
    FnTable places(small.places(), big.places(), {0, 1, 2});
    auto m = NetMorphism::make(small, big, places, FnTable::identity(small.transitions()));
    CHECK(m.on_pre().target().rows().size() == 4);
    CHECK(compose(identity(big), m) == m);
}

TEST_CASE("connectives on nets") {
    auto w = water_net();
    auto t = net_tensor(w, w);
    CHECK(t.places().size() == 9);
    CHECK(t.transitions().size() == 1);
    // Single-transition nets: every exponential is a singleton.
    CHECK(t.pre().weight(0, 0) == LinealeValue::natural(4));
    auto with = net_with(w, w);
    CHECK(with.places().size() == 9);
    CHECK(with.transitions().size() == 2);
    auto sum = net_oplus(w, w);
    CHECK(sum.places().size() == 6);
    CHECK(sum.transitions().size() == 1);
    CHECK(sum.places().label(4) == "right.O2");
    auto h = net_hom(w, w);
    CHECK(h.places().size() == 27);
    CHECK(h.transitions().size() == 3);
    CHECK_THROWS_AS(net_hom(circadian_net(), circadian_net()), cap_exceeded);
    CHECK_THROWS_AS(net_tensor(w, sir_net()), tag_mismatch);
}

TEST_CASE("build_net rejects bad arcs") {
    auto zero = LinealeValue::natural(0);
    CHECK_THROWS_AS(build_net(nat(), {"a"}, {"t"}, {{"b", "t", zero}}, {}, zero), semantic_error);
    CHECK_THROWS_AS(build_net(nat(), {"a"}, {"t"}, {{"a", "t", zero}, {"a", "t", zero}}, {}, zero), semantic_error);
    CHECK_THROWS_AS(build_net(nat(), {"a", "a"}, {"t"}, {}, {}, zero), semantic_error);
}
