#include <doctest.h>

#include <random>

#include "dialnet/error.hpp"
#include "dialnet/finset.hpp"

using namespace dialnet;

namespace {
std::vector<std::size_t> as_vec(const FnTable& f) { return {f.table().begin(), f.table().end()}; }
}  // namespace

TEST_CASE("exponential enumerates all functions in lexicographic order") {
    FinSet v(2), x(3);
    auto all = exponential(v, x);
    REQUIRE(all.size() == 9);
    CHECK(as_vec(all.front()) == std::vector<std::size_t>{0, 0});
    CHECK(as_vec(all[1]) == std::vector<std::size_t>{0, 1});
    CHECK(as_vec(all[3]) == std::vector<std::size_t>{1, 0});
    CHECK(as_vec(all.back()) == std::vector<std::size_t>{2, 2});
    Exponential e(v, x);
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(e.encode(all[i]) == i);
        CHECK(e.decode(i) == all[i]);
        for (std::size_t j = 0; j < 2; ++j) CHECK(e.eval(i, j) == all[i](j));
    }
}

TEST_CASE("empty base gives a single function, empty target none") {
    CHECK(exponential(FinSet(0), FinSet(3)).size() == 1);
    CHECK(exponential(FinSet(2), FinSet(0)).empty());
    CHECK(exponential_size(0, 0) == 1);
}

TEST_CASE("cap is enforced with the required size") {
    try {
        exponential_size(7, 7);
        FAIL("expected cap_exceeded");
    } catch (const cap_exceeded& e) {
        CHECK(e.required() == 823543);
        CHECK(e.cap() == 4096);
    }
    CHECK(exponential_size(7, 7, Limits{1'000'000}) == 823543);
    try {
        exponential_size(64, 100);
        FAIL("expected cap_exceeded");
    } catch (const cap_exceeded& e) {
        CHECK(e.required() == SIZE_MAX);
    }
    CHECK_THROWS_AS(product_set(FinSet(100), FinSet(100)), cap_exceeded);
}

TEST_CASE("product and coproduct indexing") {
    FinSet a(2), b(3);
    CHECK(pair_index(1, 2, b.size()) == 5);
    CHECK(split_pair(5, 3) == std::pair<std::size_t, std::size_t>{1, 2});
    CHECK(inject_right(a, b)(0) == 2);
    CHECK(inject_left(a, b)(1) == 1);
    CHECK(project_first(a, b)(5) == 1);
    CHECK(project_second(a, b)(5) == 2);
    CHECK(swap_fn(a, b)(5) == pair_index(2, 1, 2));
}

TEST_CASE("labels") {
    FinSet a(std::vector<std::string>{"x", "y"}), b(std::vector<std::string>{"p"});
    CHECK(product_set(a, b).label(1) == "(y,p)");
    CHECK(coproduct_set(a, b).label(2) == "right.p");
    CHECK(coproduct_set(a, b).label(0) == "left.x");
    CHECK(Exponential(a, b).as_set().label(0) == "fn0");
    CHECK(FinSet(3).label(2) == "2");
    CHECK(a.index_of("y") == 1);
    CHECK_FALSE(a.index_of("z"));
    CHECK_THROWS_AS(FinSet(std::vector<std::string>{"x", "x"}), semantic_error);
}

TEST_CASE("tables are checked") {
    CHECK_THROWS_AS(FnTable(FinSet(2), FinSet(2), {0}), shape_mismatch);
    CHECK_THROWS_AS(FnTable(FinSet(2), FinSet(2), {0, 2}), shape_mismatch);
    FnTable f(FinSet(2), FinSet(3), {2, 0});
    FnTable g(FinSet(3), FinSet(2), {1, 1, 0});
    CHECK(as_vec(compose_fn(g, f)) == std::vector<std::size_t>{0, 1});
    CHECK_THROWS_AS(compose_fn(f, f), shape_mismatch);
}

TEST_CASE("curry of the first projection sends u to a constant table") {
    FinSet u(3), v(2);
    auto pi1 = project_first(u, v);
    auto curried = curry_fn(pi1, u, v);
    Exponential e(v, u);
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(e.decode(curried(i)) == FnTable::constant(v, u, i));
    CHECK(uncurry_fn(curried, v, u) == pi1);
}

TEST_CASE("curry and uncurry are inverse on random tables") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        FinSet u(1 + rng() % 3), v(1 + rng() % 3), z(1 + rng() % 3);
        std::vector<std::size_t> t(u.size() * v.size());
        for (auto& x : t) x = rng() % z.size();
        FnTable h(product_set(u, v), z, t);
        auto g = curry_fn(h, u, v);
        CHECK(uncurry_fn(g, v, z) == h);
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j)
                CHECK(eval_pair(g(i), j, v, z) == h(pair_index(i, j, v.size())));
    }
}

TEST_CASE("pairing and copairing") {
    FinSet c(2), a(2), b(3);
    FnTable f(c, a, {1, 0}), g(c, b, {2, 2});
    auto p = pairing_fn(f, g);
    CHECK(compose_fn(project_first(a, b), p) == f);
    CHECK(compose_fn(project_second(a, b), p) == g);
    FnTable h(a, c, {1, 1}), k(b, c, {0, 1, 0});
    auto cp = copairing_fn(h, k);
    CHECK(compose_fn(cp, inject_left(a, b)) == h);
    CHECK(compose_fn(cp, inject_right(a, b)) == k);
    CHECK(compose_fn(project_first(a, a), diagonal_fn(a)) == FnTable::identity(a));
}
