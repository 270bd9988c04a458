#include "dialnet/laws.hpp"

#include <array>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

namespace dialnet {

namespace {

std::uint64_t mix(std::uint64_t seed, std::string_view salt) {
    // FNV-1a over the salt, folded into the seed.
    std::uint64_t h = 1469598103934665603ull;
    for (char c : salt) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return seed ^ (h + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

class Tally {
  public:
    Tally(std::string name, bool exhaustive = false) {
        result_.name = std::move(name);
        result_.exhaustive = exhaustive;
    }

    template <typename Describe>
    void check(bool ok, Describe&& describe) {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.counterexample = describe();
        }
    }

    void fail(std::string why) {
        result_.passed = false;
        if (result_.counterexample.empty()) result_.counterexample = std::move(why);
    }

    LawResult result() const { return result_; }

  private:
    LawResult result_;
};

// ---- lineale laws ------------------------------------------------------------

template <std::size_t N>
using Tuple = std::array<LinealeValue, N>;

template <std::size_t N>
std::string show(const Tuple<N>& t, const std::array<const char*, N>& names) {
    std::ostringstream out;
    for (std::size_t i = 0; i < N; ++i) out << (i ? ", " : "") << names[i] << "=" << format_value(t[i]);
    return out.str();
}

template <std::size_t N>
LawResult tuple_law(const LinealeSpec& lineale, const LawOptions& options, std::string name,
                    const std::array<const char*, N>& names, const std::function<bool(const Tuple<N>&)>& holds) {
    auto elements = lineale.elements();
    bool exhaustive = elements.has_value() && options.exhaustive;
    Tally tally(std::move(name), exhaustive);
    auto run = [&](const Tuple<N>& t) {
        bool ok;
        try {
            ok = holds(t);
        } catch (const arithmetic_overflow&) {
            return;  // outside the 64-bit model; not a law instance
        }
        tally.check(ok, [&] { return show(t, names); });
    };
    if (exhaustive) {
        const auto& e = *elements;
        std::array<std::size_t, N> idx{};
        while (true) {
            Tuple<N> t;
            for (std::size_t i = 0; i < N; ++i) t[i] = e[idx[i]];
            run(t);
            std::size_t pos = N;
            while (pos > 0) {
                --pos;
                if (++idx[pos] < e.size()) break;
                idx[pos] = 0;
                if (pos == 0) return tally.result();
            }
            if constexpr (N == 0) return tally.result();
        }
    }
    std::mt19937_64 rng(mix(options.seed, tally.result().name));
    for (std::size_t c = 0; c < options.lineale_cases; ++c) {
        Tuple<N> t;
        for (auto& v : t) v = lineale.sample(rng, options.value_bound);
        run(t);
    }
    return tally.result();
}

}  // namespace

std::vector<LawResult> lineale_laws(const LinealeSpec& l, const LawOptions& o) {
    std::vector<LawResult> out;
    const auto& e = l.unit();
    out.push_back(tuple_law<1>(l, o, "order: reflexive", {"a"}, [&](const Tuple<1>& t) { return l.leq(t[0], t[0]); }));
    out.push_back(tuple_law<2>(l, o, "order: antisymmetric", {"a", "b"}, [&](const Tuple<2>& t) {
        return !(l.leq(t[0], t[1]) && l.leq(t[1], t[0])) || t[0] == t[1];
    }));
    out.push_back(tuple_law<3>(l, o, "order: transitive", {"a", "b", "c"}, [&](const Tuple<3>& t) {
        return !(l.leq(t[0], t[1]) && l.leq(t[1], t[2])) || l.leq(t[0], t[2]);
    }));
    out.push_back(tuple_law<3>(l, o, "monoid: associative", {"a", "b", "c"}, [&](const Tuple<3>& t) {
        return l.tensor(l.tensor(t[0], t[1]), t[2]) == l.tensor(t[0], l.tensor(t[1], t[2]));
    }));
    out.push_back(tuple_law<1>(l, o, "monoid: unital", {"a"}, [&](const Tuple<1>& t) {
        return l.tensor(e, t[0]) == t[0] && l.tensor(t[0], e) == t[0];
    }));
    out.push_back(tuple_law<2>(l, o, "monoid: commutative", {"a", "b"},
                               [&](const Tuple<2>& t) { return l.tensor(t[0], t[1]) == l.tensor(t[1], t[0]); }));
    out.push_back(tuple_law<4>(l, o, "order compatible with tensor", {"a", "b", "a'", "b'"}, [&](const Tuple<4>& t) {
        return !(l.leq(t[0], t[1]) && l.leq(t[2], t[3])) || l.leq(l.tensor(t[0], t[2]), l.tensor(t[1], t[3]));
    }));
    out.push_back(tuple_law<3>(l, o, "adjunction: b(x)c <= a iff b <= c-oa", {"a", "b", "c"}, [&](const Tuple<3>& t) {
        const auto& a = t[0];
        const auto& b = t[1];
        const auto& c = t[2];
        return l.leq(l.tensor(b, c), a) == l.leq(b, l.imp(c, a));
    }));
    out.push_back(tuple_law<4>(l, o, "hom variance", {"a", "b", "a'", "b'"}, [&](const Tuple<4>& t) {
        const auto& a = t[0];
        const auto& b = t[1];
        const auto& a2 = t[2];
        const auto& b2 = t[3];
        return !(l.leq(b, a) && l.leq(a2, b2)) || l.leq(l.imp(a, a2), l.imp(b, b2));
    }));
    return out;
}

// ---- generators ----------------------------------------------------------------

DialObject random_object(const LinealePtr& lineale, std::mt19937_64& rng, std::size_t min_size, std::size_t max_size,
                         std::uint64_t bound) {
    auto span = max_size - min_size + 1;
    auto rows = min_size + rng() % span;
    auto cols = min_size + rng() % span;
    std::vector<LinealeValue> w;
    w.reserve(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) w.push_back(lineale->sample(rng, bound));
    return DialObject(lineale, FinSet(rows), FinSet(cols), std::move(w));
}

std::vector<DialObject> all_objects(const LinealePtr& lineale, std::size_t max_rows, std::size_t max_columns) {
    auto elements = lineale->elements();
    if (!elements) throw semantic_error("all_objects needs a finite lineale");
    const auto& e = *elements;
    std::vector<DialObject> out;
    for (std::size_t r = 1; r <= max_rows; ++r)
        for (std::size_t c = 1; c <= max_columns; ++c) {
            std::size_t cells = r * c;
            std::vector<std::size_t> idx(cells, 0);
            while (true) {
                std::vector<LinealeValue> w;
                w.reserve(cells);
                for (auto i : idx) w.push_back(e[i]);
                out.emplace_back(lineale, FinSet(r), FinSet(c), std::move(w));
                std::size_t pos = cells;
                bool done = true;
                while (pos > 0) {
                    --pos;
                    if (++idx[pos] < e.size()) {
                        done = false;
                        break;
                    }
                    idx[pos] = 0;
                }
                if (done) break;
            }
        }
    return out;
}

std::string describe(const DialObject& object) {
    std::ostringstream out;
    out << object.rows().size() << "x" << object.columns().size() << " [";
    auto w = object.weights();
    std::size_t shown = std::min<std::size_t>(w.size(), 16);
    for (std::size_t i = 0; i < shown; ++i) out << (i ? " " : "") << format_value(w[i]);
    if (shown < w.size()) out << " ...";
    out << "]";
    return out.str();
}

namespace {
std::string table_text(const FnTable& f) {
    std::ostringstream out;
    out << "[";
    std::size_t shown = std::min<std::size_t>(f.table().size(), 16);
    for (std::size_t i = 0; i < shown; ++i) out << (i ? "," : "") << f(i);
    if (shown < f.table().size()) out << ",...";
    out << "]";
    return out.str();
}
}  // namespace

std::string describe(const DialMorphism& m) {
    return "(f=" + table_text(m.forward()) + ", F=" + table_text(m.backward()) + ") : " + describe(m.source()) +
           " -> " + describe(m.target());
}

namespace {

struct Generator {
    LinealePtr lineale;
    const LawOptions& options;
    std::mt19937_64 rng;

    Generator(LinealePtr l, const LawOptions& o, std::string_view salt)
        : lineale(std::move(l)), options(o), rng(mix(o.seed, salt)) {}

    std::uint64_t bound() const { return lineale->elements() ? 1 : options.object_bound; }

    DialObject object() { return random_object(lineale, rng, 1, options.max_size, bound()); }

    std::optional<DialMorphism> morphism(const DialObject& a, const DialObject& b) {
        auto all = enumerate_morphisms(a, b, options.limits);
        if (all.empty()) return std::nullopt;
        return all[rng() % all.size()];
    }

    // Random valid morphism out of a, into a fresh random object.
    std::optional<DialMorphism> morphism_from(const DialObject& a) {
        for (int attempt = 0; attempt < 200; ++attempt)
            if (auto m = morphism(a, object())) return m;
        return std::nullopt;
    }

    std::optional<DialMorphism> morphism_into(const DialObject& b) {
        for (int attempt = 0; attempt < 200; ++attempt)
            if (auto m = morphism(object(), b)) return m;
        return std::nullopt;
    }

    // m_1 : A0 -> A1, ..., m_n : A(n-1) -> An
    std::optional<std::vector<DialMorphism>> chain(std::size_t length) {
        for (int attempt = 0; attempt < 1000; ++attempt) {
            std::vector<DialMorphism> out;
            auto current = object();
            for (std::size_t i = 0; i < length; ++i) {
                auto m = morphism_from(current);
                if (!m) break;
                current = m->target();
                out.push_back(std::move(*m));
            }
            if (out.size() == length) return out;
        }
        return std::nullopt;
    }
};

}  // namespace

// ---- category ------------------------------------------------------------------

std::vector<LawResult> category_laws(const LinealePtr& lineale, const LawOptions& o) {
    const auto& limits = o.limits;
    Tally ident_ex("category: identity (exhaustive, sizes <= 2)", true);
    Tally assoc_ex("category: associativity (exhaustive, |U||X| <= 2)", true);
    Tally ident("category: identity (random)");
    Tally assoc("category: associativity (random)");
    Tally closed("category: composite passes check_morphism");

    std::vector<LawResult> out;
    if (lineale->elements() && o.exhaustive) {
        auto objects = all_objects(lineale, o.max_size, o.max_size);
        for (const auto& a : objects)
            for (const auto& b : objects)
                for (const auto& m : enumerate_morphisms(a, b, limits))
                    ident_ex.check(compose(identity(b), m) == m && compose(m, identity(a)) == m,
                                   [&] { return describe(m); });

        std::vector<DialObject> pool;
        for (const auto& a : objects)
            if (a.rows().size() * a.columns().size() <= 2) pool.push_back(a);
        std::vector<std::vector<std::vector<DialMorphism>>> homs(pool.size());
        for (std::size_t i = 0; i < pool.size(); ++i)
            for (std::size_t j = 0; j < pool.size(); ++j) homs[i].push_back(enumerate_morphisms(pool[i], pool[j], limits));
        for (std::size_t i = 0; i < pool.size(); ++i)
            for (std::size_t j = 0; j < pool.size(); ++j)
                for (const auto& m1 : homs[i][j])
                    for (std::size_t k = 0; k < pool.size(); ++k)
                        for (const auto& m2 : homs[j][k]) {
                            auto m21 = compose(m2, m1);
                            for (std::size_t l = 0; l < pool.size(); ++l)
                                for (const auto& m3 : homs[k][l])
                                    assoc_ex.check(compose(compose(m3, m2), m1) == compose(m3, m21), [&] {
                                        return describe(m1) + " ; " + describe(m2) + " ; " + describe(m3);
                                    });
                        }
        out.push_back(ident_ex.result());
        out.push_back(assoc_ex.result());
    }

    Generator gen(lineale, o, "category");
    for (std::size_t c = 0; c < o.category_cases; ++c) {
        auto ch = gen.chain(3);
        if (!ch) {
            assoc.fail("could not generate a composable triple");
            break;
        }
        const auto& [m1, m2, m3] = std::tie((*ch)[0], (*ch)[1], (*ch)[2]);
        ident.check(compose(identity(m1.target()), m1) == m1 && compose(m1, identity(m1.source())) == m1,
                    [&] { return describe(m1); });
        assoc.check(compose(compose(m3, m2), m1) == compose(m3, compose(m2, m1)),
                    [&] { return describe(m1) + " ; " + describe(m2) + " ; " + describe(m3); });
        auto composite = compose(m3, compose(m2, m1));
        closed.check(check_morphism(composite).empty(), [&] { return describe(composite); });
    }
    out.push_back(ident.result());
    out.push_back(assoc.result());
    out.push_back(closed.result());
    return out;
}

// ---- functoriality -------------------------------------------------------------

std::vector<LawResult> functoriality_laws(const LinealePtr& lineale, const LawOptions& o) {
    const auto& limits = o.limits;
    Tally t_id("tensor_mor preserves identities");
    Tally t_comp("tensor_mor preserves composition");
    Tally t_valid("tensor_mor output passes check_morphism");
    Tally h_id("hom_mor preserves identities");
    Tally h_comp("hom_mor preserves composition");
    Tally h_valid("hom_mor output passes check_morphism");

    Generator gen(lineale, o, "functoriality");
    for (std::size_t c = 0; c < o.functor_cases; ++c) {
        auto a = gen.object();
        auto b = gen.object();
        t_id.check(tensor_mor(identity(a), identity(b), limits) == identity(tensor_obj(a, b, limits)),
                   [&] { return describe(a) + " (x) " + describe(b); });
        h_id.check(hom_mor(identity(a), identity(b), limits) == identity(hom_obj(a, b, limits)),
                   [&] { return "[" + describe(a) + ", " + describe(b) + "]"; });

        auto first = gen.chain(2);
        auto second = gen.chain(2);
        if (!first || !second) {
            t_comp.fail("could not generate composable pairs");
            break;
        }
        const auto& m1 = (*first)[0];
        const auto& m1b = (*first)[1];
        const auto& m2 = (*second)[0];
        const auto& m2b = (*second)[1];

        auto direct = tensor_mor(compose(m1b, m1), compose(m2b, m2), limits);
        auto stepwise = compose(tensor_mor(m1b, m2b, limits), tensor_mor(m1, m2, limits));
        t_comp.check(direct == stepwise, [&] { return describe(m1) + " ; " + describe(m1b) + " with " + describe(m2) +
                                                        " ; " + describe(m2b); });
        auto t = tensor_mor(m1, m2, limits);
        t_valid.check(check_morphism(t).empty(), [&] { return describe(t); });

        // first = x : A'' -> A', y : A' -> A (contravariant slot); second = covariant slot.
        const auto& x = m1;
        const auto& y = m1b;
        auto hom_direct = hom_mor(compose(y, x), compose(m2b, m2), limits);
        auto hom_step = compose(hom_mor(x, m2b, limits), hom_mor(y, m2, limits));
        h_comp.check(hom_direct == hom_step,
                     [&] { return describe(x) + " ; " + describe(y) + " with " + describe(m2) + " ; " + describe(m2b); });
        auto h = hom_mor(y, m2, limits);
        h_valid.check(check_morphism(h).empty(), [&] { return describe(h); });
    }
    return {t_id.result(), t_comp.result(), t_valid.result(), h_id.result(), h_comp.result(), h_valid.result()};
}

// ---- adjunction ----------------------------------------------------------------

namespace {
using TableKey = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;
TableKey key_of(const DialMorphism& m) {
    return {{m.forward().table().begin(), m.forward().table().end()},
            {m.backward().table().begin(), m.backward().table().end()}};
}
}  // namespace

std::vector<LawResult> adjunction_laws(const LinealePtr& lineale, const LawOptions& o) {
    const auto& limits = o.limits;
    Tally counts("adjunction: |Hom(A(x)B,C)| = |Hom(A,[B,C])| by enumeration");
    Tally bijection("adjunction: curry_dial is a bijection onto the enumerated set");
    Tally valid("adjunction: curry_dial output passes check_morphism");
    Tally round("adjunction: uncurry_dial inverts curry_dial both ways");
    Tally natural_a("adjunction: natural in A");
    Tally natural_c("adjunction: natural in C");

    Generator gen(lineale, o, "adjunction");
    for (std::size_t c = 0; c < o.adjunction_cases; ++c) {
        auto a = gen.object();
        auto b = gen.object();
        auto cc = gen.object();
        auto ab = tensor_obj(a, b, limits);
        auto bc = hom_obj(b, cc, limits);
        auto left = enumerate_morphisms(ab, cc, limits);
        auto right = enumerate_morphisms(a, bc, limits);
        auto where = [&] { return "A=" + describe(a) + " B=" + describe(b) + " C=" + describe(cc); };
        counts.check(left.size() == right.size(), [&] {
            return where() + ": " + std::to_string(left.size()) + " vs " + std::to_string(right.size());
        });

        std::set<TableKey> right_keys;
        for (const auto& m : right) right_keys.insert(key_of(m));
        std::set<TableKey> images;
        bool image_ok = true;
        bool valid_ok = true;
        bool round_ok = true;
        std::string bad;
        for (const auto& m : left) {
            auto g = curry_dial(a, b, m, limits);
            if (!check_morphism(g).empty()) {
                valid_ok = false;
                if (bad.empty()) bad = describe(m);
            }
            auto k = key_of(g);
            if (!right_keys.contains(k) || !images.insert(k).second) image_ok = false;
            if (!(uncurry_dial(a, b, cc, g, limits) == m)) round_ok = false;
        }
        for (const auto& g : right)
            if (!(curry_dial(a, b, uncurry_dial(a, b, cc, g, limits), limits) == g)) round_ok = false;
        bijection.check(image_ok && images.size() == right.size(), where);
        valid.check(valid_ok, [&] { return where() + " m=" + bad; });
        round.check(round_ok, where);

    }

    // Naturality needs a non-empty Hom(A (x) B, C); keep drawing until enough are found.
    std::size_t attempts = 0;
    while ((natural_a.result().cases < o.adjunction_cases || natural_c.result().cases < o.adjunction_cases) &&
           attempts++ < o.adjunction_cases * 50) {
        auto a = gen.object();
        auto b = gen.object();
        auto cc = gen.object();
        auto left = enumerate_morphisms(tensor_obj(a, b, limits), cc, limits);
        if (left.empty()) continue;
        auto where = [&] { return "A=" + describe(a) + " B=" + describe(b) + " C=" + describe(cc); };
        const auto& m = left[gen.rng() % left.size()];
        if (natural_a.result().cases < o.adjunction_cases)
            if (auto h = gen.morphism_into(a)) {
                const auto& a2 = h->source();
                auto lhs = curry_dial(a2, b, compose(m, tensor_mor(*h, identity(b), limits)), limits);
                auto rhs = compose(curry_dial(a, b, m, limits), *h);
                natural_a.check(lhs == rhs, [&] { return where() + " h=" + describe(*h); });
            }
        if (natural_c.result().cases < o.adjunction_cases)
            if (auto k = gen.morphism_from(cc)) {
                auto lhs = curry_dial(a, b, compose(*k, m), limits);
                auto rhs = compose(hom_mor(identity(b), *k, limits), curry_dial(a, b, m, limits));
                natural_c.check(lhs == rhs, [&] { return where() + " k=" + describe(*k); });
            }
    }
    if (natural_a.result().cases < o.adjunction_cases || natural_c.result().cases < o.adjunction_cases)
        natural_a.fail("too few non-empty hom-sets for the naturality checks");
    return {counts.result(), bijection.result(), valid.result(), round.result(), natural_a.result(), natural_c.result()};
}

// ---- coherence -----------------------------------------------------------------

std::vector<LawResult> coherence_laws(const LinealePtr& lineale, const LawOptions& o) {
    const auto& limits = o.limits;
    Tally pentagon("coherence: pentagon");
    Tally triangle("coherence: triangle");
    Tally assoc_iso("associator: valid, inverse both ways");
    Tally assoc_nat("associator: natural");
    Tally unitors("unitors: valid, inverse both ways");
    Tally sym_inv("symmetry: valid involution");
    Tally sym_nat("symmetry: natural");
    Tally sym_unit("symmetry: compatible with unitors");

    auto unit = unit_object(lineale);
    Generator gen(lineale, o, "coherence");

    std::size_t attempts = 0;
    const std::size_t max_attempts = o.coherence_cases * 400 + 100;
    while (pentagon.result().cases < o.coherence_cases && attempts++ < max_attempts) {
        auto a = gen.object();
        auto b = gen.object();
        auto c = gen.object();
        auto d = gen.object();
        try {
            auto lhs = compose(associator(a, b, tensor_obj(c, d, limits), limits),
                               associator(tensor_obj(a, b, limits), c, d, limits));
            auto rhs = compose(tensor_mor(identity(a), associator(b, c, d, limits), limits),
                               compose(associator(a, tensor_obj(b, c, limits), d, limits),
                                       tensor_mor(associator(a, b, c, limits), identity(d), limits)));
            pentagon.check(lhs == rhs, [&] {
                return "A=" + describe(a) + " B=" + describe(b) + " C=" + describe(c) + " D=" + describe(d);
            });
        } catch (const cap_exceeded&) {
            // Too large to materialize under the cap; draw again.
        }
    }
    if (pentagon.result().cases < o.coherence_cases) pentagon.fail("too few instances fit under the cap");

    for (std::size_t i = 0; i < o.coherence_cases; ++i) {
        auto a = gen.object();
        auto b = gen.object();
        auto c = gen.object();
        auto where2 = [&] { return "A=" + describe(a) + " B=" + describe(b); };
        auto where3 = [&] { return where2() + " C=" + describe(c); };

        auto lhs = compose(tensor_mor(identity(a), left_unitor(b, limits), limits), associator(a, unit, b, limits));
        auto rhs = tensor_mor(right_unitor(a, limits), identity(b), limits);
        triangle.check(lhs == rhs, where2);

        auto fwd = associator(a, b, c, limits);
        auto inv = associator_inverse(a, b, c, limits);
        assoc_iso.check(check_morphism(fwd).empty() && check_morphism(inv).empty() &&
                            compose(inv, fwd) == identity(fwd.source()) && compose(fwd, inv) == identity(fwd.target()),
                        where3);

        bool unit_ok = true;
        for (const auto& [to, from] : {std::pair(left_unitor(a, limits), left_unitor_inverse(a, limits)),
                                       std::pair(right_unitor(a, limits), right_unitor_inverse(a, limits))}) {
            unit_ok = unit_ok && check_morphism(to).empty() && check_morphism(from).empty() &&
                      compose(from, to) == identity(to.source()) && compose(to, from) == identity(a);
        }
        unitors.check(unit_ok, [&] { return "A=" + describe(a); });

        auto s = symmetry(a, b, limits);
        sym_inv.check(check_morphism(s).empty() && compose(symmetry(b, a, limits), s) == identity(s.source()), where2);
        sym_unit.check(compose(left_unitor(a, limits), symmetry(a, unit, limits)) == right_unitor(a, limits),
                       [&] { return "A=" + describe(a); });

        auto m1 = gen.morphism_from(a);
        auto m2 = gen.morphism_from(b);
        auto m3 = gen.morphism_from(c);
        if (m1 && m2) {
            auto lhs_s = compose(symmetry(m1->target(), m2->target(), limits), tensor_mor(*m1, *m2, limits));
            auto rhs_s = compose(tensor_mor(*m2, *m1, limits), symmetry(a, b, limits));
            sym_nat.check(lhs_s == rhs_s, [&] { return describe(*m1) + " and " + describe(*m2); });
        }
        if (m1 && m2 && m3) {
            try {
                auto lhs_a = compose(associator(m1->target(), m2->target(), m3->target(), limits),
                                     tensor_mor(tensor_mor(*m1, *m2, limits), *m3, limits));
                auto rhs_a = compose(tensor_mor(*m1, tensor_mor(*m2, *m3, limits), limits), associator(a, b, c, limits));
                assoc_nat.check(lhs_a == rhs_a,
                                [&] { return describe(*m1) + ", " + describe(*m2) + ", " + describe(*m3); });
            } catch (const cap_exceeded&) {
            }
        }
    }
    return {pentagon.result(), triangle.result(), assoc_iso.result(), assoc_nat.result(),
            unitors.result(),  sym_inv.result(),  sym_nat.result(),   sym_unit.result()};
}

// ---- universal properties --------------------------------------------------------

std::vector<LawResult> universal_laws(const LinealePtr& lineale, const LawOptions& o) {
    const auto& limits = o.limits;
    Tally product("product: projections valid, pairing mediates uniquely");
    Tally coproduct("coproduct: injections valid, copairing mediates uniquely");

    Generator gen(lineale, o, "universal");
    std::size_t attempts = 0;
    while (product.result().cases < o.universal_cases && attempts++ < o.universal_cases * 100) {
        auto a = gen.object();
        auto b = gen.object();
        auto c = gen.object();
        auto m1 = gen.morphism(c, a);
        auto m2 = gen.morphism(c, b);
        if (!m1 || !m2) continue;
        auto p1 = project_first(a, b, limits);
        auto p2 = project_second(a, b, limits);
        auto p = pairing(*m1, *m2, limits);
        bool ok = check_morphism(p1).empty() && check_morphism(p2).empty() && check_morphism(p).empty() &&
                  compose(p1, p) == *m1 && compose(p2, p) == *m2;
        std::size_t mediating = 0;
        bool unique_is_pairing = true;
        for (const auto& h : enumerate_morphisms(c, with_product(a, b, limits), limits))
            if (compose(p1, h) == *m1 && compose(p2, h) == *m2) {
                ++mediating;
                unique_is_pairing = unique_is_pairing && h == p;
            }
        product.check(ok && mediating == 1 && unique_is_pairing, [&] {
            return "A=" + describe(a) + " B=" + describe(b) + " C=" + describe(c) + " mediating=" +
                   std::to_string(mediating);
        });
    }
    if (product.result().cases < o.universal_cases) product.fail("could not generate enough cones");

    attempts = 0;
    while (coproduct.result().cases < o.universal_cases && attempts++ < o.universal_cases * 100) {
        auto a = gen.object();
        auto b = gen.object();
        auto c = gen.object();
        auto m1 = gen.morphism(a, c);
        auto m2 = gen.morphism(b, c);
        if (!m1 || !m2) continue;
        auto i1 = inject_left(a, b, limits);
        auto i2 = inject_right(a, b, limits);
        auto cp = copairing(*m1, *m2, limits);
        bool ok = check_morphism(i1).empty() && check_morphism(i2).empty() && check_morphism(cp).empty() &&
                  compose(cp, i1) == *m1 && compose(cp, i2) == *m2;
        std::size_t mediating = 0;
        bool unique_is_copairing = true;
        for (const auto& h : enumerate_morphisms(oplus(a, b, limits), c, limits))
            if (compose(h, i1) == *m1 && compose(h, i2) == *m2) {
                ++mediating;
                unique_is_copairing = unique_is_copairing && h == cp;
            }
        coproduct.check(ok && mediating == 1 && unique_is_copairing, [&] {
            return "A=" + describe(a) + " B=" + describe(b) + " C=" + describe(c) + " mediating=" +
                   std::to_string(mediating);
        });
    }
    if (coproduct.result().cases < o.universal_cases) coproduct.fail("could not generate enough cocones");
    return {product.result(), coproduct.result()};
}

std::vector<LawResult> all_laws(const LinealePtr& lineale, const LawOptions& options) {
    std::vector<LawResult> out = lineale_laws(*lineale, options);
    for (auto* suite : {&category_laws, &functoriality_laws, &adjunction_laws, &coherence_laws, &universal_laws}) {
        auto part = (*suite)(lineale, options);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace dialnet
