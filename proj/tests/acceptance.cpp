// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <filesystem>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include "dialnet/laws.hpp"
#include "dialnet/netio.hpp"

using namespace dialnet;

namespace {

int failures = 0;

void report(bool ok, const std::string& criterion, const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << criterion << ": " << detail << std::endl;
    failures += !ok;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << "s";
    return out.str();
}

// Every result passed and each non-exhaustive one ran at least min_cases.
bool all_pass(const std::vector<LawResult>& rs, std::size_t min_cases, std::string& why) {
    for (const auto& r : rs) {
        if (!r.passed) {
            why = r.name + " failed: " + r.counterexample;
            return false;
        }
        if (!r.exhaustive && r.cases < min_cases) {
            why = r.name + " ran only " + std::to_string(r.cases) + " cases";
            return false;
        }
    }
    return true;
}

std::vector<LawResult> named(const std::vector<LawResult>& rs, std::initializer_list<const char*> prefixes) {
    std::vector<LawResult> out;
    for (const auto& r : rs)
        for (auto p : prefixes)
            if (r.name.starts_with(p)) out.push_back(r);
    return out;
}

std::multiset<std::string> edge_labels(const std::string& dot) {
    static const std::regex edge(R"re(-> \w+ \[label="([^"]*)"\])re");
    std::multiset<std::string> out;
    for (std::sregex_iterator it(dot.begin(), dot.end(), edge), end; it != end; ++it) out.insert((*it)[1]);
    return out;
}

void lineale_axioms() {
    auto t0 = std::chrono::steady_clock::now();
    LawOptions o;
    std::string why;
    bool ok = true;
    std::size_t total = 0;
    for (auto tag : {"bool2", "kleene3", "nat", "int", "prob", "prod(prob,int)"}) {
        auto l = lineale_for(tag);
        auto rs = lineale_laws(*l, o);
        bool finite = l->elements().has_value();
        for (const auto& r : rs) {
            total += r.cases;
            if (finite != r.exhaustive) {
                ok = false;
                why = std::string(tag) + ": " + r.name + " exhaustive flag wrong";
            }
            if (r.name.starts_with("adjunction") && finite && r.cases != std::size_t(tag == std::string("bool2") ? 8 : 27)) {
                ok = false;
                why = std::string(tag) + ": adjunction covered " + std::to_string(r.cases) + " triples";
            }
        }
        if (ok && !all_pass(rs, 1000, why)) {
            ok = false;
            why = std::string(tag) + ": " + why;
        }
    }
    auto dt = seconds_since(t0);
    if (ok && dt >= 5.0) {
        ok = false;
        why = "took " + fmt(dt);
    }
    report(ok, "lineale axiom suite (6 lineales)",
           ok ? std::to_string(total) + " instances, " + fmt(dt) : why);
}

void adjunction_oracle() {
    auto t0 = std::chrono::steady_clock::now();
    LawOptions o;
    o.adjunction_cases = 200;
    o.max_size = 2;
    auto rs = adjunction_laws(bool2(), o);
    std::string why;
    bool ok = all_pass(rs, 200, why);
    auto dt = seconds_since(t0);
    if (ok && dt >= 60.0) {
        ok = false;
        why = "took " + fmt(dt);
    }
    report(ok, "adjunction oracle over bool2",
           ok ? std::to_string(rs.front().cases) + " triples, counts + bijection + round trip, " + fmt(dt) : why);
}

void category() {
    LawOptions o;
    o.category_cases = 500;
    std::string why;
    bool ok = true;
    std::size_t exhaustive = 0;
    for (const auto& l : {bool2(), kleene3()}) {
        auto rs = category_laws(l, o);
        for (const auto& r : rs) exhaustive += r.exhaustive ? r.cases : 0;
        if (ok && !all_pass(rs, 500, why)) {
            ok = false;
            why = l->name() + ": " + why;
        }
        if (named(rs, {"category: identity (exhaustive", "category: associativity (exhaustive"}).size() != 2) {
            ok = false;
            why = l->name() + ": exhaustive pass missing";
        }
    }
    report(ok, "category laws over bool2 and kleene3",
           ok ? std::to_string(exhaustive) + " exhaustive instances + 500 random triples each" : why);
}

void functoriality() {
    LawOptions o;
    o.functor_cases = 200;
    std::string why;
    bool ok = true;
    for (const auto& l : {bool2(), kleene3()})
        if (ok && !all_pass(functoriality_laws(l, o), 200, why)) {
            ok = false;
            why = l->name() + ": " + why;
        }
    report(ok, "functoriality of tensor_mor and hom_mor", ok ? "200 cases per law on bool2 and kleene3" : why);
}

void coherence() {
    LawOptions o;
    o.coherence_cases = 50;
    auto rs = coherence_laws(bool2(), o);
    std::string why;
    bool ok = all_pass(rs, 50, why) && named(rs, {"coherence: pentagon", "coherence: triangle"}).size() == 2;
    report(ok, "pentagon and triangle over bool2", ok ? "50 instances each, plus inverse/symmetry checks" : why);
}

void universal() {
    LawOptions o;
    o.universal_cases = 100;
    auto rs = universal_laws(bool2(), o);
    std::string why;
    bool ok = all_pass(rs, 100, why);
    report(ok, "universal properties of & and (+)", ok ? "100 cones and 100 cocones, uniqueness by enumeration" : why);
}

void example_nets() {
    std::string why;
    bool ok = true;
    auto fail = [&](const std::string& w) {
        if (ok) why = w;
        ok = false;
    };
    for (const auto& name : example_names()) {
        auto net = build_example(name);
        auto text = net_to_text(net);
        auto back = net_from_document(parse_net_document(text));
        if (!(back == net)) fail(name + ": parsed net differs");
        if (net_to_text(back) != text) fail(name + ": printed text differs after round trip");
        auto shipped = std::filesystem::path(DIALNET_NETS_DIR) / (name + ".net");
        if (!std::filesystem::exists(shipped) || read_text_file(shipped) != text)
            fail(name + ": shipped file differs from built net");
        else if (!(read_net_file(shipped) == net))
            fail(name + ": shipped file does not validate to the built net");
    }
    auto water = edge_labels(export_dot(water_net()));
    if (water != std::multiset<std::string>{"2", "1", "2"}) fail("water edge labels");
    if (!edge_labels(export_dot(inhibitor_net())).contains("-3")) fail("inhibitor lacks -3");
    if (edge_labels(export_dot(circadian_net())).count("0") != 2) fail("circadian 0-labelled arcs != 2");
    CatalysisRates rates;
    auto cat = edge_labels(export_dot(catalysis_net(rates)));
    auto r4 = "(" + format_value(LinealeValue::fraction(rates.rates[3])) + ",-3)";
    auto r5 = "(" + format_value(LinealeValue::fraction(rates.rates[4])) + ",5)";
    if (!cat.contains(r4) || !cat.contains(r5)) fail("catalysis lacks " + r4 + " or " + r5);
    report(ok, "example nets build, validate, round-trip, export DOT",
           ok ? "5 nets; water 2/1/2, inhibitor -3, circadian two 0 arcs, catalysis " + r4 + " " + r5 : why);
}

void simulation() {
    auto heavy = water_variant(2);
    auto light = water_variant(1);
    auto f = FnTable::identity(heavy.places());
    auto F = FnTable::identity(heavy.transitions());
    auto forward = check_net_morphism(heavy, light, f, F);
    auto reverse = check_net_morphism(light, heavy, f, F);
    bool ok = forward.empty() && reverse.size() == 1;
    report(ok, "simulation over nat",
           "lowering: " + std::to_string(forward.size()) + " violations, raising: " + std::to_string(reverse.size()) +
               " violation(s)");
}

void mutation() {
    auto bad = with_imp(kleene3(), [](const LinealeValue&, const LinealeValue&) { return LinealeValue::kleene(1); },
                        "kleene3-const-imp");
    auto rs = named(lineale_laws(*bad), {"adjunction"});
    bool ok = rs.size() == 1 && !rs[0].passed && !rs[0].counterexample.empty();
    report(ok, "mutation sensitivity (kleene3, imp = 1)",
           ok ? "adjunction fails at " + rs[0].counterexample : "adjunction law did not fail");
}

}  // namespace

int main() {
    try {
        lineale_axioms();
        adjunction_oracle();
        category();
        functoriality();
        coherence();
        universal();
        example_nets();
        simulation();
        mutation();
    } catch (const std::exception& e) {
        report(false, "acceptance run", std::string("unexpected exception: ") + e.what());
    }
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria pass") << std::endl;
    return failures;
}
