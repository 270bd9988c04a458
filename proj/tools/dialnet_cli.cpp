#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "dialnet/laws.hpp"
#include "dialnet/netio.hpp"

using namespace dialnet;

namespace {

enum exit_code : int { ok = 0, failed = 1, parse = 2, semantic = 3, cap = 4 };

void emit(const std::optional<std::string>& out, const std::string& text) {
    if (out)
        write_text_file(*out, text);
    else
        std::cout << text;
}

std::string arcs_summary(const PetriNet& net, const DialObject& rel) {
    std::map<std::string, std::size_t> values;
    std::size_t arcs = 0;
    for (std::size_t p = 0; p < net.places().size(); ++p)
        for (std::size_t t = 0; t < net.transitions().size(); ++t)
            if (!(rel.weight(p, t) == net.default_weight())) {
                ++arcs;
                ++values[format_value(rel.weight(p, t))];
            }
    std::string out = std::to_string(arcs) + (arcs == 1 ? " arc" : " arcs");
    if (!values.empty()) {
        out += " {";
        bool first = true;
        for (const auto& [v, n] : values) {
            out += (first ? "" : ", ") + v + " x" + std::to_string(n);
            first = false;
        }
        out += "}";
    }
    return out;
}

int run_validate(const std::string& path) {
    auto net = read_net_file(path);
    auto plural = [](std::size_t n, const char* word) {
        return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
    };
    std::cout << "ok: " << plural(net.places().size(), "place") << ", "
              << plural(net.transitions().size(), "transition") << "\n"
              << "lineale: " << net.lineale()->name() << ", default weight " << format_value(net.default_weight())
              << "\n"
              << "pre:  " << arcs_summary(net, net.pre()) << "\n"
              << "post: " << arcs_summary(net, net.post()) << "\n";
    return ok;
}

int run_check_morphism(const std::string& path) {
    auto doc = read_morphism_file(path);
    auto violations = check_net_morphism(doc.source, doc.target, doc.forward, doc.backward);
    if (violations.empty()) {
        std::cout << "ok\n";
        return ok;
    }
    std::cout << "not a morphism: " << violations.size() << " violation(s)\n";
    for (const auto& v : violations) {
        auto u = v.point.row;
        auto y = v.point.column;
        std::cout << "  " << to_string(v.side) << " place " << doc.source.places().label(u) << ", transition "
                  << doc.target.transitions().label(y) << ": source weight " << format_value(v.point.source_weight)
                  << " at (" << doc.source.places().label(u) << ","
                  << doc.source.transitions().label(doc.backward(y)) << ") not <= target weight "
                  << format_value(v.point.target_weight) << " at (" << doc.target.places().label(doc.forward(u))
                  << "," << doc.target.transitions().label(y) << ") in " << doc.source.lineale()->name() << "\n";
    }
    return failed;
}

int run_combine(const std::string& op, const std::string& left, const std::string& right, const std::string& out,
                std::size_t cap_size) {
    Limits limits{cap_size};
    auto a = read_net_file(left);
    auto b = read_net_file(right);
    if (a.lineale()->name() != b.lineale()->name())
        throw semantic_error("nets are over different lineales: " + a.lineale()->name() + " and " +
                             b.lineale()->name());
    PetriNet net = op == "tensor" ? net_tensor(a, b, limits)
                   : op == "with" ? net_with(a, b, limits)
                   : op == "oplus" ? net_oplus(a, b, limits)
                                   : net_hom(a, b, limits);
    write_net_file(out, net);
    std::cout << "wrote " << out << ": " << net.places().size() << " places, " << net.transitions().size()
              << " transitions\n";
    return ok;
}

int run_laws(const std::string& tag, std::uint64_t seed, std::optional<std::size_t> cases, bool mutate) {
    auto lineale = lineale_for(LinealeTag::parse(tag));
    if (mutate) {
        auto unit = lineale->unit();
        lineale = with_imp(
            lineale, [unit](const LinealeValue&, const LinealeValue&) { return unit; }, lineale->name() + "-mutated");
    }
    LawOptions options;
    options.seed = seed;
    if (cases) {
        options.lineale_cases = options.category_cases = options.functor_cases = *cases;
        options.adjunction_cases = options.coherence_cases = options.universal_cases = *cases;
    }
    auto results = all_laws(lineale, options);
    std::size_t failures = 0;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases"
                  << (r.exhaustive ? ", exhaustive" : "") << ")\n";
        if (!r.passed) {
            ++failures;
            std::cout << "     counterexample: " << r.counterexample << "\n";
        }
    }
    std::cout << (failures ? std::to_string(failures) + " law(s) failed" : "all laws pass") << " for "
              << lineale->name() << " (seed " << seed << ")\n";
    return failures ? failed : ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lineale-weighted Petri nets: validate, combine, check morphisms, verify laws."};
    app.require_subcommand(1);

    std::string net_path;
    auto* validate = app.add_subcommand("validate", "Parse a net file and check its invariants");
    validate->add_option("net", net_path, "Net file")->required();

    std::string morphism_path;
    auto* check = app.add_subcommand("check-morphism", "Check a morphism document (F maps TARGET to SOURCE transitions)");
    check->add_option("morphism", morphism_path, "Morphism file")->required();

    std::string op, left, right, out_path;
    std::size_t cap_size = Limits{}.cap;
    auto* combine = app.add_subcommand("combine", "Combine two nets over the same lineale");
    combine->add_option("--op", op, "Connective")->required()->check(CLI::IsMember({"tensor", "with", "oplus", "hom"}));
    combine->add_option("net1", left)->required();
    combine->add_option("net2", right)->required();
    combine->add_option("--out", out_path, "Output net file")->required();
    combine->add_option("--cap", cap_size, "Largest carrier allowed")->capture_default_str();

    std::string tag;
    std::uint64_t seed = LawOptions{}.seed;
    std::optional<std::size_t> cases;
    bool mutate = false;
    auto* laws = app.add_subcommand("laws", "Run every law suite over a lineale");
    laws->add_option("--lineale", tag, "Lineale tag, e.g. kleene3 or prod(prob,int)")->required();
    laws->add_option("--seed", seed)->capture_default_str();
    laws->add_option("--cases", cases, "Random cases per law");
    laws->add_flag("--mutate-imp", mutate, "Replace imp with the constant unit (the suite should then fail)");

    std::optional<std::string> dot_out;
    auto* dot = app.add_subcommand("export-dot", "Write a Graphviz rendering of a net");
    dot->add_option("net", net_path)->required();
    dot->add_option("--out", dot_out, "Output file (default stdout)");

    std::string example_name;
    std::optional<std::string> example_out;
    auto* example = app.add_subcommand("example", "Write one of the built-in example nets");
    example->add_option("--name", example_name)->required()->check(CLI::IsMember(example_names()));
    example->add_option("--out", example_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : parse;
    }

    try {
        if (*validate) return run_validate(net_path);
        if (*check) return run_check_morphism(morphism_path);
        if (*combine) return run_combine(op, left, right, out_path, cap_size);
        if (*laws) return run_laws(tag, seed, cases, mutate);
        if (*dot) {
            std::filesystem::path p(net_path);
            emit(dot_out, export_dot(read_net_file(p), p.stem().string()));
            return ok;
        }
        if (*example) {
            emit(example_out, net_to_text(build_example(example_name)));
            return ok;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse;
    } catch (const cap_exceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        if (e.required() != SIZE_MAX) std::cerr << "required cap: " << e.required() << "\n";
        return cap;
    } catch (const semantic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return semantic;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failed;
    }
    return ok;
}
