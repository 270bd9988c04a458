#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

fs::path scratch() {
    static fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("dialnet-cli-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Run run(const std::string& args) {
    auto log = scratch() / "out.txt";
    std::string cmd = std::string("\"") + DIALNET_CLI_PATH + "\" " + args + " > \"" + log.string() + "\" 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(log);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string nets(const std::string& name) { return std::string("\"") + DIALNET_NETS_DIR + "/" + name + "\""; }

std::string write(const std::string& name, const std::string& text) {
    auto p = scratch() / name;
    std::ofstream(p) << text;
    return "\"" + p.string() + "\"";
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("validate the shipped water net") {
    auto r = run("validate " + nets("water.net"));
    CHECK(r.code == 0);
    CHECK(has(r.out, "3 places"));
    CHECK(has(r.out, "1 transition"));
}

TEST_CASE("all shipped nets validate") {
    for (auto n : {"water", "sir", "circadian", "inhibitor", "catalysis", "water-light"}) {
        CAPTURE(n);
        CHECK(run("validate " + nets(std::string(n) + ".net")).code == 0);
    }
}

TEST_CASE("validation errors carry exit codes") {
    auto unknown = write("unknown.net", R"({"format_version": "1", "lineale": "nat", "default_weight": "0",
      "places": ["H2"], "transitions": ["t"], "pre": [["O3", "t", "1"]], "post": []})");
    auto r = run("validate " + unknown);
    CHECK(r.code == 3);
    CHECK(has(r.out, "O3"));

    auto prob = write("prob.net", R"({"format_version": "1", "lineale": "prob", "default_weight": "0",
      "places": ["a"], "transitions": ["t"], "pre": [["a", "t", "2"]], "post": []})");
    CHECK(run("validate " + prob).code == 3);

    CHECK(run("validate " + write("broken.net", "{ not json")).code == 2);
    CHECK(run("validate " + write("missing.net", R"({"format_version": "1"})")).code == 2);
    CHECK(run("validate /nonexistent/file.net").code == 2);
}

TEST_CASE("check-morphism") {
    auto ok = run("check-morphism " + nets("sir-identity.morph.json"));
    CHECK(ok.code == 0);
    CHECK(has(ok.out, "ok"));
    CHECK(run("check-morphism " + nets("water-simulation.morph.json")).code == 0);

    auto broken = run("check-morphism " + nets("sir-broken.morph.json"));
    CHECK(broken.code == 1);
    CHECK(has(broken.out, "post place R, transition c"));

    auto raising = run("check-morphism " + nets("water-raising.morph.json"));
    CHECK(raising.code == 1);
    CHECK(has(raising.out, "1 violation"));
    CHECK(has(raising.out, "pre place H2"));
}

TEST_CASE("combine") {
    auto out = (scratch() / "with.net").string();
    auto r = run("combine --op with " + nets("water.net") + " " + nets("water.net") + " --out \"" + out + "\"");
    CHECK(r.code == 0);
    auto v = run("validate \"" + out + "\"");
    CHECK(v.code == 0);
    CHECK(has(v.out, "2 transitions"));

    auto single = write("single.net", R"({"format_version": "1", "lineale": "nat", "default_weight": "0",
      "places": ["p"], "transitions": ["t"], "pre": [["p", "t", "2"]], "post": [["p", "t", "3"]]})");
    auto t = (scratch() / "tensor.net").string();
    CHECK(run("combine --op tensor " + single + " " + single + " --out \"" + t + "\"").code == 0);
    auto tv = run("validate \"" + t + "\"");
    CHECK(has(tv.out, "1 place,"));
    CHECK(has(tv.out, "1 transition"));
    CHECK(has(tv.out, "pre:  1 arc {4 x1}"));
    CHECK(has(tv.out, "post: 1 arc {6 x1}"));

    auto cap = run("combine --op hom " + nets("circadian.net") + " " + nets("circadian.net") + " --out \"" +
                   (scratch() / "hom.net").string() + "\"");
    CHECK(cap.code == 4);
    CHECK(has(cap.out, "823543"));

    CHECK(run("combine --op tensor " + nets("water.net") + " " + nets("sir.net") + " --out \"" +
              (scratch() / "bad.net").string() + "\"")
              .code == 3);
    CHECK(run("combine --op frobnicate " + nets("water.net") + " " + nets("water.net") + " --out x").code == 2);
}

TEST_CASE("laws") {
    auto r = run("laws --lineale kleene3 --cases 40");
    CHECK(r.code == 0);
    CHECK(has(r.out, "all laws pass"));
    CHECK(has(r.out, "(27 cases, exhaustive)"));

    auto m = run("laws --lineale kleene3 --cases 40 --mutate-imp");
    CHECK(m.code == 1);
    CHECK(has(m.out, "FAIL adjunction"));
    CHECK(has(m.out, "counterexample:"));

    CHECK(run("laws --lineale reals").code == 2);
}

TEST_CASE("export-dot and example") {
    auto dot = run("export-dot " + nets("water.net"));
    CHECK(dot.code == 0);
    CHECK(has(dot.out, "digraph \"water\""));
    CHECK(has(dot.out, "shape=circle"));
    CHECK(has(run("export-dot " + nets("inhibitor.net")).out, "label=\"-3\""));

    auto out = scratch() / "sir.net";
    CHECK(run("example --name sir --out \"" + out.string() + "\"").code == 0);
    std::ifstream a(out), b(std::string(DIALNET_NETS_DIR) + "/sir.net");
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(run("example --name unicorn").code == 2);
}
