#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "idom/cli.hpp"
#include "idom/generators.hpp"
#include "test_support.hpp"

using namespace idom;
using idom::testing::TempFile;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "idom");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool has_line(const std::string &text, const std::string &line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (l == line) return true;
    return false;
}

// Scoped environment override.
struct EnvVar {
    std::string name;
    EnvVar(std::string n, const std::string &value) : name(std::move(n)) {
        ::setenv(name.c_str(), value.c_str(), 1);
    }
    ~EnvVar() { ::unsetenv(name.c_str()); }
};

} // namespace

TEST_CASE("analyze") {
    TempFile c3("3 3\n0 1\n1 2\n2 0\n");
    auto r = run({"analyze", c3.path()});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "period=3"));
    CHECK(has_line(r.out, "sccs=1"));
    CHECK(has_line(r.out, "source_sccs={0,1,2}"));
    CHECK(has_line(r.out, "layers=[1,1,1]"));

    TempFile path(format_digraph(gen_path(3)));
    r = run({"analyze", path.path()});
    CHECK(has_line(r.out, "period=0"));
    CHECK(has_line(r.out, "sccs=3"));
    CHECK(has_line(r.out, "source_sccs={0}"));
    CHECK(r.out.find("layers=") == std::string::npos);

    TempFile d53(format_digraph(gen_dhk({5, 3, DhkVariant::IdsFree, DhkRules::Text}).graph));
    r = run({"analyze", d53.path()});
    CHECK(has_line(r.out, "period=5"));
    CHECK(has_line(r.out, "layers=[3,6,6,3,6]"));

    r = run({"analyze", "--json", d53.path()});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["vertices"] == 24);
    CHECK(j["period"] == 5);
    CHECK(j["strongly_connected"] == true);
    CHECK(j["layers"] == nlohmann::json({3, 6, 6, 3, 6}));
}

TEST_CASE("analyze warns about duplicate arcs") {
    TempFile dup("2 2\n0 1\n0 1\n");
    auto r = run({"analyze", dup.path()});
    CHECK(r.code == 0);
    CHECK(r.err.find("duplicate") != std::string::npos);
}

TEST_CASE("solve") {
    TempFile c4(format_digraph(gen_cycle(4)));
    auto r = run({"solve", c4.path()});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "status=found set=0,2"));

    TempFile c5(format_digraph(gen_cycle(5)));
    r = run({"solve", c5.path()});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "status=none"));
    r = run({"solve", "--status-exit", c5.path()});
    CHECK(r.code == 1);

    TempFile wp(format_digraph(cartesian_product(gen_wheel(3), gen_paw())));
    r = run({"solve", "--method", "exact", wp.path()});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "status=none"));
    CHECK(has_line(r.out, "method=exact"));

    r = run({"solve", "--method", "brute", "--json", c4.path()});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "found");
    CHECK(j["set"] == nlohmann::json({0, 2}));
    CHECK(j["method"] == "brute");

    r = run({"solve", "--method", "layers", "--threads", "4", c4.path()});
    CHECK(has_line(r.out, "status=found set=0,2"));

    r = run({"solve", "--method", "brute", "--cap", "3", c4.path()});
    CHECK(r.code == 3);

    r = run({"solve", "--method", "nonsense", c4.path()});
    CHECK(r.code == 2);
}

TEST_CASE("solve honours IDOM_BUDGET") {
    TempFile d53(format_digraph(gen_dhk({5, 3, DhkVariant::IdsFree, DhkRules::Text}).graph));
    {
        EnvVar budget("IDOM_BUDGET", "5");
        auto r = run({"solve", "--method", "exact", d53.path()});
        CHECK(r.code == 3);
        CHECK(has_line(r.out, "status=budget-exceeded"));
    }
    {
        EnvVar budget("IDOM_BUDGET", "abc");
        CHECK(run({"solve", d53.path()}).code == 2);
    }
    CHECK(run({"solve", "--method", "exact", d53.path()}).code == 0);
}

TEST_CASE("verify") {
    TempFile c4(format_digraph(gen_cycle(4)));
    auto r = run({"verify", c4.path(), "--set", "0,2"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "ids=true"));

    TempFile c3(format_digraph(gen_cycle(3)));
    r = run({"verify", c3.path(), "--set", "0"});
    CHECK(has_line(r.out, "independent=true"));
    CHECK(has_line(r.out, "dominating=false"));
    CHECK(has_line(r.out, "undominated=2"));

    r = run({"verify", c3.path(), "--set", "0,1"});
    CHECK(has_line(r.out, "arcs_inside=0->1"));

    r = run({"verify", "--json", c3.path(), "--set", "0,1"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["ids"] == false);
    CHECK(j["violations"]["arcs"] == nlohmann::json::parse("[[0,1]]"));

    r = run({"verify", c3.path(), "--set", ""});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "undominated=0,1,2"));

    CHECK(run({"verify", c3.path(), "--set", "0,,1"}).code == 2);
    CHECK(run({"verify", c3.path(), "--set", "x"}).code == 2);
    CHECK(run({"verify", c3.path(), "--set", "7"}).code == 2);
}

TEST_CASE("brute") {
    TempFile c3(format_digraph(gen_cycle(3)));
    auto r = run({"brute", c3.path(), "--what", "i"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "i=none"));
    r = run({"brute", c3.path(), "--what", "gamma"});
    CHECK(has_line(r.out, "gamma=2"));
    r = run({"brute", c3.path(), "--what", "exist"});
    CHECK(has_line(r.out, "exist=false"));

    TempFile c4(format_digraph(gen_cycle(4)));
    r = run({"brute", c4.path(), "--what", "idomatic"});
    CHECK(has_line(r.out, "idomatic=2"));
    r = run({"brute", "--json", c4.path(), "--what", "i"});
    CHECK(nlohmann::json::parse(r.out)["value"] == 2);

    CHECK(run({"brute", c4.path(), "--what", "i", "--cap", "3"}).code == 3);
}

TEST_CASE("gen") {
    auto r = run({"gen", "cycle", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "3 3\n0 1\n1 2\n2 0\n");

    r = run({"gen", "dhk", "5", "3"});
    CHECK(parse_digraph(r.out).graph == gen_dhk({5, 3, DhkVariant::IdsFree, DhkRules::Text}).graph);
    r = run({"gen", "dhk", "5", "3", "--variant", "ids", "--rules", "figure"});
    CHECK(parse_digraph(r.out).graph == gen_dhk({5, 3, DhkVariant::WithIds, DhkRules::Figure}).graph);
    CHECK(run({"gen", "dhk", "4", "3"}).code == 2);

    r = run({"gen", "cn-ids", "3"});
    CHECK(r.out == "0,4,8\n");

    TempFile w3(run({"gen", "wheel", "3"}).out);
    TempFile paw(run({"gen", "paw"}).out);
    r = run({"gen", "product", w3.path(), paw.path()});
    CHECK(parse_digraph(r.out).graph == cartesian_product(gen_wheel(3), gen_paw()));

    TempFile edge("2 1\n0 1\n");
    r = run({"gen", "double", edge.path()});
    CHECK(r.out == "2 2\n0 1\n1 0\n");

    CHECK(run({"gen", "random-digraph", "8", "0.3", "--seed", "4"}).out ==
          format_digraph(random_digraph(8, 0.3, 4)));
    CHECK(run({"gen", "random-layered", "4", "3", "0.5", "--seed", "7"}).out ==
          format_digraph(random_layered_strong(4, 3, 0.5, 7)));
    CHECK(run({"gen", "random-undirected", "5", "0.5", "--seed", "1"}).code == 0);
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"analyze", "/nonexistent/idom/graph.txt"}).code == 2);
    TempFile bad("3 1\n0 0\n");
    auto r = run({"analyze", bad.path()});
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}
