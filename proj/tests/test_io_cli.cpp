#include <doctest.h>

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "turansw/cli.hpp"
#include "turansw/io.hpp"
#include "turansw/paley.hpp"

using namespace turansw;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("line formats round trip") {
    auto t = paley_tournament(7);
    CHECK(to_line(t) == "T 7:d35bb8");
    CHECK(parse_tournament_line(to_line(t)) == t);

    auto g = paley_two_graph(3);
    CHECK(to_line(g) == "G 4:a0");
    CHECK(parse_two_graph_line(to_line(g)) == g);

    auto d = random_three_tournament(5, 1);
    CHECK(parse_three_tournament_line(to_line(d)) == d);

    auto x = enumerate_two_graphs(5)[37];
    CHECK(parse_switching_set_line(to_line(x)) == x);

    auto f = character_function(7);
    CHECK(to_line(f) == "F 7:110");
    CHECK(parse_admissible_line(to_line(f)) == f);

    CHECK_THROWS_AS(parse_tournament_line("G 4:a0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tournament_line("T 4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tournament_line("T 3:zz"), std::invalid_argument);
    CHECK_THROWS_AS(parse_admissible_line("F 7:11"), std::invalid_argument);
}

TEST_CASE("hypergraph json round trip") {
    auto h = pattern_hypergraph(paley_two_graph(7), paley_two_graph(3));
    auto j = hypergraph_to_json(h);
    CHECK(j["n"] == 8);
    CHECK(j["r"] == 4);
    CHECK(j["edges"].size() == 28);
    CHECK(hypergraph_from_json(j) == h);
}

TEST_CASE("fixture files match the bundled tournaments and round trip") {
    for (int r : {6, 7, 8}) {
        std::ifstream f(std::string(TURANSW_DATA_DIR) + "/special_r" + std::to_string(r) + ".txt");
        REQUIRE(f.good());
        std::string line;
        std::getline(f, line);
        CHECK(line == to_line(special_example_tournament(r)));
        CHECK(to_line(parse_tournament_line(line)) == line);
    }
}

TEST_CASE("census command") {
    auto res = run({"census", "--n", "4"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("2 switching classes") != std::string::npos);

    auto js = run({"census", "--n", "4", "--json", "--stable-output"});
    CHECK(js.exit_code == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["tournaments"] == 4);
    CHECK(j["switching_classes"] == 2);
    CHECK(j["aut_histogram"].size() == 2);
    CHECK(j.count("runtime_ms") == 0);

    CHECK(run({"census", "--n", "12"}).exit_code == 2);
    CHECK(run({"census"}).exit_code == 2);
}

TEST_CASE("special command") {
    auto res = run({"special", "--r", "6", "--json", "--stable-output"});
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    REQUIRE(j["special"].size() == 2);
    bool saw_best = false;
    for (const auto& sc : j["special"])
        if (sc["best"] == true) {
            saw_best = true;
            CHECK(sc["bound"] == "9/64");
            CHECK(sc["aut_order"] == 5);
        }
    CHECK(saw_best);
}

TEST_CASE("paley and paley-extremal commands") {
    auto res = run({"paley", "--q", "7"});
    CHECK(res.exit_code == 0);
    CHECK(res.out == "T 7:d35bb8\nG 8:72579ba2d69950\n");

    auto proj = run({"paley", "--q", "7", "--model", "projective"});
    CHECK(proj.out == "G 8:72579ba2d69950\n");

    CHECK(run({"paley", "--q", "5"}).exit_code == 2);

    auto pex = run({"paley-extremal", "--q", "7", "--r", "4", "--json", "--stable-output"});
    CHECK(pex.exit_code == 0);
    auto j = nlohmann::json::parse(pex.out);
    CHECK(j["overall_pass"] == true);

    CHECK(run({"paley-extremal", "--q", "7", "--r", "6"}).exit_code == 2);
}

TEST_CASE("turan command") {
    auto h = pattern_hypergraph(paley_two_graph(7), paley_two_graph(3));
    const std::string path = "turan_input_test.json";
    {
        std::ofstream f(path);
        f << hypergraph_to_json(h);
    }
    auto res = run({"turan", "--input", path, "--json", "--stable-output"});
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["overall_pass"] == true);

    // a hypergraph with an r-triangle fails and exits 1
    auto bad = Hypergraph::from_edges(
        5, 4, {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}});
    {
        std::ofstream f(path);
        f << hypergraph_to_json(bad);
    }
    auto fail = run({"turan", "--input", path});
    CHECK(fail.exit_code == 1);
    CHECK(fail.out.find("witness") != std::string::npos);

    CHECK(run({"turan", "--input", "no_such_file.json"}).exit_code == 2);
}

TEST_CASE("uniqueness command") {
    auto res = run({"uniqueness", "--p", "7", "--json", "--stable-output"});
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["overall_pass"] == true);
    CHECK(run({"uniqueness", "--p", "13"}).exit_code == 2);
}

TEST_CASE("expect command") {
    auto res = run({"expect", "--paley", "3", "--n", "5", "--stable-output"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("5/4") != std::string::npos);

    // randomized path requires a seed
    CHECK(run({"expect", "--paley", "3", "--n", "5", "--samples", "1000"}).exit_code == 2);

    auto mc = run({"expect", "--paley", "3", "--n", "5", "--samples", "20000", "--seed", "5",
                   "--stable-output"});
    CHECK(mc.exit_code == 0);
    auto mc2 = run({"expect", "--paley", "3", "--n", "5", "--samples", "20000", "--seed", "5",
                    "--stable-output", "--threads", "1"});
    CHECK(mc.out == mc2.out);  // byte-identical under a different thread count
}

TEST_CASE("tri commands") {
    auto demo = run({"tri-demo", "--n", "5", "--seed", "7", "--stable-output"});
    CHECK(demo.exit_code == 0);
    CHECK(run({"tri-demo", "--n", "5"}).exit_code == 2);

    const std::string path = "tri_input_test.txt";
    {
        std::ofstream f(path);
        f << to_line(random_three_tournament(5, 99)) << "\n";
    }
    auto res = run({"tri-count", "--input", path, "--json", "--stable-output"});
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["overall_pass"] == true);
}

TEST_CASE("fixtures command and output redirection") {
    auto res = run({"fixtures"});
    CHECK(res.exit_code == 0);
    CHECK(res.out == "T 6:a548\nT 7:400080\nT 8:28943800\n");

    auto to_file = run({"fixtures", "--out", "fixtures_test.txt"});
    CHECK(to_file.exit_code == 0);
    std::ifstream f("fixtures_test.txt");
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == res.out);
}

TEST_CASE("usage errors") {
    CHECK(run({}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({"--help"}).exit_code == 0);
}
