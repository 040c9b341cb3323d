#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "dirac/analysis.hpp"
#include "dirac/cli.hpp"
#include "dirac/errors.hpp"
#include "dirac/graph.hpp"

using namespace dirac;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/dirac_cli_" + name;
    std::ofstream file(path);
    file << content;
    return path;
}

}  // namespace

TEST_CASE("complex literals") {
    CHECK(parse_complex("1") == Complex(1, 0));
    CHECK(parse_complex("-2.5e-1") == Complex(-0.25, 0));
    CHECK(parse_complex("1+2i") == Complex(1, 2));
    CHECK(parse_complex("1-2i") == Complex(1, -2));
    CHECK(parse_complex("3i") == Complex(0, 3));
    CHECK(parse_complex("-i") == Complex(0, -1));
    CHECK(parse_complex("1e-2+3.5i") == Complex(0.01, 3.5));
    CHECK(parse_complex(" 2 + 3 i ") == Complex(2, 3));
    CHECK_THROWS_AS(parse_complex("abc"), input_error);
    CHECK(format_complex(Complex(1, 2)) == "1+2i");
    CHECK(format_complex(Complex(-0.5, 0)) == "-0.5");
    CHECK(parse_complex(format_complex(Complex(0.125, -7))) == Complex(0.125, -7));
}

TEST_CASE("gen emits canonical edge lists") {
    const RunResult r = run_cli({"gen", "cycle", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == serialize_graph(generate("cycle", 3)));
}

TEST_CASE("analyze reports and exit codes") {
    const RunResult octa = run_cli({"analyze", "gen:octahedron"});
    REQUIRE(octa.code == 0);
    const json report = json::parse(octa.out);
    CHECK(report["euler_characteristic"] == 2);
    CHECK(report["betti"] == json::array({1, 0, 1}));
    CHECK(report["curvature_total"] == "2");
    for (const auto& row : report["mckean_singer_deviations"])
        CHECK(row["deviation"].get<double>() <= 1e-8 * 26);

    // byte-identical on repeated runs
    const RunResult again = run_cli({"analyze", "gen:octahedron"});
    CHECK(octa.out == again.out);

    // icosahedron spectrum carries sqrt(3 +- sqrt 5) and sqrt(5 +- sqrt 5)
    const RunResult icosa = run_cli({"analyze", "gen:icosahedron"});
    REQUIRE(icosa.code == 0);
    const json icosa_report = json::parse(icosa.out);
    for (double special :
         {std::sqrt(3 - std::sqrt(5.0)), std::sqrt(5 - std::sqrt(5.0)),
          std::sqrt(3 + std::sqrt(5.0)), std::sqrt(5 + std::sqrt(5.0))}) {
        bool found = false;
        for (const auto& value : icosa_report["dirac_spectrum"])
            if (std::abs(value.get<double>() - special) < 1e-8)
                found = true;
        CHECK(found);
    }

    // an empty graph file yields an all-empty report
    const std::string empty_path = write_temp("empty.txt", "0\n");
    const RunResult empty = run_cli({"analyze", empty_path});
    REQUIRE(empty.code == 0);
    const json empty_report = json::parse(empty.out);
    CHECK(empty_report["f_vector"].empty());
    CHECK(empty_report["euler_characteristic"] == 0);
    CHECK(empty_report["complexity"]["sign"] == 0);

    CHECK(run_cli({"analyze", "/nonexistent/file.txt"}).code == 2);
    const std::string bad_path = write_temp("bad.txt", "2\n0 0\n");
    CHECK(run_cli({"analyze", bad_path}).code == 2);
    CHECK(run_cli({"analyze", "gen:nosuch"}).code == 2);
    CHECK(run_cli({"nosuchcommand"}).code == 2);
}

TEST_CASE("analyze batches run on a worker pool") {
    setenv("DIRAC_GRAPH_THREADS", "2", 1);
    const RunResult batch =
        run_cli({"analyze", "gen:cycle:4", "gen:complete:3", "--jobs", "4"});
    unsetenv("DIRAC_GRAPH_THREADS");
    REQUIRE(batch.code == 0);
    const json reports = json::parse(batch.out);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0]["input"] == "gen:cycle:4");
    CHECK(reports[0]["report"]["euler_characteristic"] == 0);
    CHECK(reports[1]["report"]["euler_characteristic"] == 1);
}

TEST_CASE("spectrum subcommand") {
    const RunResult lap = run_cli({"spectrum", "gen:cycle:4"});
    REQUIRE(lap.code == 0);
    const json spec = json::parse(lap.out);
    CHECK(spec["eigenvalues"].size() == 8);
    CHECK(spec["grading"].size() == 8);

    const RunResult csv = run_cli({"spectrum", "gen:cycle:4", "--format", "csv"});
    CHECK(csv.out.rfind("index,eigenvalue,grading", 0) == 0);

    const RunResult dirac_out = run_cli({"spectrum", "gen:complete:3", "--dirac"});
    const json dspec = json::parse(dirac_out.out);
    CHECK(dspec["eigenvalues"].size() == 7);
}

TEST_CASE("betti and verify subcommands") {
    const json betti_out =
        json::parse(run_cli({"betti", "gen:icosahedron"}).out);
    CHECK(betti_out["betti"] == json::array({1, 0, 1}));

    for (const char* check :
         {"mckean-singer", "gauss-bonnet", "handshake", "parity", "hodge"}) {
        const RunResult r = run_cli({"verify", check, "gen:octahedron",
                                     "gen:cycle:5"});
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out)["ok"] == true);
    }
}

TEST_CASE("evolve subcommands emit CSV") {
    for (const char* kind : {"heat", "wave", "schrodinger", "map"}) {
        const RunResult r =
            run_cli({"evolve", kind, "gen:cycle:4", "--t", "2", "--steps", "4",
                     "--seed", "7"});
        REQUIRE(r.code == 0);
        CHECK(r.out.rfind("time,", 0) == 0);
        CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
    }
    const RunResult complex_heat =
        run_cli({"evolve", "heat", "gen:cycle:4", "--t", "1+1i", "--steps", "3"});
    CHECK(complex_heat.code == 0);
    CHECK(run_cli({"evolve", "wave", "gen:cycle:4", "--t", "1+1i"}).code == 2);
}

TEST_CASE("compare, curvature, nerve and contract subcommands") {
    const std::string path3 = write_temp("path3.txt", "3\n0 1\n1 2\n");
    const json compare_out =
        json::parse(run_cli({"compare", "gen:complete:3", path3}).out);
    CHECK(compare_out["simplex_distance"] == "2/7");
    CHECK(compare_out["max_degree_used"] == 3);

    const RunResult curvature_csv = run_cli({"curvature", "gen:octahedron"});
    CHECK(curvature_csv.out.rfind("vertex,curvature,curvature_float", 0) == 0);
    CHECK(curvature_csv.out.find("0,1/3,") != std::string::npos);
    const json curvature_json = json::parse(
        run_cli({"curvature", "gen:octahedron", "--format", "json"}).out);
    CHECK(curvature_json["total"] == "2");

    const std::string c6 = write_temp("c6.txt", serialize_graph(generate("cycle", 6)));
    const std::string cover = write_temp("cover.txt", "0 1 2\n2 3\n3 4 5\n5 0\n");
    const json nerve_out = json::parse(run_cli({"nerve", c6, cover}).out);
    CHECK(nerve_out["validation"]["valid"] == true);
    CHECK(nerve_out["betti_check"]["equal"] == true);
    CHECK(nerve_out["nerve_edge_list"] == "4\n0 1\n0 3\n1 2\n2 3\n");

    const json contract_out =
        json::parse(run_cli({"contract", "gen:complete:5"}).out);
    CHECK(contract_out["removed"].size() == 4);
    CHECK(contract_out["betti_preserved"] == true);
}

TEST_CASE("identity violations exit with code 3") {
    // a tolerance below machine precision turns honest rounding into a failure
    const RunResult r = run_cli(
        {"verify", "mckean-singer", "gen:octahedron", "--tolerance", "1e-30"});
    CHECK(r.code == 3);
    CHECK(r.err.find("identity violation") != std::string::npos);
}

TEST_CASE("verify without inputs sweeps the builtin generators") {
    const RunResult r = run_cli({"verify", "parity"});
    REQUIRE(r.code == 0);
    const json out = json::parse(r.out);
    CHECK(out["ok"] == true);
    CHECK(out["results"].size() == 11);
}

TEST_CASE("analyze exits zero on all builtin generators") {
    for (const std::string& name : generator_names())
        CHECK(run_cli({"analyze", "gen:" + name}).code == 0);
}
