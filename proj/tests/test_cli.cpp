// End-to-end tests of the vknot command-line tool: each case runs the real
// binary (path injected by the build as VKNOT_CLI_PATH) and checks the exact
// output text, the JSON schema round trips, and the exit-code contract
// (0 ok, 2 usage, 3 invalid input, 4 out of domain).

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr, interleaved
};

std::filesystem::path scratch_file(const std::string& tag) {
    static int counter = 0;
    return std::filesystem::temp_directory_path() /
           ("vknot_cli_" + tag + "_" + std::to_string(++counter) + ".txt");
}

RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    std::filesystem::path out_path = scratch_file("out");
    std::filesystem::path in_path = scratch_file("in");
    {
        std::ofstream in(in_path);
        in << stdin_text;
    }
    std::string cmd = std::string(VKNOT_CLI_PATH) + " " + args + " < " +
                      in_path.string() + " > " + out_path.string() + " 2>&1";
    int status = std::system(cmd.c_str());

    RunResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream out(out_path);
    std::ostringstream buf;
    buf << out.rdbuf();
    res.output = buf.str();
    std::filesystem::remove(out_path);
    std::filesystem::remove(in_path);
    return res;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

const std::string example1_json =
    R"({"crossings": [-1, 4, 3, -2, 1, -3, -4, 2], "signs": [-1, -1, -1, -1]})";

}  // namespace

TEST_CASE("version banner and usage errors", "[cli]") {
    RunResult version = run_cli("--version");
    REQUIRE(version.exit_code == 0);
    REQUIRE(contains(version.output, "vknot 1.0.0"));

    REQUIRE(run_cli("").exit_code == 2);                 // missing subcommand
    REQUIRE(run_cli("--no-such-flag").exit_code == 2);   // unknown option
    REQUIRE(run_cli("schubert 3").exit_code == 2);       // missing argument
    REQUIRE(run_cli("code").exit_code == 2);             // missing sub-subcommand
}

TEST_CASE("schubert subcommand", "[cli]") {
    SECTION("--emit alexander prints the bare polynomial") {
        RunResult res = run_cli("schubert 3 1 --emit alexander");
        REQUIRE(res.exit_code == 0);
        REQUIRE(res.output == "1 - t + t^2\n");

        RunResult res53 = run_cli("schubert 5 3 --emit alexander");
        REQUIRE(res53.exit_code == 0);
        REQUIRE(res53.output == "1 - 3*t + t^2\n");
    }

    SECTION("--emit exponents") {
        RunResult res = run_cli("schubert 5 3 --emit exponents");
        REQUIRE(res.exit_code == 0);
        REQUIRE(contains(res.output, "e: + - - +"));
        REQUIRE(contains(res.output, "s = 2"));
    }

    SECTION("full report") {
        RunResult res = run_cli("schubert 3 1");
        REQUIRE(res.exit_code == 0);
        REQUIRE(contains(res.output, "e: + +"));
        REQUIRE(contains(res.output, "w1: y x"));
        REQUIRE(contains(res.output, "w2: x y"));
        REQUIRE(contains(res.output, "code:"));
        REQUIRE(contains(res.output, "alexander: 1 - t + t^2"));
    }

    SECTION("json format") {
        RunResult res = run_cli("schubert 3 1 --format json");
        REQUIRE(res.exit_code == 0);
        json j = json::parse(res.output);
        REQUIRE(j["alpha"] == 3);
        REQUIRE(j["exponents"] == json::array({1, 1}));
        REQUIRE(j["s"]["s"] == 2);
        REQUIRE(j["alexander"] == "1 - t + t^2");
        REQUIRE(j["code"]["crossings"].size() == 8);
    }

    SECTION("parameter validation exits 3") {
        RunResult res = run_cli("schubert 4 1");
        REQUIRE(res.exit_code == 3);
        REQUIRE(contains(res.output, "invalid input"));
        REQUIRE(contains(res.output, "alpha"));
        REQUIRE(run_cli("schubert 9 3").exit_code == 3);
    }
}

TEST_CASE("code subcommands", "[cli]") {
    SECTION("arcs of the running example") {
        RunResult res = run_cli("code arcs", example1_json);
        REQUIRE(res.exit_code == 0);
        REQUIRE(contains(res.output, "S1: -1 4 3 -2"));
        REQUIRE(contains(res.output, "S2: -2 1 -3"));
        REQUIRE(contains(res.output, "S3: -3 -4"));
        REQUIRE(contains(res.output, "S4: -4 2 -1"));
    }

    SECTION("validate accepts text input inline") {
        RunResult res = run_cli("code validate 'code: 2 -1 1 -2 ; signs: + +'");
        REQUIRE(res.exit_code == 0);
        REQUIRE(contains(res.output, "valid"));
        REQUIRE(contains(res.output, "code: 2 -1 1 -2 ; signs: + +"));
    }

    SECTION("validate rejects malformed codes with exit 3") {
        RunResult res = run_cli("code validate 'code: 1 1 -1 -1 ; signs: + +'");
        REQUIRE(res.exit_code == 3);
        REQUIRE(contains(res.output, "invalid input"));

        REQUIRE(run_cli("code validate", R"({"crossings": [1], "signs": [1]})")
                    .exit_code == 3);
    }

    SECTION("normalize emits standard normal form") {
        RunResult res = run_cli("code normalize 'code: 2 -1 1 -2 ; signs: + +'");
        REQUIRE(res.exit_code == 0);
        REQUIRE(res.output == "code: -1 1 -2 2 ; signs: + +\n");
    }

    SECTION("json output round-trips through the schema") {
        RunResult first = run_cli("code normalize --format json", example1_json);
        REQUIRE(first.exit_code == 0);
        json j = json::parse(first.output);
        RunResult second = run_cli("code normalize --format json", j.dump());
        REQUIRE(second.exit_code == 0);
        REQUIRE(json::parse(second.output) == j);
    }

    SECTION("bridges") {
        RunResult res = run_cli("code bridges", example1_json);
        REQUIRE(res.exit_code == 0);
        REQUIRE(contains(res.output, "segments: 3"));
        REQUIRE(contains(res.output, "bridges: 3"));
    }

    SECTION("group presentations") {
        RunResult arc = run_cli("code group --form arc", example1_json);
        REQUIRE(arc.exit_code == 0);
        REQUIRE(contains(arc.output, "S1"));
        REQUIRE(contains(arc.output, "r1: S1 -> S2 by S2^-1"));

        RunResult over = run_cli("code group --form over", example1_json);
        REQUIRE(over.exit_code == 0);
        REQUIRE(contains(over.output, "y1"));
        REQUIRE(contains(over.output, "r1: y1 -> y2 by y3^-1"));
    }

    SECTION("peripheral pair") {
        RunResult res = run_cli("code peripheral 'code: 2 -1 1 -2 ; signs: + +'");
        REQUIRE(res.exit_code == 0);
        REQUIRE(contains(res.output, "longitude: y2 y1^-1"));
        REQUIRE(contains(res.output, "meridian: y1"));
        REQUIRE(contains(res.output, "p: 2"));
    }
}

TEST_CASE("synthesis subcommands", "[cli]") {
    SECTION("from-relator runs the one-relator pipeline") {
        RunResult res = run_cli(
            "synth from-relator",
            R"({"generators": ["x", "y"], "relators": ["x y x^-1 y^-2"]})");
        REQUIRE(res.exit_code == 0);
        REQUIRE(contains(res.output, "code:"));
        REQUIRE(contains(res.output, "r1: x -> y1 by"));
    }

    SECTION("from-relator needs l_y(r) = +-1") {
        RunResult res = run_cli(
            "synth from-relator",
            R"({"generators": ["x", "y"], "relators": ["x y x^-1 y^-1"]})");
        REQUIRE(res.exit_code == 4);
        REQUIRE(contains(res.output, "out of domain"));
    }

    SECTION("from-wirtinger accepts a cyclic presentation") {
        RunResult res = run_cli(
            "synth from-wirtinger",
            R"({"generators": ["x1", "x2"],
                "relators": ["x2^-1 x1 x2 x2^-1", "x1^-1 x2 x1 x1^-1"]})");
        REQUIRE(res.exit_code == 0);
        REQUIRE(contains(res.output, "code:"));
    }

    SECTION("presentations must be JSON") {
        REQUIRE(run_cli("synth from-wirtinger", "not json").exit_code == 3);
    }
}

TEST_CASE("baumslag-solitar subcommands", "[cli]") {
    SECTION("classify as text") {
        RunResult res = run_cli("bs classify 2 2");
        REQUIRE(res.exit_code == 0);
        REQUIRE(contains(res.output, "residually finite: yes"));
        REQUIRE(contains(res.output, "center: cyclic generated by y^2"));
        REQUIRE(contains(res.output, "abelianization: Z + Z"));
    }

    SECTION("classify as json") {
        RunResult res = run_cli("bs classify 2 3 --format json");
        REQUIRE(res.exit_code == 0);
        json j = json::parse(res.output);
        REQUIRE(j["residually_finite"] == false);
        REQUIRE(j["hopfian"] == false);
        REQUIRE(j["virtual_knot_group"] == true);
        REQUIRE(j["center"] == "trivial");
        REQUIRE(j["abelianization"]["free_rank"] == 1);
    }

    SECTION("zero arguments exit 4") {
        REQUIRE(run_cli("bs classify 0 3").exit_code == 4);
    }

    SECTION("bs code emits the 4m-crossing code") {
        RunResult res = run_cli("bs code 2");
        REQUIRE(res.exit_code == 0);
        REQUIRE(contains(res.output, "crossings: 8"));
        REQUIRE(contains(res.output, "segments: 2"));

        RunResult one = run_cli("bs code 1");
        REQUIRE(one.exit_code == 0);
        REQUIRE(contains(one.output, "code: 2 3 -1 -2 1 4 -3 -4 ; signs: - + - +"));

        REQUIRE(run_cli("bs code 0").exit_code == 4);
    }
}

TEST_CASE("alexander, nabrep, and murasugi subcommands", "[cli]") {
    SECTION("alexander from a presentation file") {
        std::filesystem::path path = scratch_file("pres");
        {
            std::ofstream f(path);
            f << R"({"generators": ["x", "y"], "relators": ["x y x y^-1 x^-1 y^-1"]})";
        }
        RunResult res = run_cli("alexander --file " + path.string());
        std::filesystem::remove(path);
        REQUIRE(res.exit_code == 0);
        REQUIRE(res.output == "1 - t + t^2\n");
    }

    SECTION("alexander domain errors exit 4") {
        RunResult res = run_cli(
            "alexander", R"({"generators": ["x", "y"], "relators": ["x y x^-1 y^-1"]})");
        REQUIRE(res.exit_code == 4);
        REQUIRE(contains(res.output, "out of domain"));
    }

    SECTION("nabrep prints Phi") {
        RunResult res = run_cli("nabrep 'y x'");
        REQUIRE(res.exit_code == 0);
        REQUIRE(res.output == "(1 - t + t^2) + (-t)*u\n");

        REQUIRE(run_cli("nabrep 'z'").exit_code == 3);  // outside the alphabet
    }

    SECTION("murasugi divisor search") {
        RunResult res = run_cli("murasugi 't^2 - t + 1'");
        REQUIRE(res.exit_code == 0);
        REQUIRE(res.output == "divides 1 - t^6\n");

        RunResult bounded = run_cli("murasugi 't^2 - t + 1' --rmax 5");
        REQUIRE(bounded.exit_code == 0);
        REQUIRE(bounded.output == "divides no 1 - t^r for r <= 5\n");

        RunResult fig8 = run_cli("murasugi '1 - 3*t + t^2'");
        REQUIRE(fig8.exit_code == 0);
        REQUIRE(fig8.output == "divides no 1 - t^r for r <= 8\n");

        REQUIRE(run_cli("murasugi '0'").exit_code == 4);
        REQUIRE(run_cli("murasugi 'u + 1'").exit_code == 3);
    }
}
