#include <catch2/catch_amalgamated.hpp>

#include <qborwein/rational.hpp>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs the installed binary through the shell; `prefix` may set environment
// variables in front of the command.
CliResult run_cli(const std::string& args, const std::string& prefix = "") {
    static int seq = 0;
    const fs::path base =
        fs::temp_directory_path()
        / ("qbcli-" + std::to_string(::getpid()) + "-" + std::to_string(seq++));
    const fs::path outp = base.string() + ".out";
    const fs::path errp = base.string() + ".err";
    const std::string cmd = prefix + std::string(QB_CLI_PATH) + " " + args + " >"
                            + outp.string() + " 2>" + errp.string();
    const int rc = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(outp);
    r.err = slurp(errp);
    std::error_code ec;
    fs::remove(outp, ec);
    fs::remove(errp, ec);
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

struct TempDir {
    fs::path path;
    TempDir() {
        static int seq = 0;
        path = fs::temp_directory_path()
               / ("qbcli-dir-" + std::to_string(::getpid()) + "-" + std::to_string(seq++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

} // namespace

TEST_CASE("expand prints the integer product in every format") {
    const std::vector<std::string> expected{"1", "-1", "-1", "1", "-1", "0", "2", "-1"};

    SECTION("csv") {
        const CliResult r = run_cli("expand --d 1 --order 7 --format csv");
        REQUIRE(r.exit_code == 0);
        const auto lines = lines_of(r.out);
        REQUIRE(lines.size() == 9);
        CHECK(lines[0] == "index,value");
        for (int k = 0; k <= 7; ++k)
            CHECK(lines[size_t(k) + 1] == std::to_string(k) + "," + expected[size_t(k)]);
    }

    SECTION("json") {
        const CliResult r = run_cli("expand --d 1 --order 7 --format json");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(j.at("version") == 1);
        CHECK(j.at("ring") == "rational");
        CHECK(j.at("order") == 7);
        CHECK(j.at("coeffs") == json(expected));
        CHECK(j.at("spec").at("n") == "inf");
        CHECK(j.at("spec").at("d") == "1");
    }

    SECTION("text") {
        const CliResult r = run_cli("expand --d 1 --order 3");
        REQUIRE(r.exit_code == 0);
        CHECK(r.out.find("q^0") != std::string::npos);
        CHECK(r.out.find("q^3") != std::string::npos);
    }
}

TEST_CASE("expand handles the degenerate and the algebraic exponent") {
    SECTION("d = 0 gives the constant series 1") {
        const CliResult r = run_cli("expand --d 0 --order 5 --format json");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(j.at("coeffs") == json({"1", "0", "0", "0", "0", "0"}));
    }

    SECTION("critical exponent kills the cubic coefficient exactly") {
        const CliResult r = run_cli("expand --d critical --order 3 --ring quadratic --format json");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(j.at("ring") == "quadratic");
        const json& coeffs = j.at("coeffs");
        REQUIRE(coeffs.size() == 4);
        CHECK(coeffs.at(1).at("a") == "-9/2");
        CHECK(coeffs.at(1).at("b") == "1/2");
        CHECK(coeffs.at(1).at("D") == 73);
        CHECK(coeffs.at(3).at("a") == "0");
        CHECK(coeffs.at(3).at("b") == "0");
    }

    SECTION("decimal exponents are read exactly") {
        const CliResult a = run_cli("expand --d 0.5 --order 6 --format json");
        const CliResult b = run_cli("expand --d 1/2 --order 6 --format json");
        REQUIRE(a.exit_code == 0);
        REQUIRE(b.exit_code == 0);
        CHECK(json::parse(a.out).at("coeffs") == json::parse(b.out).at("coeffs"));
    }
}

TEST_CASE("dissect splits finite and fractional products") {
    SECTION("finite n = 1 at its natural degree") {
        const CliResult r = run_cli("dissect --n 1 --format csv");
        REQUIRE(r.exit_code == 0);
        const auto lines = lines_of(r.out);
        REQUIRE(lines.size() == 5);
        CHECK(lines[0] == "component,index,value");
        CHECK(lines[1] == "A,0,1");
        CHECK(lines[2] == "A,1,1");
        CHECK(lines[3] == "B,0,1");
        CHECK(lines[4] == "C,0,1");
    }

    SECTION("d = 1 at order 8") {
        const CliResult r = run_cli("dissect --d 1 --order 8 --format json");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(j.at("A").at("coeffs") == json({"1", "1", "2"}));
        CHECK(j.at("B").at("coeffs") == json({"1", "1", "1"}));
        CHECK(j.at("C").at("coeffs") == json({"1", "0", "1"}));
    }
}

TEST_CASE("verify reports each verdict with its exit code") {
    SECTION("nonnegative at d = 1") {
        const CliResult r = run_cli("verify --d 1 --order 30 --format json");
        CHECK(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(j.at("status") == "verified-nonnegative");
        CHECK(j.at("checked_order") == 30);
        CHECK(j.at("components").at("A").at("first_violation").is_null());
        CHECK(j.at("components").at("A").at("witness").is_null());
    }

    SECTION("order 0 is trivially nonnegative") {
        CHECK(run_cli("verify --d 1 --order 0").exit_code == 0);
    }

    SECTION("violation at d = 1/5 with the exact witness") {
        const CliResult r = run_cli("verify --d 1/5 --order 10 --format json");
        CHECK(r.exit_code == 1);
        const json j = json::parse(r.out);
        CHECK(j.at("status") == "violation");
        CHECK(j.at("ring") == "rational");
        CHECK(j.at("components").at("A").at("first_violation") == 1);
        CHECK(j.at("components").at("A").at("witness") == "-1/125");
        CHECK(j.at("components").at("B").at("first_violation").is_null());
        CHECK(j.at("components").at("C").at("first_violation").is_null());
    }

    SECTION("interval ring cannot decide the exact zero at the critical point") {
        const CliResult r = run_cli("verify --d critical --ring interval --order 6 --format json");
        CHECK(r.exit_code == 2);
        CHECK(json::parse(r.out).at("status") == "inconclusive");
    }

    SECTION("quadratic ring decides the critical point exactly") {
        const CliResult r = run_cli("verify --d critical --ring quadratic --order 30 --format json");
        CHECK(r.exit_code == 0);
        CHECK(json::parse(r.out).at("status") == "verified-nonnegative");
    }

    SECTION("interval ring certifies an interior rational") {
        CHECK(run_cli("verify --d 1/2 --ring interval --order 40").exit_code == 0);
    }

    SECTION("usage errors") {
        CHECK(run_cli("verify --d critical --ring rational --order 5").exit_code == 3);
        const CliResult r = run_cli("verify --d 1 --ring formal --order 5");
        CHECK(r.exit_code == 3);
        CHECK(r.err.find("region") != std::string::npos);
        CHECK(run_cli("verify --d 1/0 --order 5").exit_code == 3);
        CHECK(run_cli("verify --d bogus --order 5").exit_code == 3);
        CHECK(run_cli("").exit_code == 3);
        CHECK(run_cli("frobnicate").exit_code == 3);
    }
}

TEST_CASE("finite products verify clean through the command line") {
    const CliResult r = run_cli("finite --n 2 --format json");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("status") == "verified-nonnegative");
    CHECK(j.at("checked_order") == 12);

    const CliResult sq = run_cli("finite --n 2 --squared --format json");
    CHECK(sq.exit_code == 0);
    CHECK(json::parse(sq.out).at("checked_order") == 24);
}

TEST_CASE("region emits machine readable intervals") {
    SECTION("order 1 spans the default domain") {
        const CliResult r = run_cli("region --order 1 --format json");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        REQUIRE(j.at("intervals").size() == 1);
        CHECK(j.at("intervals").at(0).at("lo").at("value") == "0");
        CHECK(j.at("intervals").at(0).at("hi").at("value") == "4");
    }

    SECTION("order 3 pins the algebraic endpoint") {
        const CliResult r = run_cli("region --order 3 --format json");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(j.at("version") == 1);
        CHECK(j.at("constraint_order") == 3);
        CHECK(j.at("domain") == json({"0", "4"}));
        REQUIRE(j.at("intervals").size() == 1);
        const json& lo = j.at("intervals").at(0).at("lo");
        CHECK(lo.at("type") == "algebraic");
        CHECK(lo.at("minpoly") == json({"2", "-9", "1"}));
        CHECK(lo.at("interval").is_array());
        CHECK(lo.at("interval").size() == 2);
        CHECK(j.at("intervals").at(0).at("hi") == json({{"type", "rational"}, {"value", "3"}}));
        CHECK(j.at("binding").at("0.lo") == json({3}));
        CHECK(j.at("binding").at("0.hi") == json({2}));
        CHECK(r.err.find("1 interval(s)") != std::string::npos);
        CHECK(r.err.find("sqrt(73)") != std::string::npos);
    }

    SECTION("custom domain") {
        const CliResult r = run_cli("region --order 2 --domain 0:8 --format json");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(j.at("domain") == json({"0", "8"}));
        REQUIRE(j.at("intervals").size() == 1);
        CHECK(j.at("intervals").at(0).at("hi").at("value") == "3");
    }
}

TEST_CASE("scan aggregates verdicts and keeps input order") {
    SECTION("mixed list exits with the worst verdict") {
        const CliResult r = run_cli("scan --values 1,1/5 --order 9 --format json");
        CHECK(r.exit_code == 1);
        const json j = json::parse(r.out);
        CHECK(j.at("order") == 9);
        REQUIRE(j.at("results").size() == 2);
        CHECK(j.at("results").at(0).at("d") == "1");
        CHECK(j.at("results").at(0).at("report").at("status") == "verified-nonnegative");
        CHECK(j.at("results").at(1).at("d") == "1/5");
        CHECK(j.at("results").at(1).at("report").at("status") == "violation");
    }

    SECTION("all clean list exits zero") {
        CHECK(run_cli("scan --values 1,2,3 --order 20").exit_code == 0);
    }

    SECTION("grids are inclusive and deterministic under parallelism") {
        const std::string args = "scan --grid 2:3:5 --order 12 --format json";
        const CliResult one = run_cli(args + " --jobs 1");
        const CliResult four = run_cli(args + " --jobs 4");
        REQUIRE(one.exit_code == 0);
        REQUIRE(four.exit_code == 0);
        CHECK(one.out == four.out);
        const json j = json::parse(one.out);
        REQUIRE(j.at("results").size() == 5);
        CHECK(j.at("results").at(0).at("d") == "2");
        CHECK(j.at("results").at(2).at("d") == "5/2");
        CHECK(j.at("results").at(4).at("d") == "3");
    }

    SECTION("a grid step through the gap between the two branches flags it") {
        // d = 3/2 lies between the conjectured branches and violates at q^5
        const CliResult r = run_cli("scan --grid 1:2:3 --order 12 --format json");
        CHECK(r.exit_code == 1);
        const json j = json::parse(r.out);
        REQUIRE(j.at("results").size() == 3);
        CHECK(j.at("results").at(1).at("d") == "3/2");
        CHECK(j.at("results").at(1).at("report").at("status") == "violation");
        CHECK(j.at("results").at(1).at("report").at("components").at("C").at("first_violation") == 1);
        CHECK(j.at("results").at(1).at("report").at("components").at("C").at("witness") == "-27/256");
    }

    SECTION("an empty scan is a usage error") {
        CHECK(run_cli("scan --order 5").exit_code == 3);
    }
}

TEST_CASE("expansion cache reuses results byte for byte") {
    TempDir tmp;
    const std::string args = "expand --d 7/3 --order 25 --format json --cache-dir " + tmp.path.string();
    const CliResult cold = run_cli(args);
    REQUIRE(cold.exit_code == 0);

    int json_files = 0;
    for (const auto& e : fs::directory_iterator(tmp.path))
        if (e.path().extension() == ".json") {
            ++json_files;
            CHECK(e.path().stem().string().size() == 16);
        }
    CHECK(json_files == 1);

    const CliResult warm = run_cli(args);
    REQUIRE(warm.exit_code == 0);
    CHECK(warm.out == cold.out);

    SECTION("environment variable names the default directory") {
        TempDir envdir;
        const CliResult r = run_cli("expand --d 5/2 --order 10 --format json",
                                    "QBORWEIN_CACHE_DIR=" + envdir.path.string() + " ");
        REQUIRE(r.exit_code == 0);
        CHECK(!fs::is_empty(envdir.path));
    }
}

TEST_CASE("triple product identity check runs both signs") {
    const CliResult r = run_cli("jtp --order 100");
    CHECK(r.exit_code == 0);
    CHECK(!r.out.empty());
}
