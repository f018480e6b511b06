#include "cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code = -1;
    std::string out, err;
    nlohmann::json report() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    Run r;
    r.code = ho::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

const std::string kPower2 = R"({"kind":"power","p":2})";

}  // namespace

TEST_CASE("norm of 1 + z is sqrt 2")
{
    const Run r = run({"norm", "--phi", kPower2, "--fn", R"({"kind":"taylor","coeffs":[[1,0],[1,0]]})"});
    REQUIRE(r.code == 0);
    const auto j = r.report();
    CHECK(std::abs(j["result"]["value"].get<double>() - std::sqrt(2.0)) < 1e-6);
    CHECK(j["schema_version"] == 1);
    CHECK(j["command"] == "norm");
    CHECK(j["config"]["grid_size"] == 4096);
    CHECK(j["config"]["seed"] == 7);
}

TEST_CASE("boundary norms and global flags after the subcommand")
{
    const Run r = run({"norm", "--phi", kPower2, "--fn", R"({"kind":"builtin","name":"cos","params":{"k":1,"amplitude":2}})", "--grid", "256"});
    REQUIRE(r.code == 0);
    const auto j = r.report();
    CHECK(std::abs(j["result"]["value"].get<double>() - std::sqrt(2.0)) < 1e-10);
    CHECK(j["result"]["in_hardy_space"] == false);
    CHECK(j["config"]["grid_size"] == 256);
}

TEST_CASE("reports are deterministic")
{
    const std::vector<std::string> args{"hankel", "norm", "--symbol", R"({"kind":"taylor","coeffs":[[0,0],[1,0],[0,0.5]]})",
                                        "--phi1", R"({"kind":"power","p":4})", "--grid", "256", "--seed", "11"};
    const Run a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("exit codes")
{
    CHECK(run({"norm", "--phi", R"({"kind":"power","p":-1})", "--fn", R"({"kind":"taylor","coeffs":[[1,0]]})"}).code == 2);
    CHECK(run({"norm", "--phi", kPower2, "--fn", R"({"kind":"taylor","coeffs":[[1,0]]})", "--grid", "1000"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"factor", "riesz", "--fn", R"({"kind":"taylor","coeffs":[[1,0],[1,0]]})", "--zeros", R"({"zeros":[[0.5,0]]})"}).code == 3);
    const Run strong = run({"factor", "strong", "--phi1", kPower2, "--phi2", kPower2, "--phi3", kPower2, "--fn",
                            R"({"kind":"taylor","coeffs":[[1,0],[0.5,0]]})", "--grid", "256"});
    CHECK(strong.code == 3);
    CHECK(strong.err.find("error") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("factorization subcommands")
{
    const Run riesz = run({"factor", "riesz", "--fn", R"({"kind":"taylor","coeffs":[[0,0],[1,0],[0.5,0]]})", "--zeros",
                           R"({"zeros":[[0,0]]})", "--grid", "256"});
    REQUIRE(riesz.code == 0);
    const auto q = riesz.report()["result"]["factors"]["Q"]["coeffs"];
    CHECK(std::abs(q[0][0].get<double>() - 1.0) < 1e-12);
    CHECK(std::abs(q[1][0].get<double>() - 0.5) < 1e-12);

    const Run io = run({"factor", "inner-outer", "--phi", kPower2, "--fn", R"({"kind":"taylor","coeffs":[[0,0],[1,0],[0.5,0]]})",
                        "--zeros", R"([[0,0]])", "--grid", "256"});
    REQUIRE(io.code == 0);
    CHECK(io.report()["result"]["norm_identities"][0]["ratio"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));

    const Run strong = run({"factor", "strong", "--phi1", kPower2, "--phi2", R"({"kind":"power","p":3})", "--fn",
                            R"({"kind":"taylor","coeffs":[[1,0],[0.5,0]]})", "--grid", "256"});
    REQUIRE(strong.code == 0);
    CHECK(strong.report()["result"]["factors"].contains("G1"));
}

TEST_CASE("hankel subcommands")
{
    const Run apply = run({"hankel", "apply", "--symbol", R"({"kind":"taylor","coeffs":[[0,0],[0,0],[1,0]]})", "--fn",
                           R"({"kind":"taylor","coeffs":[[0,0],[1,0]]})", "--grid", "64"});
    REQUIRE(apply.code == 0);
    const auto out = apply.report()["result"]["output"]["coeffs"];
    CHECK(out.size() == 2);
    CHECK(out[1][0] == 1.0);

    const Run matrix = run({"hankel", "matrix", "--symbol", R"({"kind":"taylor","coeffs":[[0,0],[0,0],[1,0]]})", "--size", "2", "--grid", "64"});
    REQUIRE(matrix.code == 0);
    CHECK(matrix.report()["result"]["entries"][1][1][0] == 1.0);

    const std::string experiment = R"({"phi1":{"kind":"power","p":4},"phi2":{"kind":"power","p":2},
        "family":[{"kind":"taylor","coeffs":[[0,0],[1,0]],"tag":"z"},{"kind":"taylor","coeffs":[[0,0],[0,0],[1,0]],"tag":"z^2"}],
        "dictionary":{"monomials":8,"kernels":true,"random":4},"seed":3})";
    const Run csv = run({"hankel", "loss", "--experiment", experiment, "--grid", "256", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.find("# config: ") != std::string::npos);
    CHECK(csv.out.find("family_tag,symbol_norm,operator_estimate,ratio,schema_version") != std::string::npos);
    CHECK(csv.out.find("\nz,") != std::string::npos);

    const Run gain = run({"hankel", "gain", "--experiment", R"({"phi1":{"kind":"power","p":2},"phi2":{"kind":"power","p":2},
        "family":[{"kind":"taylor","coeffs":[[0,0],[1,0]]}]})", "--grid", "256"});
    REQUIRE(gain.code == 0);
    CHECK(gain.report()["result"]["rows"].size() == 2);

    CHECK(run({"hankel", "apply", "--symbol", R"({"kind":"taylor","coeffs":[[1,0]]})", "--fn",
               R"({"kind":"taylor","coeffs":[[1,0]]})", "--format", "csv"}).code == 2);
}

TEST_CASE("gf inspect")
{
    const Run r = run({"gf", "inspect", "--phi", kPower2});
    REQUIRE(r.code == 0);
    const auto j = r.report()["result"];
    CHECK(j["doubling"]["delta2"] == true);
    CHECK(std::abs(j["indices"]["a_lower"].get<double>() - 2.0) < 1e-3);
}

TEST_CASE("output file and HO_GRID")
{
    const std::string path = "ho_cli_test_output.json";
    ::setenv("HO_GRID", "128", 1);
    const Run r = run({"norm", "--phi", kPower2, "--fn", R"({"kind":"taylor","coeffs":[[1,0]]})", "--output", path});
    ::unsetenv("HO_GRID");
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    const auto j = nlohmann::json::parse(f);
    std::remove(path.c_str());
    CHECK(j["config"]["grid_size"] == 128);
    CHECK(j["config"]["output"] == path);
}

TEST_CASE("verify all")
{
    const Run r = run({"verify", "all", "--grid", "256", "--seed", "5"});
    CHECK(r.code == 0);
    CHECK(r.report()["result"]["passed"] == true);
}
