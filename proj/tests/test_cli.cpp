#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

// capture stdout of one in-process CLI invocation
struct Capture {
    std::string text;
    int exit_code;
};

Capture run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"slwhittaker"};
    for (const auto& a : args) argv.push_back(a.c_str());

    std::fflush(stdout);
    const int saved = dup(fileno(stdout));
    char path[] = "/tmp/slw_cli_XXXXXX";
    const int fd = mkstemp(path);
    dup2(fd, fileno(stdout));
    const int code = slw::cli::run(static_cast<int>(argv.size()), argv.data());
    std::fflush(stdout);
    dup2(saved, fileno(stdout));
    close(saved);
    close(fd);

    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::remove(path);
    return {text, code};
}

std::string write_temp_json(const std::string& body) {
    static int counter = 0;
    const std::string path = "/tmp/slw_cli_input_" + std::to_string(counter++) + ".json";
    std::ofstream out(path);
    out << body;
    return path;
}

} // namespace

TEST_CASE("orbits subcommand lists the seven partitions of 5") {
    const auto r = run_cli({"orbits", "--n", "5", "--list"});
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.text);
    CHECK(j["partitions"].size() == 7);
    CHECK(j["dominance_edges"].size() > 0);
}

TEST_CASE("weyl-table subcommand: four rows, one contributing") {
    const auto r = run_cli({"weyl-table", "--n", "5", "--lambda", "2s*L1-rho", "--support", "4"});
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.text);
    REQUIRE(j["rows"].size() == 4);
    int stars = 0;
    for (const auto& row : j["rows"]) stars += row["contributes"].get<bool>() ? 1 : 0;
    CHECK(stars == 1);
    CHECK(j["rows"][3]["intertwiner"] == "xi(2s-3)/xi(2s)");
}

TEST_CASE("fourier subcommand: vanishing rank emits a certificate, exit 0") {
    const auto r = run_cli({"fourier", "--n", "5", "--node", "2", "--rep", "min", "--rank", "2",
                            "--s", "1.3", "--bound", "3"});
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.text);
    CHECK(j["value_re"] == 0.0);
    CHECK(j["status"] == "vanishes");
    CHECK(j.contains("certificate"));
}

TEST_CASE("iwasawa subcommand: real and p-adic paths") {
    const std::string gpath = write_temp_json(R"([[1, 0.5, 0], [0, 1, -0.25], [0, 0, 1]])");
    const auto real = run_cli({"iwasawa", "--matrix", gpath});
    REQUIRE(real.exit_code == 0);
    const auto jr = nlohmann::json::parse(real.text);
    CHECK(jr["y"].size() == 2);
    CHECK(jr["x"][0][0].get<double>() == doctest::Approx(0.5));

    const std::string lpath = write_temp_json(R"([["6","0"],["0","1/6"]])");
    const auto padic = run_cli({"iwasawa", "--matrix", lpath, "--prime", "3"});
    REQUIRE(padic.exit_code == 0);
    const auto jp = nlohmann::json::parse(padic.text);
    CHECK(jp["eta_norms"][0] == "1/3");
}

TEST_CASE("exit codes: domain errors give 2, poles and unsupported give 3") {
    const std::string gpath = write_temp_json(R"([[1,0],[0,1]])");
    // composite prime
    const auto bad = run_cli({"iwasawa", "--matrix", gpath, "--prime", "6"});
    CHECK(bad.exit_code == 2);

    // adjacent support roots are out of this release
    const auto adjacent =
        run_cli({"weyl-table", "--n", "5", "--lambda", "2s*L2-rho", "--support", "2,3"});
    CHECK(adjacent.exit_code == 3);

    // unknown flag: usage, exit 1 side (CLI11 reports nonzero)
    const auto usage = run_cli({"orbits", "--wat", "5"});
    CHECK(usage.exit_code != 0);
}

TEST_CASE("plan subcommand emits the rank-2 plan") {
    const auto r = run_cli({"plan", "--theorem", "b3", "--n", "5", "--node", "2"});
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.text);
    CHECK(j["plan"]["character"]["positions"].size() == 2);
    CHECK(j["plan"].contains("weyl_twist"));
    CHECK(j["plan"]["noncompact"]["positions"].size() > 0);
}

TEST_CASE("whittaker and fourier numeric subcommands") {
    const std::string gpath = write_temp_json(
        R"([[1, 0.2, 0, 0, 0.1], [0, 1.1, 0.05, 0, 0], [0, 0, 0.95, 0.1, 0],)"
        R"( [0, 0, 0, 1.05, 0.2], [0, 0, 0, 0, 0.9113693324219639]])");
    const auto w = run_cli({"whittaker", "--n", "5", "--lambda", "2s*L1-rho", "--support", "4",
                            "--s", "1.4", "--g", gpath});
    REQUIRE(w.exit_code == 0);
    const auto jw = nlohmann::json::parse(w.text);
    CHECK(jw.contains("value_re"));
    CHECK(std::abs(jw["value_re"].get<double>()) > 0.0);

    const auto f = run_cli({"fourier", "--n", "5", "--node", "4", "--rep", "min", "--rank", "1",
                            "--s", "1.4", "--g", gpath, "--bound", "3"});
    REQUIRE(f.exit_code == 0);
    const auto jf = nlohmann::json::parse(f.text);
    CHECK(jf["status"] == "ok");
    CHECK(jf["term_count"].get<long>() == 1);

    // the whittaker value equals the bare fourier value here
    CHECK(jw["value_re"].get<double>() == doctest::Approx(jf["value_re"].get<double>()));

    // a pole inside the contributing term maps to exit 3
    const auto pole = run_cli({"whittaker", "--n", "5", "--lambda", "2s*L1-rho", "--support", "4",
                               "--s", "1.5", "--g", gpath});
    CHECK(pole.exit_code == 3);
}

TEST_CASE("plan subcommand covers the expansion theorems") {
    const auto a = run_cli({"plan", "--theorem", "a", "--n", "5", "--rep", "ntm"});
    REQUIRE(a.exit_code == 0);
    CHECK(nlohmann::json::parse(a.text)["plans"].size() == 8);

    const auto cpl = run_cli({"plan", "--theorem", "c", "--n", "5"});
    REQUIRE(cpl.exit_code == 0);
    CHECK(nlohmann::json::parse(cpl.text)["plan"]["noncompact"]["positions"].size() == 3);

    const auto d = run_cli({"plan", "--theorem", "d", "--n", "6"});
    REQUIRE(d.exit_code == 0);
    CHECK(nlohmann::json::parse(d.text)["plan"]["noncompact"]["positions"].size() == 4);
}

TEST_CASE("environment overrides reach the configuration") {
    setenv("SLW_REL_TOL", "2", 1); // invalid: must be <= 1e-6
    const auto r = run_cli({"orbits", "--n", "4", "--list"});
    CHECK(r.exit_code == 2);
    unsetenv("SLW_REL_TOL");
    const auto ok = run_cli({"orbits", "--n", "4", "--list"});
    CHECK(ok.exit_code == 0);
}

TEST_CASE("byte-identical reruns") {
    const auto a = run_cli({"weyl-table", "--n", "5", "--lambda", "2s*L2-rho", "--support", "1,4"});
    const auto b = run_cli({"weyl-table", "--n", "5", "--lambda", "2s*L2-rho", "--support", "1,4"});
    CHECK(a.exit_code == 0);
    CHECK(a.text == b.text);
}
