#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

std::string binary() {
    const char* p = std::getenv("ASIAD_BIN");
    REQUIRE_MESSAGE(p != nullptr, "ASIAD_BIN must point at the CLI binary");
    return p;
}

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
        r.out.append(buf, n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string l;
    while (std::getline(in, l)) out.push_back(l);
    return out;
}

std::vector<std::string> split_csv(const std::string& l) {
    std::vector<std::string> out;
    std::istringstream in(l);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(tok);
    return out;
}

std::string strip_elapsed(const std::string& s) {
    std::string out;
    for (const std::string& l : lines(s))
        if (l.find("elapsed") == std::string::npos) out += l + "\n";
    return out;
}

} // namespace

TEST_CASE("density emits a clean parseable CSV") {
    auto r = run("density --nu 0.5 --t 1 --w-grid 0.5:2:50");
    REQUIRE(r.status == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 51);
    CHECK(ls[0] == "nu,eps,t,w,value,abs_error,route");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        auto cols = split_csv(ls[i]);
        REQUIRE(cols.size() == 7);
        double w = std::stod(cols[3]);
        double v = std::stod(cols[4]);
        double e = std::stod(cols[5]);
        CHECK(w >= 0.5 - 1e-12);
        CHECK(w <= 2.0 + 1e-12);
        CHECK(v >= -e);
        // 17 significant digits survive a round trip exactly
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        CHECK(cols[4] == buf);
        CHECK(cols[6].substr(0, 7) == "hermite");
    }
}

TEST_CASE("density with both routes reports the gap") {
    auto r = run("density --nu 0.5 --t 1 --w-grid 0.8:1.2:5 --route both");
    REQUIRE(r.status == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 6);
    CHECK(ls[0] == "nu,eps,t,w,value,abs_error,route,delta");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        auto cols = split_csv(ls[i]);
        REQUIRE(cols.size() == 8);
        double v = std::stod(cols[4]);
        double delta = std::stod(cols[7]);
        CHECK(delta <= 1e-6 * std::abs(v));
    }
}

TEST_CASE("bad arguments exit with code 2") {
    CHECK(run("density --route bogus").status == 2);
    CHECK(run("density --w-grid 1:2").status == 2);
    CHECK(run("density --t -1").status == 2);
    CHECK(run("compare --nu-list ''").status == 2);
}

TEST_CASE("compare passes on its default grid") {
    auto r = run("compare");
    REQUIRE(r.status == 0);
    json rep = json::parse(r.out);
    CHECK(rep["pass"] == true);
    CHECK(rep["points"].get<long>() > 0);
    CHECK(rep["max_rel_dev"].get<double>() < 1e-3);
}

TEST_CASE("special function evaluation") {
    auto h = run("special hermite --mu -1 --z 0");
    REQUIRE(h.status == 0);
    CHECK(h.out.substr(0, 18) == "0.8862269254527580");
    auto b = run("special besseli --rho 0 --eta 0");
    REQUIRE(b.status == 0);
    CHECK(b.out == "1\n");
    CHECK(run("special nosuch").status == 2);
}

TEST_CASE("laplace-check closes the transform identity") {
    auto r = run("laplace-check");
    REQUIRE(r.status == 0);
    json rep = json::parse(r.out);
    CHECK(rep["pass"] == true);
    CHECK(rep["rel_dev"].get<double>() <= 1e-3);
}

TEST_CASE("mc-validate flags underpowered runs") {
    auto r = run("mc-validate --paths 100");
    CHECK(r.status == 3);
    json rep = json::parse(r.out);
    CHECK(rep["insufficient_for_ks_threshold"] == true);
}

TEST_CASE("mc-validate output is deterministic for a fixed seed") {
    std::string args =
        "mc-validate --paths 20000 --steps 256 --seed 7 --knots 600 "
        "--threshold 0.05";
    auto a = run(args);
    auto b = run(args);
    CHECK(a.status == b.status);
    CHECK((a.status == 0 || a.status == 1));
    CHECK(strip_elapsed(a.out) == strip_elapsed(b.out));
    json rep = json::parse(a.out);
    CHECK(rep["params"]["seed"].get<std::uint64_t>() == 7);
}

TEST_CASE("configuration round-trips byte-identically") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "asiad-cli-test";
    fs::create_directories(dir);
    fs::path cfg1 = dir / "cfg1.json";
    {
        auto r = run("--dump-config");
        REQUIRE(r.status == 0);
        std::ofstream(cfg1) << r.out;
    }
    auto r2 = run("--config " + cfg1.string() + " --dump-config");
    REQUIRE(r2.status == 0);
    std::ifstream in(cfg1);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(r2.out == ss.str());

    // file sets defaults, flags still win
    json cfg = json::parse(r2.out);
    cfg["density"]["nu"] = 0.25;
    fs::path cfg2 = dir / "cfg2.json";
    std::ofstream(cfg2) << cfg.dump(2) << "\n";
    auto r3 = run("--config " + cfg2.string() + " --dump-config");
    CHECK(json::parse(r3.out)["density"]["nu"].get<double>() == 0.25);
    auto r4 = run("density --config " + cfg2.string() +
                  " --nu 0.75 --w-grid 1:1:1");
    REQUIRE(r4.status == 0);
    auto ls = lines(r4.out);
    REQUIRE(ls.size() == 2);
    CHECK(split_csv(ls[1])[0] == "0.75");
}

TEST_CASE("seed precedence: flag beats environment beats default") {
    auto base = run("--dump-config");
    json rep = json::parse(base.out);
    CHECK(rep["mc-validate"]["seed"].get<std::uint64_t>() == 20260815);

    std::string env_cmd = "ASIA_SEED=31337 " + binary() + " --dump-config";
    FILE* pipe = popen(env_cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
        out.append(buf, n);
    pclose(pipe);
    CHECK(json::parse(out)["mc-validate"]["seed"].get<std::uint64_t>() ==
          31337);

    std::string env_flag_cmd = "ASIA_SEED=31337 " + binary() +
                               " mc-validate --paths 100 --seed 5";
    pipe = popen(env_flag_cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    out.clear();
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
        out.append(buf, n);
    pclose(pipe);
    CHECK(json::parse(out)["params"]["seed"].get<std::uint64_t>() == 5);
}
