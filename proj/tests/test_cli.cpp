#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

const std::string cli = AOS_CLI_BIN;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("aos_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run_cmd(const std::string& args) {
    const std::string cmd = cli + " " + args + " >/dev/null 2>&1";
    const int ret = std::system(cmd.c_str());
    if (ret == -1) return -1;
    return WIFEXITED(ret) ? WEXITSTATUS(ret) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

const char* kSmallConfig = R"({
  "N": 1, "T": 5000, "seed": 3,
  "nodes": [
    {"lambda": 0.8, "omega": [1.0, 5.0], "P": [[0.3, 0.7], [0.7, 0.3]]},
    {"lambda": 0.4, "omega": [2.0], "P": [[1.0]]}
  ]
})";

}  // namespace

TEST_CASE("solve writes a deterministic artifact") {
    TempDir tmp;
    write_file(tmp.file("cfg.json"), kSmallConfig);

    const std::string base = "solve --config " + tmp.file("cfg.json");
    REQUIRE(run_cmd(base + " --out " + tmp.file("a.json")) == 0);
    REQUIRE(run_cmd(base + " --out " + tmp.file("b.json")) == 0);
    const std::string a = slurp(tmp.file("a.json"));
    CHECK(a == slurp(tmp.file("b.json")));
    CHECK(a.find("aos-policy-v1") != std::string::npos);

    const auto j = nlohmann::json::parse(a);
    CHECK(j.at("M").get<int>() == 2);
    CHECK(j.at("N").get<int>() == 1);
    CHECK(j.at("alpha").get<double>() >= 0.0);
    CHECK(j.at("alpha").get<double>() <= 1.0);
    CHECK(j.at("nodes").size() == 2);
}

TEST_CASE("solve at a fixed multiplier") {
    TempDir tmp;
    write_file(tmp.file("cfg.json"), kSmallConfig);
    REQUIRE(run_cmd("solve --config " + tmp.file("cfg.json") + " --eta 0.5 --out " +
                    tmp.file("fixed.json")) == 0);
    const auto j = nlohmann::json::parse(slurp(tmp.file("fixed.json")));
    CHECK(j.at("eta1").get<double>() == 0.5);
    CHECK(j.at("eta2").get<double>() == 0.5);
    CHECK(j.at("alpha").get<double>() == 1.0);
}

TEST_CASE("simulate produces byte-identical CSV for a fixed seed") {
    TempDir tmp;
    write_file(tmp.file("cfg.json"), kSmallConfig);
    REQUIRE(run_cmd("solve --config " + tmp.file("cfg.json") + " --out " +
                    tmp.file("pol.json")) == 0);

    const std::string base = "simulate --config " + tmp.file("cfg.json") + " --policy " +
                             tmp.file("pol.json") + " --seed 7";
    REQUIRE(run_cmd(base + " --out " + tmp.file("a.csv")) == 0);
    REQUIRE(run_cmd(base + " --out " + tmp.file("b.csv")) == 0);
    const std::string a = slurp(tmp.file("a.csv"));
    CHECK(a == slurp(tmp.file("b.csv")));
    CHECK(a.rfind("scheduler,seed,T,J_avg,D_avg\n", 0) == 0);
    CHECK(a.find("pi_s,7,5000,") != std::string::npos);
}

TEST_CASE("simulate with the greedy baseline") {
    TempDir tmp;
    write_file(tmp.file("cfg.json"), kSmallConfig);
    REQUIRE(run_cmd("simulate --config " + tmp.file("cfg.json") + " --greedy --seed 7 --out " +
                    tmp.file("g.csv")) == 0);
    const std::string csv = slurp(tmp.file("g.csv"));
    CHECK(csv.find("greedy,7,5000,") != std::string::npos);
}

TEST_CASE("configuration errors exit with code 2") {
    TempDir tmp;
    CHECK(run_cmd("solve --config " + tmp.file("missing.json") + " --out " +
                  tmp.file("x.json")) == 2);

    write_file(tmp.file("bad.json"), "{not json");
    CHECK(run_cmd("solve --config " + tmp.file("bad.json") + " --out " + tmp.file("x.json")) ==
          2);

    write_file(tmp.file("cfg.json"), kSmallConfig);
    CHECK(run_cmd("simulate --config " + tmp.file("cfg.json") + " --out " +
                  tmp.file("x.csv")) == 2);  // neither --policy nor --greedy
    CHECK(run_cmd("sweep --mode x --out " + tmp.file("x.csv")) == 2);

    write_file(tmp.file("capless.json"), R"({"N":0,"T":100,"nodes":[]})");
    CHECK(run_cmd("solve --config " + tmp.file("capless.json") + " --out " +
                  tmp.file("x.json")) == 2);
}

TEST_CASE("artifact and config must agree on the node count") {
    TempDir tmp;
    write_file(tmp.file("cfg.json"), kSmallConfig);
    REQUIRE(run_cmd("solve --config " + tmp.file("cfg.json") + " --out " +
                    tmp.file("pol.json")) == 0);
    write_file(tmp.file("one.json"),
               R"({"N":1,"T":100,"nodes":[{"lambda":0.5,"omega":[1.0],"P":[[1.0]]}]})");
    CHECK(run_cmd("simulate --config " + tmp.file("one.json") + " --policy " +
                  tmp.file("pol.json") + " --out " + tmp.file("x.csv")) == 2);
}
