#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(QUASI_BIN) + " " + args + " 2>&1";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    REQUIRE(pipe);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe.get())) out.append(buf, got);
    int status = pclose(pipe.release());
    return {WEXITSTATUS(status), out};
}

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "quasi_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("witness") {
    fs::path out = scratch("w935.json");
    Run r = run("witness --n 9 --k 35 --out " + out.string());
    CHECK(r.code == 0);
    std::ifstream in(out);
    auto j = nlohmann::json::parse(in);
    CHECK(j["k_recounted"] == 35);
    CHECK(run("verify " + out.string()).code == 0);

    Run bad = run("witness --n 4 --k 10");
    CHECK(bad.code == 2);
    CHECK(bad.out.find("order 4") != std::string::npos);
    CHECK(run("witness --n 5 --k 17").code == 2);

    Run parity = run("witness --n 6 --k 11");
    CHECK(parity.code == 1);
    CHECK(parity.out.find("10") != std::string::npos);
    CHECK(parity.out.find("12") != std::string::npos);

    Run text = run("witness --n 5 --k 9 --format text");
    CHECK(text.code == 0);
    CHECK(text.out.rfind("5\n", 0) == 0);
}

TEST_CASE("seed from the environment") {
    Run a = run("witness --n 12 --k 90 --seed 7");
    Run b = run("witness --n 12 --k 90");
    std::string cmd = "QUASI_SEED=7 " + std::string(QUASI_BIN) + " witness --n 12 --k 90";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe.get())) out.append(buf, got);
    CHECK(out == a.out);
    CHECK(nlohmann::json::parse(b.out)["seed"] == 0);
}

TEST_CASE("tampered certificates fail verification") {
    fs::path out = scratch("w830.json");
    REQUIRE(run("witness --n 8 --k 30 --out " + out.string()).code == 0);
    nlohmann::ordered_json j;
    {
        std::ifstream in(out);
        j = nlohmann::ordered_json::parse(in);
    }
    int v = j["square"][2][3];
    j["square"][2][3] = (v + 1) % 8;
    fs::path bad = scratch("w830_bad.json");
    std::ofstream(bad) << j.dump();
    Run r = run("verify " + bad.string());
    CHECK(r.code != 0);
    CHECK(r.out.find("square") != std::string::npos);
}

TEST_CASE("kq, spectrum, count, enumerate") {
    Run k = run("kq 5/8 --limit 20");
    CHECK(k.code == 0);
    CHECK(k.out.find("S = {4,8,12,16,20}, K = {8,12,16,20}") != std::string::npos);
    CHECK(run("kq 4/8").code == 1);

    Run s = run("spectrum 5");
    CHECK(s.out.find("{5,7,9,11,13,15,19,25}") != std::string::npos);

    fs::path sq = scratch("five.txt");
    std::ofstream(sq) << "5\n0 1 3 4 2\n1 3 4 2 0\n3 0 2 1 4\n4 2 1 0 3\n2 4 0 3 1\n";
    Run c = run("count " + sq.string());
    CHECK(c.code == 0);
    CHECK(c.out == "C=19 P=19/25\n");

    Run e = run("enumerate 4 --histogram");
    CHECK(e.out == "{\"4\":48,\"6\":288,\"8\":144,\"16\":96}\n");
    CHECK(run("enumerate 6").code == 1);
}

TEST_CASE("batch mode") {
    fs::path out = scratch("all.jsonl");
    Run r = run("witness --all --max-n 8 --jobs 3 --out " + out.string());
    CHECK(r.code == 0);
    std::ifstream in(out);
    int lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    int expected = 0;
    for (int n = 1; n <= 8; ++n) {
        int count = n == 1 ? 1 : (n * n - 6 >= n ? (n * n - 6 - n) / 2 + 2 : 1);
        if (n == 4 || n == 5) --count;
        expected += count;
    }
    CHECK(lines == expected);
}
