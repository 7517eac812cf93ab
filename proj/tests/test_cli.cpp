#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "lrk/cli.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) {
        path = std::string("/tmp/lrk_test_") + name;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cli: flag errors exit 2") {
    CHECK(lrk::cli::run({"no-such-command"}) == 2);
    CHECK(lrk::cli::run({"symbol"}) == 2);  // missing --theta
    CHECK(lrk::cli::run({"scan", "--h", "0", "--zeta", "-1", "--xmin", "4",
                         "--xmax", "8", "--points", "2"}) == 2);
}

TEST_CASE("cli: symbol lateral limit values") {
    TempFile f("symbol.json");
    CHECK(lrk::cli::run({"symbol", "--h", "0", "--zeta", "1", "--mode",
                         "limit", "--theta", "0", "--side", "plus", "--out",
                         f.path}) == 0);
    const std::string s = slurp(f.path);
    CHECK(s.find("0.537029272146") != std::string::npos);
    CHECK(s.find("\"side\":\"plus\"") != std::string::npos);
}

TEST_CASE("cli: entropy and scan outputs with metadata") {
    TempFile f("scan.csv");
    CHECK(lrk::cli::run({"scan", "--h", "-2", "--zeta", "1", "--alpha", "2",
                         "--xmin", "8", "--xmax", "24", "--points", "4",
                         "--ring-size", "4096", "--out", f.path}) == 0);
    const std::string s = slurp(f.path);
    CHECK(s.find("# lrk 1.0.0") != std::string::npos);
    CHECK(s.find("xlen,entropy") != std::string::npos);
    CHECK(s.find("# ring_n=4096") != std::string::npos);

    // byte-identical reruns
    TempFile f2("scan2.csv");
    CHECK(lrk::cli::run({"scan", "--h", "-2", "--zeta", "1", "--alpha", "2",
                         "--xmin", "8", "--xmax", "24", "--points", "4",
                         "--ring-size", "4096", "--out", f2.path}) == 0);
    CHECK(slurp(f2.path) == s);
}

TEST_CASE("cli: predict totals") {
    TempFile f("predict.json");
    CHECK(lrk::cli::run({"predict", "--h", "2", "--zeta", "0.5", "--alpha",
                         "1", "--mode", "limit", "--out", f.path}) == 0);
    const std::string s = slurp(f.path);
    CHECK(s.find("\"total\":0.333333333333") != std::string::npos);
}

TEST_CASE("cli: phase diagram grid") {
    TempFile f("phase.csv");
    CHECK(lrk::cli::run({"phase-diagram", "--alpha", "2", "--h-range",
                         "0:2:3", "--zeta-range", "0.5:1.5:3", "--out",
                         f.path}) == 0);
    const std::string s = slurp(f.path);
    CHECK(s.find("h,zeta,B\n") != std::string::npos);
    // 9 grid rows
    int rows = 0;
    for (char c : s)
        if (c == '\n') ++rows;
    CHECK(rows >= 9 + 3);
    CHECK(lrk::cli::run({"phase-diagram", "--alpha", "2"}) == 2);
}

TEST_CASE("cli: scan json format") {
    TempFile f("scan.json");
    CHECK(lrk::cli::run({"scan", "--h", "0", "--zeta", "1", "--mode", "limit",
                         "--alpha", "2", "--xmin", "4", "--xmax", "12",
                         "--points", "3", "--format", "json", "--out",
                         f.path}) == 0);
    const std::string s = slurp(f.path);
    CHECK(s.find("\"points\":[{\"xlen\":4,") != std::string::npos);
    CHECK(s.find("\"mode\":\"limit\"") != std::string::npos);
}

TEST_CASE("cli: compare report") {
    TempFile f("compare.json");
    CHECK(lrk::cli::run({"compare", "--h", "-2", "--zeta", "1", "--alpha",
                         "2", "--mode", "limit", "--xmin", "16", "--xmax",
                         "64", "--points", "5", "--window-min", "16",
                         "--window-max", "64", "--out", f.path}) == 0);
    const std::string s = slurp(f.path);
    CHECK(s.find("\"fitted_slope\":") != std::string::npos);
    CHECK(s.find("\"predicted_B\":0.125") != std::string::npos);
    CHECK(s.find("\"window\":[16,64]") != std::string::npos);
}

TEST_CASE("cli: oracle check at the smallest ring") {
    CHECK(lrk::cli::run({"oracle-check", "--nmax", "6"}) == 0);
}

TEST_CASE("cli: toeplitz determinant checks") {
    TempFile f("toeplitz.txt");
    CHECK(lrk::cli::run({"toeplitz-check", "--h", "0", "--zeta", "1",
                         "--lambda", "1.8", "--out", f.path}) == 0);
    const std::string s = slurp(f.path);
    CHECK(s.find("szego_term") != std::string::npos);
    CHECK(s.find("widom_residual") != std::string::npos);
    CHECK(s.find("log_coefficient") != std::string::npos);
    CHECK(s.find("FAIL") == std::string::npos);
}

TEST_CASE("cli: coefficient cache round trip") {
    TempFile f("cached_scan.csv");
    const std::string cache_dir = "/tmp/lrk_test_cache";
    std::system(("mkdir -p " + cache_dir).c_str());
    setenv("LRK_CACHE_DIR", cache_dir.c_str(), 1);
    CHECK(lrk::cli::run({"entropy", "--h", "1", "--zeta", "1", "--xlen", "12",
                         "--ring-size", "2048", "--out", f.path}) == 0);
    const std::string first = slurp(f.path);
    CHECK(lrk::cli::run({"entropy", "--h", "1", "--zeta", "1", "--xlen", "12",
                         "--ring-size", "2048", "--out", f.path}) == 0);
    CHECK(slurp(f.path) == first);
    unsetenv("LRK_CACHE_DIR");
    std::system(("rm -rf " + cache_dir).c_str());
}
