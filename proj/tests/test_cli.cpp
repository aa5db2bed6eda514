#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sdforge/cli.hpp"
#include "sdforge/code_analysis.hpp"
#include "sdforge/construction.hpp"
#include "test_paths.hpp"

using namespace sdforge;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(std::vector<std::string> args) {
    std::vector<const char*> argv;
    argv.push_back("sdforge");
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / ("sdforge_cli_" + name);
    std::filesystem::remove(p);
    return p;
}

}  // namespace

TEST_CASE("list-constructions: 28 lines") {
    auto r = run({"list-constructions"});
    CHECK(r.code == 0);
    int lines = 0;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++lines;
    CHECK(lines == 28);
    CHECK(r.out.find("G1.1") != std::string::npos);
    CHECK(r.out.find("G8.3") != std::string::npos);
    CHECK(r.out.find("D12-case1") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"analyze", "--bogus-flag"}).code == 2);
    CHECK(run({"search"}).code == 2);  // missing required --construction
    CHECK(run({"search", "--construction", "G9.9", "--pop", "10", "--iters", "0"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("analyze: [I|I] reports d=2") {
    auto path = temp_file("ii.txt");
    {
        std::ofstream f(path);
        write_generator_text(
            BitMatrix::hconcat(BitMatrix::identity(36), BitMatrix::identity(36)), f);
    }
    auto r = run({"analyze", "--matrix", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"self_dual\":true") != std::string::npos);
    CHECK(r.out.find("\"min_distance\":2") != std::string::npos);
    std::filesystem::remove(path);

    CHECK(run({"analyze", "--matrix", "/nonexistent/file.txt"}).code == 3);
}

TEST_CASE("search: seeded runs are byte-identical") {
    std::vector<std::string> args = {"search", "--construction", "G2.1", "--algo", "voa",
                                     "--pop", "30", "--iters", "3", "--seed", "7",
                                     "--no-timestamp"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"algorithm\":\"voa\"") != std::string::npos);
    CHECK(a.out.find("\"seed\":7") != std::string::npos);
    CHECK(a.out.find("wall_ms") == std::string::npos);

    auto c = run({"search", "--construction", "G2.1", "--algo", "ga", "--pop", "30", "--iters",
                  "3", "--seed", "7", "--no-timestamp"});
    CHECK(c.code == 0);
    CHECK(c.out.find("\"algorithm\":\"ga\"") != std::string::npos);
}

TEST_CASE("compare: CSV on stdout") {
    auto r = run({"compare", "--constructions", "G2.1,G3.1", "--algos", "voa", "--runs", "1",
                  "--seed0", "5", "--pop", "20", "--iters", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("construction,algorithm,runs,evaluations,total_hits,distinct_hits") == 0);
    CHECK(r.out.find("G2.1,voa,1,") != std::string::npos);
    CHECK(r.out.find("G3.1,voa,1,") != std::string::npos);
}

TEST_CASE("verify-tables: subset, perturbation, empty, missing") {
    // three-row subset from the shipped file keeps this test quick
    auto full = std::string(SDFORGE_DATA_DIR) + "/paper_tables.csv";
    std::ifstream in(full);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);

    auto subset = temp_file("subset.csv");
    {
        std::ofstream f(subset);
        int wrote = 0;
        for (const auto& l : lines) {
            if (l.starts_with("#") || l.starts_with("id,")) {
                f << l << "\n";
                continue;
            }
            if (wrote < 3) {
                f << l << "\n";
                ++wrote;
            }
        }
    }
    auto ok = run({"verify-tables", "--tables", subset.string()});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("3/3 PASS") != std::string::npos);

    // altering beta of C1 must be caught
    auto perturbed = temp_file("perturbed.csv");
    {
        std::ofstream f(perturbed);
        int wrote = 0;
        for (const auto& l : lines) {
            if (l.starts_with("#") || l.starts_with("id,")) continue;
            if (wrote == 0) {
                std::string mod = l;
                auto pos = mod.find(",0,129,");
                REQUIRE(pos != std::string::npos);
                mod.replace(pos, 7, ",0,130,");
                f << mod << "\n";
            }
            if (++wrote >= 2) break;
        }
    }
    auto bad = run({"verify-tables", "--tables", perturbed.string()});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(bad.out.find("(table: 0,130)") != std::string::npos);

    auto empty = temp_file("empty.csv");
    std::ofstream(empty) << "";
    auto warn = run({"verify-tables", "--tables", empty.string()});
    CHECK(warn.code == 0);
    CHECK(warn.out.find("warning") != std::string::npos);
    CHECK(warn.out.find("0/0 PASS") != std::string::npos);

    CHECK(run({"verify-tables", "--tables", "/nonexistent.csv"}).code == 3);

    std::filesystem::remove(subset);
    std::filesystem::remove(perturbed);
    std::filesystem::remove(empty);
}
