#include "sdforge/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "sdforge/catalog.hpp"
#include "sdforge/code_analysis.hpp"
#include "sdforge/construction.hpp"
#include "sdforge/search.hpp"

namespace sdforge {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

int env_threads() {
    const char* v = std::getenv("SDFORGE_THREADS");
    if (!v) return 1;
    int n = std::atoi(v);
    return n > 0 ? n : 1;
}

std::vector<std::string> split_csv_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

struct RowVerdict {
    bool pass = false;
    std::string detail;
    double ms = 0;
};

RowVerdict verify_row(const TableRow& row, bool with_a16, int threads) {
    auto t0 = std::chrono::steady_clock::now();
    RowVerdict v;
    try {
        const Construction& k = find_construction(row.construction);
        BitMatrix g = k.generator(row.candidate);
        if (!is_self_dual(g)) {
            v.detail = "not self-dual";
        } else {
            CodeReport rep = extract_params(g, with_a16, threads);
            std::ostringstream os;
            if (row.type_two) {
                if (rep.family != EnumeratorFamily::TypeII)
                    os << "expected Type II, got " << family_name(*rep.family);
                else if (rep.alpha != row.alpha)
                    os << "alpha=" << *rep.alpha << " (table: " << *row.alpha << ")";
                else {
                    v.pass = true;
                    os << "II alpha=" << *rep.alpha << " A12=" << rep.counts.at(12);
                }
            } else {
                if (rep.family != EnumeratorFamily::W72_1)
                    os << "expected W72_1, got " << family_name(*rep.family);
                else if (rep.gamma != row.gamma || rep.beta != row.beta)
                    os << "gamma=" << *rep.gamma << " beta=" << *rep.beta << " (table: "
                       << *row.gamma << "," << *row.beta << ")";
                else {
                    v.pass = true;
                    os << "W72_1 gamma=" << *rep.gamma << " beta=" << *rep.beta
                       << " A12=" << rep.counts.at(12) << " A14=" << rep.counts.at(14);
                }
            }
            v.detail = os.str();
        }
    } catch (const NotExtremalError& e) {
        v.detail = e.what();
    } catch (const FamilyInconsistencyError& e) {
        v.detail = e.what();
    }
    v.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return v;
}

int cmd_verify_tables(const std::string& tables_path, bool with_a16, int threads,
                      std::ostream& out) {
    auto rows = load_paper_tables(tables_path);
    if (rows.empty()) {
        out << "warning: no rows in " << tables_path << "\n0/0 PASS\n";
        return kExitOk;
    }
    std::vector<RowVerdict> verdicts(rows.size());
    // Rows are independent; stripe them across workers and print in order.
    int workers = std::max(1, std::min<int>(threads, static_cast<int>(rows.size())));
    int inner = std::max(1, threads / workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (size_t i = static_cast<size_t>(w); i < rows.size(); i += static_cast<size_t>(workers))
                verdicts[i] = verify_row(rows[i], with_a16, inner);
        });
    for (auto& th : pool) th.join();

    int pass = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& v = verdicts[i];
        char line[256];
        std::snprintf(line, sizeof(line), "%-4s %-5s %s  %s  (%.0f ms)", rows[i].id.c_str(),
                      rows[i].construction.c_str(), v.pass ? "PASS" : "FAIL", v.detail.c_str(),
                      v.ms);
        out << line << "\n";
        if (v.pass) ++pass;
    }
    out << pass << "/" << rows.size() << " PASS\n";
    return pass == static_cast<int>(rows.size()) ? kExitOk : kExitVerifyFail;
}

int cmd_analyze(const std::string& matrix_path, bool with_a16, int threads, std::ostream& out) {
    std::ifstream in(matrix_path);
    if (!in) throw std::runtime_error("cannot open " + matrix_path);
    BitMatrix g = read_generator_text(in);

    CodeReport rep;
    rep.self_dual = is_self_dual(g);
    if (rep.self_dual) {
        rep.min_distance = min_distance(g, threads);
        rep.doubly_even = classify_doubly_even(g);
        if (rep.min_distance == 12) {
            rep = extract_params(g, with_a16, threads);
        } else {
            rep.counts = count_low_weights(g, 14, threads);
        }
    }
    out << to_json(rep) << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"sdforge: binary self-dual [72,36,12] codes from group-matrix-ring generator "
                 "matrices [I36 | tau3(v)]; candidate hex is 9 digits with a1 as the MSB"};
    app.require_subcommand(1);

    int threads = env_threads();
    app.add_option("--threads", threads, "worker threads for enumeration (env SDFORGE_THREADS)")
        ->capture_default_str();

    // list-constructions
    auto* list_cmd = app.add_subcommand("list-constructions", "print the construction registry");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze a generator matrix text file");
    std::string matrix_path;
    bool with_a16 = false;
    analyze_cmd->add_option("--matrix", matrix_path, "36x72 text matrix of '0'/'1'")->required();
    analyze_cmd->add_flag("--with-a16", with_a16, "also count A_16 (level-8 enumeration)");

    // search
    auto* search_cmd = app.add_subcommand("search", "run VOA or GA over one construction");
    std::string construction_id, algo = "voa", out_path;
    bool no_timestamp = false;
    VoaConfig voa;
    GaConfig ga;
    int pop = 500, iters = 100;
    uint64_t seed = 0;
    search_cmd->add_option("--construction", construction_id, "construction id, e.g. G2.1")->required();
    search_cmd->add_option("--algo", algo, "voa|ga")->check(CLI::IsMember({"voa", "ga"}))
        ->capture_default_str();
    search_cmd->add_option("--pop", pop, "population size")->capture_default_str();
    search_cmd->add_option("--iters", iters, "iterations")->capture_default_str();
    search_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
    search_cmd->add_option("--out", out_path, "append hits to this JSON-Lines file");
    search_cmd->add_flag("--no-timestamp", no_timestamp, "suppress timestamps and wall time");
    search_cmd->add_option("--strong-count", voa.strong_count, "VOA strong viruses")->capture_default_str();
    search_cmd->add_option("--strong-offspring", voa.strong_offspring, "VOA offspring per strong virus")
        ->capture_default_str();
    search_cmd->add_option("--common-offspring", voa.common_offspring, "VOA offspring per common virus")
        ->capture_default_str();
    search_cmd->add_option("--strong-flip", voa.strong_flip_prob, "VOA strong flip probability")
        ->capture_default_str();
    search_cmd->add_option("--common-flip", voa.common_flip_prob, "VOA common flip probability")
        ->capture_default_str();
    search_cmd->add_option("--stagnation", voa.stagnation_window, "VOA stagnation window")
        ->capture_default_str();
    search_cmd->add_option("--tournament", ga.tournament_size, "GA tournament size")->capture_default_str();
    search_cmd->add_option("--crossover", ga.crossover_prob, "GA crossover probability")
        ->capture_default_str();
    search_cmd->add_option("--mutation", ga.mutation_flip_prob, "GA per-bit mutation probability")
        ->capture_default_str();
    search_cmd->add_option("--elite", ga.elite_count, "GA elite count")->capture_default_str();

    // compare
    auto* compare_cmd = app.add_subcommand("compare", "aggregate VOA/GA hits over several runs");
    std::string constructions_arg, algos_arg = "voa,ga", compare_out;
    int runs = 1;
    uint64_t seed0 = 1;
    compare_cmd->add_option("--constructions", constructions_arg, "comma-separated ids")->required();
    compare_cmd->add_option("--algos", algos_arg, "comma-separated subset of voa,ga")
        ->capture_default_str();
    compare_cmd->add_option("--runs", runs, "independent runs per pair")->capture_default_str();
    compare_cmd->add_option("--seed0", seed0, "first seed; run r uses seed0+r")->capture_default_str();
    compare_cmd->add_option("--out", compare_out, "write CSV here (default: stdout)");
    compare_cmd->add_option("--pop", pop, "population size")->capture_default_str();
    compare_cmd->add_option("--iters", iters, "iterations")->capture_default_str();

    // verify-tables
    auto* verify_cmd = app.add_subcommand("verify-tables", "reconstruct and check the shipped tables");
    std::string tables_path = "data/paper_tables.csv";
    verify_cmd->add_option("--tables", tables_path, "tables CSV")->capture_default_str();
    verify_cmd->add_flag("--with-a16", with_a16, "disambiguate families via A_16");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*list_cmd) {
            for (const auto& k : construction_registry()) {
                const GroupSpec& g = group_spec(k.group);
                char line[256];
                std::snprintf(line, sizeof(line), "%-5s %-9s %-8s %-8s %s", std::string(k.id).c_str(),
                              std::string(group_case_name(k.group)).c_str(),
                              std::string(k.pattern->name).c_str(),
                              k.assembly == Assembly::Cayley ? "cayley" : "explicit",
                              std::string(g.ordering).c_str());
                out << line << "\n";
            }
            return kExitOk;
        }

        if (*analyze_cmd) return cmd_analyze(matrix_path, with_a16, threads, out);

        if (*search_cmd) {
            const Construction& k = find_construction(construction_id);
            RunLog log;
            if (algo == "voa") {
                voa.population_size = pop;
                voa.iterations = iters;
                voa.seed = seed;
                log = voa_run(k, voa);
            } else {
                ga.population_size = pop;
                ga.iterations = iters;
                ga.seed = seed;
                log = ga_run(k, ga);
            }
            if (!no_timestamp) {
                std::string ts = iso_timestamp();
                for (auto& h : log.hits) h.timestamp = ts;
            }
            if (!out_path.empty())
                for (const auto& h : log.hits) append_hit(h, out_path);
            out << run_log_json(log, !no_timestamp) << "\n";
            return kExitOk;
        }

        if (*compare_cmd) {
            std::vector<const Construction*> ks;
            for (const auto& id : split_csv_list(constructions_arg)) ks.push_back(&find_construction(id));
            std::vector<std::string> algos = split_csv_list(algos_arg);
            VoaConfig voa_base = voa;
            voa_base.population_size = pop;
            voa_base.iterations = iters;
            GaConfig ga_base = ga;
            ga_base.population_size = pop;
            ga_base.iterations = iters;
            auto rows = compare(ks, algos, runs, seed0, voa_base, ga_base);
            std::string csv = compare_csv(rows);
            if (compare_out.empty()) {
                out << csv;
            } else {
                std::ofstream f(compare_out);
                if (!f) throw std::runtime_error("cannot open " + compare_out);
                f << csv;
            }
            return kExitOk;
        }

        if (*verify_cmd) return cmd_verify_tables(tables_path, with_a16, threads, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}

}  // namespace sdforge
