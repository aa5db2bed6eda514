// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Run from the repository root (or pass the data directory as argv[1]).

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sdforge/catalog.hpp"
#include "sdforge/code_analysis.hpp"
#include "sdforge/construction.hpp"
#include "sdforge/search.hpp"
#include "test_helpers.hpp"
#include "test_paths.hpp"

using namespace sdforge;

namespace {

std::string g_data_dir = SDFORGE_DATA_DIR;
int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %-28s %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct VerifiedRow {
    TableRow row;
    CodeReport report;
    bool pass = false;
    std::string why;
};

std::vector<VerifiedRow> g_verified;  // filled by criterion 1, reused by 6

// --- 1. Table reproduction ---------------------------------------------------
void criterion_table_reproduction() {
    auto t0 = std::chrono::steady_clock::now();
    auto rows = load_paper_tables(g_data_dir + "/paper_tables.csv");
    int pass = 0;
    double worst_row_s = 0;
    for (const auto& row : rows) {
        auto r0 = std::chrono::steady_clock::now();
        VerifiedRow v;
        v.row = row;
        try {
            const Construction& k = find_construction(row.construction);
            BitMatrix g = k.generator(row.candidate);
            if (!is_self_dual(g)) {
                v.why = "not self-dual";
            } else {
                v.report = extract_params(g);  // throws unless d = 12
                if (row.type_two) {
                    if (v.report.family == EnumeratorFamily::TypeII && v.report.alpha == row.alpha)
                        v.pass = true;
                    else
                        v.why = "Type II parameter mismatch";
                } else {
                    if (v.report.family == EnumeratorFamily::W72_1 && v.report.gamma == row.gamma &&
                        v.report.beta == row.beta)
                        v.pass = true;
                    else
                        v.why = "Type I parameter mismatch";
                }
            }
        } catch (const std::exception& e) {
            v.why = e.what();
        }
        worst_row_s = std::max(worst_row_s, seconds_since(r0));
        if (v.pass)
            ++pass;
        else
            std::printf("       row %s (%s): %s\n", row.id.c_str(), row.construction.c_str(),
                        v.why.c_str());
        g_verified.push_back(std::move(v));
    }
    double total = seconds_since(t0);
    char detail[256];
    std::snprintf(detail, sizeof(detail),
                  "%d/%zu rows reconstruct exactly; %.1f s total, %.2f s worst row "
                  "(budget: 3600 s / 60 s)",
                  pass, rows.size(), total, worst_row_s);
    report("table-reproduction", pass == static_cast<int>(rows.size()) && total < 3600 &&
                                     worst_row_s < 60,
           detail);
}

// --- 2. Oracle equivalence ---------------------------------------------------
void criterion_oracle_equivalence() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240801);
    int codes = 0;
    bool all_ok = true;
    for (int k : {4, 6, 8, 10}) {
        for (int t = 0; t < 100; ++t) {
            BitMatrix g = BitMatrix::hconcat(BitMatrix::identity(k),
                                             sdforge::testing::random_orthogonal(k, rng));
            auto oracle = sdforge::testing::enumerate_code(g);
            if (min_distance(g) != oracle.min_weight) all_ok = false;
            auto counts = count_low_weights(g, 12);
            for (auto& [w, c] : counts) {
                uint64_t expect = oracle.counts.count(w) ? oracle.counts.at(w) : 0;
                if (c != expect) all_ok = false;
            }
            ++codes;
        }
    }
    double total = seconds_since(t0);
    char detail[192];
    std::snprintf(detail, sizeof(detail),
                  "%d random self-dual [2k,k] codes, k in {4,6,8,10}: min_distance and "
                  "count_low_weights equal full 2^k enumeration; %.1f s (budget 60 s)",
                  codes, total);
    report("oracle-equivalence", all_ok && total < 60, detail);
}

// --- 3. Construction cross-check ----------------------------------------------
void criterion_construction_crosscheck() {
    std::mt19937_64 rng(20240802);
    bool ok = true;
    auto random_candidate = [&] { return Candidate::from_bits(rng()); };

    struct CaseCheck {
        GroupCase gc;
        const char* name;
    };
    const CaseCheck exact[] = {{GroupCase::D12Case2, "D12-case2"},
                               {GroupCase::C12Case1, "C12-case1"},
                               {GroupCase::C6xC2, "C6xC2"},
                               {GroupCase::C3xC4, "C3xC4"}};
    for (const auto& cc : exact) {
        for (int t = 0; t < 100; ++t) {
            const BlockPattern& p = block_patterns()[static_cast<size_t>(t % 9)];
            auto blocks = build_blocks(random_candidate(), p);
            if (cayley_block_matrix(group_spec(cc.gc), blocks) !=
                explicit_block_matrix(cc.gc, blocks))
                ok = false;
        }
    }

    // D12 case 1: the printed A^T/B^T quadrants transpose each 3x3 block (the
    // reading Table 1 row C1 pins down), which sigma_3 cannot express, so the
    // generic route is compared against the block arrangement, and exactly
    // against the full layout whenever the placed blocks are symmetric (the
    // all-revcirc pattern of G1.2).
    bool d12c1_ok = true;
    const GroupSpec& d1 = group_spec(GroupCase::D12Case1);
    const ExplicitLayout& layout = explicit_layout(GroupCase::D12Case1);
    for (int t = 0; t < 100; ++t) {
        auto blocks_sym = build_blocks(random_candidate(), block_pattern("P-R"));
        if (cayley_block_matrix(d1, blocks_sym) !=
            explicit_block_matrix(GroupCase::D12Case1, blocks_sym))
            d12c1_ok = false;

        auto blocks = build_blocks(random_candidate(), block_pattern("P-CR"));
        BitMatrix sigma = cayley_block_matrix(d1, blocks);
        for (int i = 0; i < 12 && d12c1_ok; ++i)
            for (int j = 0; j < 12; ++j) {
                const Block3& b = blocks[layout[static_cast<size_t>(i)][static_cast<size_t>(j)].block];
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 3; ++c)
                        if (sigma.get(3 * i + r, 3 * j + c) != b.get(r, c)) d12c1_ok = false;
            }
    }
    report("construction-crosscheck", ok && d12c1_ok,
           "Cayley == explicit for D12-case2/C12-case1/C6xC2/C3xC4 (100 random candidates "
           "each); D12-case1: arrangement matches, printed per-block transposes applied on "
           "top (see README)");
}

// --- 4. Self-duality criterion equivalence -------------------------------------
void criterion_selfdual_equivalence() {
    std::mt19937_64 rng(20240803);
    int true_seen = 0, false_seen = 0;
    bool ok = true;
    for (int t = 0; t < 1000; ++t) {
        BitMatrix a(36, 36);
        if (t % 2 == 0) {
            a = sdforge::testing::random_orthogonal(36, rng);
        } else {
            for (int r = 0; r < 36; ++r)
                for (int c = 0; c < 36; ++c)
                    if (rng() & 1) a.set(r, c, true);
        }
        BitMatrix g = BitMatrix::hconcat(BitMatrix::identity(36), a);

        bool route1 = is_orthogonal(a);
        bool route2 = mul(g, g.transposed()).is_zero() && rank_and_inverse(g).rank == 36;
        if (route1 != route2) ok = false;
        (route1 ? true_seen : false_seen)++;
    }
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "A*A^T=I matched (G*G^T=0 and rank 36) on 1000 matrices (%d true, %d false)",
                  true_seen, false_seen);
    report("selfdual-equivalence", ok && true_seen > 0 && false_seen > 0, detail);
}

// --- 5. Extremal bound formulas -------------------------------------------------
void criterion_extremal_bounds() {
    bool ok = extremal_bound(22, SelfDualType::I) == 6 &&
              extremal_bound(24, SelfDualType::II) == 8 &&
              extremal_bound(72, SelfDualType::II) == 16 &&
              extremal_bound(46, SelfDualType::II) == 8 &&
              extremal_bound(46, SelfDualType::I) == 10 &&
              extremal_bound(72, SelfDualType::I) == 16;
    report("extremal-bounds", ok,
           "d_I(22)=6, d_II(24)=8, d_II(46)=8, d_I(46)=10 (46 = 22 mod 24 branch), "
           "d_I(72)=d_II(72)=16, all by direct formula evaluation");
}

// --- 6. Weight-enumerator inversion ---------------------------------------------
void criterion_weight_enumerator_inversion() {
    bool ok = !g_verified.empty();
    int checked = 0;
    for (const auto& v : g_verified) {
        if (!v.pass) continue;
        const auto& counts = v.report.counts;
        if (v.row.type_two) {
            if (static_cast<int64_t>(counts.at(12)) != 4398 + *v.row.alpha) ok = false;
        } else {
            if (static_cast<int64_t>(counts.at(12)) != 2 * *v.row.beta) ok = false;
            if (static_cast<int64_t>(counts.at(14)) != 8640 - 64 * *v.row.gamma) ok = false;
        }
        ++checked;
    }
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "A12 = 2*beta / 4398+alpha and A14 = 8640-64*gamma hold exactly on %d "
                  "verified rows",
                  checked);
    report("weight-enumerator-inversion", ok && checked > 0, detail);
}

// --- 7. Search determinism and audit --------------------------------------------
void criterion_search_determinism_audit() {
    const Construction& k21 = find_construction("G2.1");

    VoaConfig small;
    small.population_size = 60;
    small.iterations = 8;
    small.seed = 17;
    bool deterministic = run_log_json(voa_run(k21, small), false) ==
                         run_log_json(voa_run(k21, small), false);
    GaConfig gsmall;
    gsmall.population_size = 60;
    gsmall.iterations = 8;
    gsmall.seed = 17;
    deterministic = deterministic && run_log_json(ga_run(k21, gsmall), false) ==
                                         run_log_json(ga_run(k21, gsmall), false);

    // The published hit counts are stochastic and unprinted; the substitute
    // property is a seeded smoke run within budget whose population and hit
    // log withstand independent re-verification.
    auto t0 = std::chrono::steady_clock::now();
    VoaConfig smoke;
    smoke.population_size = 500;
    smoke.iterations = 100;
    smoke.seed = 2024;
    RunLog log = voa_run(k21, smoke);
    double smoke_s = seconds_since(t0);

    bool hits_ok = true;
    for (const auto& h : log.hits) {
        const Construction& k = find_construction(h.construction);
        BitMatrix g = k.generator(Candidate::from_hex(h.candidate_hex));
        if (!is_self_dual(g) || min_distance(g) != 12) hits_ok = false;
    }

    // every valid member's score is bounded below by an independently
    // recomputed partial minimum weight (generic enumeration path)
    bool population_ok = true;
    int valid_members = 0;
    for (const auto& m : log.final_population) {
        if (!m.fitness.valid) continue;
        ++valid_members;
        BitMatrix g = k21.generator(m.candidate);
        BitMatrix a = g.columns(36, 36);
        std::vector<int> right(36);
        std::iota(right.begin(), right.end(), 36);
        BitMatrix sys = *systematic_form(g, right);
        BitMatrix b = sys.columns(0, 36);
        int pm = 12;
        for_each_combination(a, 5, [&](const BitVector& acc, int level) {
            pm = std::min(pm, level + acc.weight());
            return true;
        });
        for_each_combination(b, 5, [&](const BitVector& acc, int level) {
            pm = std::min(pm, level + acc.weight());
            return true;
        });
        if (m.fitness.score < pm) population_ok = false;
        if (m.fitness.score < 12 && m.fitness.score != pm) population_ok = false;
    }

    char detail[256];
    std::snprintf(detail, sizeof(detail),
                  "seeded runs byte-reproducible; smoke run (pop 500, 100 iters, G2.1): %.0f s "
                  "(budget 1800 s), %zu hits all re-verified self-dual d=12, %d valid members' "
                  "scores consistent, %llu evaluations",
                  smoke_s, log.hits.size(), valid_members,
                  static_cast<unsigned long long>(log.evaluations));
    report("search-determinism-audit",
           deterministic && smoke_s < 1800 && hits_ok && population_ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_data_dir = argv[1];
    std::printf("acceptance suite (data: %s)\n", g_data_dir.c_str());
    try {
        criterion_table_reproduction();
        criterion_oracle_equivalence();
        criterion_construction_crosscheck();
        criterion_selfdual_equivalence();
        criterion_extremal_bounds();
        criterion_weight_enumerator_inversion();
        criterion_search_determinism_audit();
    } catch (const std::exception& e) {
        std::printf("[FAIL] suite aborted: %s\n", e.what());
        return 1;
    }
    std::printf("%s\n", g_failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
    return g_failures == 0 ? 0 : 1;
}
