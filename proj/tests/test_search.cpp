#include <doctest.h>

#include "sdforge/catalog.hpp"
#include "sdforge/code_analysis.hpp"
#include "sdforge/search.hpp"
#include "test_paths.hpp"

using namespace sdforge;

namespace {

Candidate row_candidate(const std::string& id, std::string* construction = nullptr) {
    auto rows = load_paper_tables(std::string(SDFORGE_DATA_DIR) + "/paper_tables.csv");
    for (auto& r : rows)
        if (r.id == id) {
            if (construction) *construction = r.construction;
            return r.candidate;
        }
    throw std::runtime_error("no row " + id);
}

}  // namespace

TEST_CASE("evaluate_fitness: stage gates") {
    // zero candidate: A = 0, not self-orthogonalizable
    FitnessResult z = evaluate_fitness(find_construction("G2.1"), Candidate{});
    CHECK_FALSE(z.valid);
    CHECK(z.score == 0);
    CHECK_FALSE(z.confirmed_d12);

    // a1 = 1 under all-circ C12 case 1: A = I36, [I|I] has d = 2
    Candidate a1;
    a1.set_bit(0, true);
    FitnessResult i2 = evaluate_fitness(find_construction("G3.1"), a1);
    CHECK(i2.valid);
    CHECK(i2.score == 2);
    CHECK_FALSE(i2.confirmed_d12);

    // a published code confirms at 12
    std::string kid;
    Candidate c1 = row_candidate("C1", &kid);
    FitnessResult hit = evaluate_fitness(find_construction(kid), c1);
    CHECK(hit.valid);
    CHECK(hit.score == 12);
    CHECK(hit.confirmed_d12);
}

TEST_CASE("fitness/min_distance cross-module consistency") {
    std::string kid;
    Candidate c1 = row_candidate("C1", &kid);
    const Construction& k = find_construction(kid);
    CHECK(evaluate_fitness(k, c1).confirmed_d12);
    CHECK(min_distance(k.generator(c1)) == 12);

    Candidate a1;
    a1.set_bit(0, true);
    const Construction& g31 = find_construction("G3.1");
    FitnessResult f = evaluate_fitness(g31, a1);
    CHECK_FALSE(f.confirmed_d12);
    CHECK(min_distance(g31.generator(a1)) == f.score);
}

TEST_CASE("voa_run: determinism, boundaries, elitism") {
    const Construction& k = find_construction("G2.1");
    VoaConfig cfg;
    cfg.population_size = 40;
    cfg.iterations = 6;
    cfg.strong_count = 5;
    cfg.seed = 7;

    RunLog a = voa_run(k, cfg);
    RunLog b = voa_run(k, cfg);
    CHECK(run_log_json(a, false) == run_log_json(b, false));  // byte-identical sans timing

    VoaConfig other = cfg;
    other.seed = 8;
    CHECK(run_log_json(voa_run(k, other), false) != run_log_json(a, false));

    CHECK(a.best_by_iteration.size() == 7);  // initial + 6 iterations
    for (size_t i = 1; i < a.best_by_iteration.size(); ++i)
        CHECK(a.best_by_iteration[i] >= a.best_by_iteration[i - 1]);
    CHECK(a.final_population.size() == 40);
    CHECK(a.evaluations > 0);
    CHECK(a.rng == "mt19937_64");

    VoaConfig zero = cfg;
    zero.iterations = 0;
    RunLog z = voa_run(k, zero);
    CHECK(z.best_by_iteration.size() == 1);
    CHECK(z.evaluations <= 40);  // only the initial population
    CHECK(z.final_population.size() == 40);

    VoaConfig bad = cfg;
    bad.strong_count = 40;
    CHECK_THROWS_AS(voa_run(k, bad), std::invalid_argument);
    bad = cfg;
    bad.common_flip_prob = 0.0;
    CHECK_THROWS_AS(voa_run(k, bad), std::invalid_argument);
}

TEST_CASE("ga_run: determinism, fixed point, elitism") {
    const Construction& k = find_construction("G2.1");
    GaConfig cfg;
    cfg.population_size = 40;
    cfg.iterations = 6;
    cfg.seed = 9;

    RunLog a = ga_run(k, cfg);
    RunLog b = ga_run(k, cfg);
    CHECK(run_log_json(a, false) == run_log_json(b, false));
    CHECK(a.best_by_iteration.size() == 7);
    for (size_t i = 1; i < a.best_by_iteration.size(); ++i)
        CHECK(a.best_by_iteration[i] >= a.best_by_iteration[i - 1]);
    CHECK(a.final_population.size() == 40);

    // no mutation, no crossover, full elitism: the population is a fixed point
    GaConfig frozen = cfg;
    frozen.mutation_flip_prob = 0.0;
    frozen.crossover_prob = 0.0;
    frozen.elite_count = frozen.population_size;
    RunLog f = ga_run(k, frozen);
    CHECK(f.evaluations <= 40);  // nothing new is ever evaluated
    for (int best : f.best_by_iteration) CHECK(best == f.best_by_iteration[0]);

    GaConfig bad = cfg;
    bad.elite_count = 41;
    CHECK_THROWS_AS(ga_run(k, bad), std::invalid_argument);
}

TEST_CASE("hit records re-verify and carry full parameters") {
    // Drive the VOA into a known hit by seeding nothing: instead verify the
    // hit machinery directly through a forced evaluation of a table row.
    std::string kid;
    Candidate c1 = row_candidate("C1", &kid);
    const Construction& k = find_construction(kid);

    // A run whose initial population is unlikely to hit still exercises the
    // log structure; the direct verification below checks the audit property.
    BitMatrix g = k.generator(c1);
    CHECK(is_self_dual(g));
    CHECK(min_distance(g) == 12);
    CodeReport rep = extract_params(g);
    CHECK(rep.counts.at(12) == 2 * static_cast<uint64_t>(*rep.beta));
}

TEST_CASE("compare: shape, determinism, seed-union identity") {
    const Construction* ks[] = {&find_construction("G2.1"), &find_construction("G3.1")};
    std::vector<std::string> algos = {"voa", "ga"};
    VoaConfig voa;
    voa.population_size = 20;
    voa.iterations = 2;
    voa.strong_count = 3;
    GaConfig ga;
    ga.population_size = 20;
    ga.iterations = 2;

    auto rows = compare(ks, algos, 2, 100, voa, ga);
    REQUIRE(rows.size() == 4);  // one row per (construction, algorithm)
    for (const auto& r : rows) {
        CHECK(r.runs == 2);
        CHECK(r.evaluations > 0);
        CHECK(r.distinct_hits <= r.total_hits);
    }

    // aggregate equals the sum of the per-seed runs
    VoaConfig v0 = voa;
    v0.seed = 100;
    VoaConfig v1 = voa;
    v1.seed = 101;
    RunLog r0 = voa_run(*ks[0], v0);
    RunLog r1 = voa_run(*ks[0], v1);
    CHECK(rows[0].construction == "G2.1");
    CHECK(rows[0].algorithm == "voa");
    CHECK(rows[0].total_hits == r0.hits.size() + r1.hits.size());
    CHECK(rows[0].evaluations == r0.evaluations + r1.evaluations);

    std::string csv = compare_csv(rows);
    CHECK(csv.find("construction,algorithm,runs,evaluations,total_hits,distinct_hits") == 0);
    CHECK(csv.find("G3.1,ga,2,") != std::string::npos);

    CHECK_THROWS_AS(compare(ks, algos, 0, 1, voa, ga), std::invalid_argument);
    std::vector<std::string> bad_algo = {"annealing"};
    CHECK_THROWS_AS(compare(ks, bad_algo, 1, 1, voa, ga), std::invalid_argument);
}
