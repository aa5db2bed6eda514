#pragma once
// Virus Optimization Algorithm and Genetic Algorithm over 36-bit candidates,
// with staged fitness (orthogonality gate, then partial minimum weight) and
// hit recording. Runs are deterministic functions of (construction, config,
// seed): all randomness is drawn in a fixed order in the main loop, and
// candidate evaluation itself never touches the RNG.

#include <cstdint>
#include <string>
#include <vector>

#include "sdforge/catalog.hpp"
#include "sdforge/construction.hpp"

namespace sdforge {

struct VoaConfig {
    int population_size = 500;
    int iterations = 100;
    int strong_count = 10;        // viruses ranked into the strong class
    int strong_offspring = 5;     // clones per strong virus per iteration
    int common_offspring = 1;     // clones per common virus per iteration
    double strong_flip_prob = 1.0 / 36;  // per-bit mutation of strong offspring
    double common_flip_prob = 3.0 / 36;  // per-bit mutation of common offspring
    int stagnation_window = 5;    // iterations without improvement before intensifying
    uint64_t seed = 0;

    void validate() const;
};

struct GaConfig {
    int population_size = 500;
    int iterations = 100;
    int tournament_size = 3;
    double crossover_prob = 0.9;
    double mutation_flip_prob = 1.0 / 36;
    int elite_count = 2;
    uint64_t seed = 0;

    void validate() const;
};

struct FitnessResult {
    bool valid = false;       // A * A^T == I
    int score = 0;            // 0 when invalid, else min(12, smallest weight seen)
    bool confirmed_d12 = false;  // levels 1..5 on both sets finished with nothing below 12
};

struct PopulationMember {
    Candidate candidate;
    FitnessResult fitness;
};

struct RunLog {
    std::string construction;
    std::string algorithm;  // "voa" | "ga"
    std::string rng;        // RNG algorithm identifier
    uint64_t seed = 0;
    std::string config_json;
    std::vector<int> best_by_iteration;  // index 0 = after initial evaluation
    std::vector<HitRecord> hits;
    std::vector<PopulationMember> final_population;  // rank order
    uint64_t evaluations = 0;  // distinct candidates evaluated
    double wall_ms = 0.0;
};

// JSON form of the log; wall_ms and hit timestamps appear only when
// with_timing is set, so the timing-free form is byte-reproducible.
std::string run_log_json(const RunLog& log, bool with_timing);

// Stage 1: build the group matrix and test A*A^T = I. Stage 2 (valid only):
// interleaved level-1..5 enumeration of both information sets, aborting on
// the first weight below 12.
FitnessResult evaluate_fitness(const Construction& k, Candidate c);

RunLog voa_run(const Construction& k, const VoaConfig& cfg);
RunLog ga_run(const Construction& k, const GaConfig& cfg);

struct CompareRow {
    std::string construction;
    std::string algorithm;
    int runs = 0;
    uint64_t evaluations = 0;
    uint64_t total_hits = 0;
    uint64_t distinct_hits = 0;  // dedup by (family, gamma, beta) or alpha
};

// Runs every (construction, algorithm) pair `runs` times with seeds
// seed0 .. seed0+runs-1 and aggregates hits.
std::vector<CompareRow> compare(std::span<const Construction* const> constructions,
                                std::span<const std::string> algorithms, int runs, uint64_t seed0,
                                const VoaConfig& voa_base, const GaConfig& ga_base);

std::string compare_csv(std::span<const CompareRow> rows);

}  // namespace sdforge
