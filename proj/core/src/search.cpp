#include "sdforge/search.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "sdforge/code_analysis.hpp"
#include "sdforge/rng.hpp"

namespace sdforge {

namespace {

struct Entry {
    Candidate c;
    FitnessResult fit;
};

// score descending, then candidate bits ascending: a total order, so ranking
// is deterministic.
bool rank_less(const Entry& a, const Entry& b) {
    if (a.fit.score != b.fit.score) return a.fit.score > b.fit.score;
    return a.c.bits < b.c.bits;
}

// Shared evaluation context: memoizes fitness by candidate bits and records a
// hit the first time a confirmed-d12 candidate is evaluated.
struct Evaluator {
    const Construction& k;
    uint64_t seed;
    std::string algorithm;
    std::unordered_map<uint64_t, FitnessResult> cache;
    std::vector<HitRecord>* hits;
    uint64_t evaluations = 0;
    int current_iteration = 0;

    FitnessResult eval(Candidate c) {
        auto it = cache.find(c.bits);
        if (it != cache.end()) return it->second;
        FitnessResult fit = evaluate_fitness(k, c);
        ++evaluations;
        cache.emplace(c.bits, fit);
        if (fit.confirmed_d12 && hits) hits->push_back(make_hit(c));
        return fit;
    }

    HitRecord make_hit(Candidate c) const {
        HitRecord h;
        h.construction = std::string(k.id);
        h.candidate_hex = c.to_hex();
        h.seed = seed;
        h.algorithm = algorithm;
        h.iteration = current_iteration;
        BitMatrix g = k.generator(c);
        try {
            CodeReport rep = extract_params(g);
            h.d = rep.min_distance;
            h.a12 = rep.counts.at(12);
            h.a14 = rep.counts.at(14);
            h.family = rep.family;
            h.gamma = rep.gamma;
            h.beta = rep.beta;
            h.alpha = rep.alpha;
        } catch (const NotExtremalError&) {
            // d >= 14 would be a world first; record it without family data.
            h.d = min_distance(g);
            auto counts = count_low_weights(g, 14);
            h.a12 = counts.at(12);
            h.a14 = counts.at(14);
        }
        return h;
    }
};

Candidate mutate(Candidate c, double flip_prob, Rng& rng) {
    for (int i = 0; i < 36; ++i)
        if (rng.bernoulli(flip_prob)) c.set_bit(i, !c.bit(i));
    return c;
}

}  // namespace

void VoaConfig::validate() const {
    if (population_size <= 0) throw std::invalid_argument("voa: population_size must be positive");
    if (iterations < 0) throw std::invalid_argument("voa: iterations must be >= 0");
    if (strong_count <= 0 || strong_count >= population_size)
        throw std::invalid_argument("voa: need 0 < strong_count < population_size");
    if (strong_offspring <= 0 || common_offspring <= 0)
        throw std::invalid_argument("voa: offspring counts must be positive");
    if (!(strong_flip_prob > 0 && strong_flip_prob < 1) ||
        !(common_flip_prob > 0 && common_flip_prob < 1))
        throw std::invalid_argument("voa: flip probabilities must lie in (0,1)");
    if (stagnation_window <= 0) throw std::invalid_argument("voa: stagnation_window must be positive");
}

void GaConfig::validate() const {
    if (population_size <= 0) throw std::invalid_argument("ga: population_size must be positive");
    if (iterations < 0) throw std::invalid_argument("ga: iterations must be >= 0");
    if (tournament_size <= 0) throw std::invalid_argument("ga: tournament_size must be positive");
    if (crossover_prob < 0 || crossover_prob > 1 || mutation_flip_prob < 0 || mutation_flip_prob > 1)
        throw std::invalid_argument("ga: probabilities must lie in [0,1]");
    if (elite_count < 0 || elite_count > population_size)
        throw std::invalid_argument("ga: need 0 <= elite_count <= population_size");
}

FitnessResult evaluate_fitness(const Construction& k, Candidate c) {
    BitMatrix a = k.group_matrix(c);
    if (!is_orthogonal(a)) return {false, 0, false};

    // A orthogonal means A^-1 = A^T, so [A^T | I] is the (unique) systematic
    // form on the right information set; no elimination needed here.
    std::array<uint64_t, 36> set1, set2;
    for (int r = 0; r < 36; ++r) set1[static_cast<size_t>(r)] = a.row(r).word(0);
    BitMatrix at = a.transposed();
    for (int r = 0; r < 36; ++r) set2[static_cast<size_t>(r)] = at.row(r).word(0);

    auto res = detail::partial_min_weight(set1, set2, 36, 5, 12);
    if (!res.completed) return {true, res.min_weight, false};
    return {true, std::min(12, res.min_weight), true};
}

namespace {

std::string voa_config_json(const VoaConfig& c) {
    nlohmann::json j;
    j["population_size"] = c.population_size;
    j["iterations"] = c.iterations;
    j["strong_count"] = c.strong_count;
    j["strong_offspring"] = c.strong_offspring;
    j["common_offspring"] = c.common_offspring;
    j["strong_flip_prob"] = c.strong_flip_prob;
    j["common_flip_prob"] = c.common_flip_prob;
    j["stagnation_window"] = c.stagnation_window;
    j["seed"] = c.seed;
    return j.dump();
}

std::string ga_config_json(const GaConfig& c) {
    nlohmann::json j;
    j["population_size"] = c.population_size;
    j["iterations"] = c.iterations;
    j["tournament_size"] = c.tournament_size;
    j["crossover_prob"] = c.crossover_prob;
    j["mutation_flip_prob"] = c.mutation_flip_prob;
    j["elite_count"] = c.elite_count;
    j["seed"] = c.seed;
    return j.dump();
}

}  // namespace

RunLog voa_run(const Construction& k, const VoaConfig& cfg) {
    cfg.validate();
    auto t0 = std::chrono::steady_clock::now();

    RunLog log;
    log.construction = std::string(k.id);
    log.algorithm = "voa";
    log.rng = Rng::kAlgorithm;
    log.seed = cfg.seed;
    log.config_json = voa_config_json(cfg);

    Rng rng(cfg.seed);
    Evaluator ev{k, cfg.seed, "voa", {}, &log.hits};

    std::vector<Entry> pop;
    pop.reserve(static_cast<size_t>(cfg.population_size));
    for (int i = 0; i < cfg.population_size; ++i) pop.push_back({Candidate::random(rng), {}});
    for (auto& e : pop) e.fit = ev.eval(e.c);
    std::sort(pop.begin(), pop.end(), rank_less);
    log.best_by_iteration.push_back(pop.front().fit.score);

    int best = pop.front().fit.score;
    int stagnation = 0;
    double common_flip = cfg.common_flip_prob;

    auto pad_with_fresh = [&](std::vector<Entry>& v) {
        std::unordered_set<uint64_t> present;
        for (const auto& e : v) present.insert(e.c.bits);
        while (static_cast<int>(v.size()) < cfg.population_size) {
            Candidate c = Candidate::random(rng);
            if (!present.insert(c.bits).second) continue;
            v.push_back({c, ev.eval(c)});
        }
    };

    for (int iter = 1; iter <= cfg.iterations; ++iter) {
        ev.current_iteration = iter;

        // Replication: strong viruses clone with the low flip rate, common
        // viruses with the (possibly intensified) high one. All randomness is
        // drawn here, in rank order, before any evaluation.
        std::vector<Candidate> offspring;
        for (int i = 0; i < cfg.strong_count; ++i)
            for (int j = 0; j < cfg.strong_offspring; ++j)
                offspring.push_back(mutate(pop[static_cast<size_t>(i)].c, cfg.strong_flip_prob, rng));
        for (int i = cfg.strong_count; i < cfg.population_size; ++i)
            for (int j = 0; j < cfg.common_offspring; ++j)
                offspring.push_back(mutate(pop[static_cast<size_t>(i)].c, common_flip, rng));

        std::vector<Entry> pool = pop;
        for (Candidate c : offspring) pool.push_back({c, ev.eval(c)});

        // Maintenance ("antivirus"): dedup by bits, keep the best
        // population_size, pad with fresh candidates if dedup undershot.
        std::sort(pool.begin(), pool.end(), rank_less);
        std::vector<Entry> next;
        next.reserve(static_cast<size_t>(cfg.population_size));
        std::unordered_set<uint64_t> seen;
        for (const auto& e : pool) {
            if (!seen.insert(e.c.bits).second) continue;
            next.push_back(e);
            if (static_cast<int>(next.size()) == cfg.population_size) break;
        }
        pad_with_fresh(next);
        std::sort(next.begin(), next.end(), rank_less);
        pop = std::move(next);
        if (static_cast<int>(pop.size()) != cfg.population_size)
            throw std::logic_error("voa: population size drifted during maintenance");

        if (pop.front().fit.score > best) {
            best = pop.front().fit.score;
            stagnation = 0;
        } else {
            ++stagnation;
        }

        // Intensification: on stagnation, sharpen the common flip rate toward
        // the strong one and replace the worst half with fresh candidates.
        if (stagnation >= cfg.stagnation_window) {
            common_flip = std::max(cfg.strong_flip_prob, common_flip / 2);
            std::vector<Entry> kept(pop.begin(), pop.begin() + cfg.population_size / 2);
            pad_with_fresh(kept);
            std::sort(kept.begin(), kept.end(), rank_less);
            pop = std::move(kept);
            stagnation = 0;
        }

        log.best_by_iteration.push_back(pop.front().fit.score);
    }

    for (const auto& e : pop) log.final_population.push_back({e.c, e.fit});
    log.evaluations = ev.evaluations;
    log.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return log;
}

RunLog ga_run(const Construction& k, const GaConfig& cfg) {
    cfg.validate();
    auto t0 = std::chrono::steady_clock::now();

    RunLog log;
    log.construction = std::string(k.id);
    log.algorithm = "ga";
    log.rng = Rng::kAlgorithm;
    log.seed = cfg.seed;
    log.config_json = ga_config_json(cfg);

    Rng rng(cfg.seed);
    Evaluator ev{k, cfg.seed, "ga", {}, &log.hits};

    std::vector<Entry> pop;
    pop.reserve(static_cast<size_t>(cfg.population_size));
    for (int i = 0; i < cfg.population_size; ++i) pop.push_back({Candidate::random(rng), {}});
    for (auto& e : pop) e.fit = ev.eval(e.c);
    std::sort(pop.begin(), pop.end(), rank_less);
    log.best_by_iteration.push_back(pop.front().fit.score);

    auto tournament = [&]() -> const Entry& {
        int winner = cfg.population_size;
        for (int t = 0; t < cfg.tournament_size; ++t)
            winner = std::min(winner, static_cast<int>(rng.below(static_cast<uint32_t>(cfg.population_size))));
        return pop[static_cast<size_t>(winner)];  // pop is rank-sorted: lower index = fitter
    };

    for (int iter = 1; iter <= cfg.iterations; ++iter) {
        ev.current_iteration = iter;

        std::vector<Candidate> children;
        const int want = cfg.population_size - cfg.elite_count;
        while (static_cast<int>(children.size()) < want) {
            Candidate p1 = tournament().c;
            Candidate p2 = tournament().c;
            Candidate c1 = p1, c2 = p2;
            if (rng.bernoulli(cfg.crossover_prob)) {
                int cut = 1 + static_cast<int>(rng.below(35));  // cut point in 1..35
                for (int b = cut; b < 36; ++b) {
                    c1.set_bit(b, p2.bit(b));
                    c2.set_bit(b, p1.bit(b));
                }
            }
            children.push_back(mutate(c1, cfg.mutation_flip_prob, rng));
            if (static_cast<int>(children.size()) < want)
                children.push_back(mutate(c2, cfg.mutation_flip_prob, rng));
        }

        std::vector<Entry> next(pop.begin(), pop.begin() + cfg.elite_count);
        for (Candidate c : children) next.push_back({c, ev.eval(c)});
        std::sort(next.begin(), next.end(), rank_less);
        pop = std::move(next);
        log.best_by_iteration.push_back(pop.front().fit.score);
    }

    for (const auto& e : pop) log.final_population.push_back({e.c, e.fit});
    log.evaluations = ev.evaluations;
    log.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return log;
}

std::string run_log_json(const RunLog& log, bool with_timing) {
    nlohmann::json j;
    j["construction"] = log.construction;
    j["algorithm"] = log.algorithm;
    j["rng"] = log.rng;
    j["seed"] = log.seed;
    j["config"] = nlohmann::json::parse(log.config_json);
    j["best_by_iteration"] = log.best_by_iteration;
    j["evaluations"] = log.evaluations;
    nlohmann::json hits = nlohmann::json::array();
    for (const auto& h : log.hits) {
        HitRecord copy = h;
        if (!with_timing) copy.timestamp.clear();
        hits.push_back(nlohmann::json::parse(hit_to_json(copy)));
    }
    j["hits"] = hits;
    j["hit_count"] = log.hits.size();
    nlohmann::json popj = nlohmann::json::array();
    for (const auto& m : log.final_population) {
        nlohmann::json e;
        e["candidate"] = m.candidate.to_hex();
        e["valid"] = m.fitness.valid;
        e["score"] = m.fitness.score;
        e["confirmed_d12"] = m.fitness.confirmed_d12;
        popj.push_back(e);
    }
    j["final_population"] = popj;
    if (with_timing) j["wall_ms"] = log.wall_ms;
    return j.dump();
}

std::vector<CompareRow> compare(std::span<const Construction* const> constructions,
                                std::span<const std::string> algorithms, int runs, uint64_t seed0,
                                const VoaConfig& voa_base, const GaConfig& ga_base) {
    if (runs < 1) throw std::invalid_argument("compare: runs must be >= 1");
    std::vector<CompareRow> out;
    for (const Construction* k : constructions) {
        for (const auto& algo : algorithms) {
            CompareRow row;
            row.construction = std::string(k->id);
            row.algorithm = algo;
            row.runs = runs;
            std::set<std::tuple<std::string, int64_t, int64_t>> distinct;
            for (int r = 0; r < runs; ++r) {
                RunLog log;
                if (algo == "voa") {
                    VoaConfig cfg = voa_base;
                    cfg.seed = seed0 + static_cast<uint64_t>(r);
                    log = voa_run(*k, cfg);
                } else if (algo == "ga") {
                    GaConfig cfg = ga_base;
                    cfg.seed = seed0 + static_cast<uint64_t>(r);
                    log = ga_run(*k, cfg);
                } else {
                    throw std::invalid_argument("compare: unknown algorithm " + algo);
                }
                row.evaluations += log.evaluations;
                row.total_hits += log.hits.size();
                for (const auto& h : log.hits) {
                    if (h.alpha)
                        distinct.insert({"II", *h.alpha, 0});
                    else if (h.family)
                        distinct.insert({std::string(family_name(*h.family)), h.gamma.value_or(0),
                                         h.beta.value_or(0)});
                }
            }
            row.distinct_hits = distinct.size();
            out.push_back(std::move(row));
        }
    }
    return out;
}

std::string compare_csv(std::span<const CompareRow> rows) {
    std::string s = "construction,algorithm,runs,evaluations,total_hits,distinct_hits\n";
    for (const auto& r : rows) {
        s += r.construction + "," + r.algorithm + "," + std::to_string(r.runs) + "," +
             std::to_string(r.evaluations) + "," + std::to_string(r.total_hits) + "," +
             std::to_string(r.distinct_hits) + "\n";
    }
    return s;
}

}  // namespace sdforge
