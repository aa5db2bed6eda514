#include "sdforge/code_analysis.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <istream>
#include <numeric>
#include <ostream>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

namespace sdforge {

namespace {

void check_ia_shape(const BitMatrix& g) {
    const int k = g.rows();
    if (k == 0 || g.cols() != 2 * k)
        throw std::invalid_argument("expected a k x 2k generator matrix");
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            if (g.get(r, c) != (r == c))
                throw std::invalid_argument("expected [I | A] form: left half is not the identity");
}

std::vector<uint64_t> row_words(const BitMatrix& m) {
    std::vector<uint64_t> w(static_cast<size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) w[static_cast<size_t>(r)] = m.row(r).word(0);
    return w;
}

int resolve_threads(int threads, int n) {
    if (threads < 1) threads = 1;
    return std::min(threads, n);
}

// Minimum of (level + popcount(acc)) over all level-sized subsets whose
// leading index is in the given stripe set {t, t+T, t+2T, ...}.
int scan_level_min(std::span<const uint64_t> rows, int n, int level, int threads) {
    auto one_stripe = [&](int t, int step) {
        int best = INT_MAX;
        for (int lead = t; lead <= n - level; lead += step)
            detail::combos_from_lead<1>(rows.data(), n, level, lead,
                                        [&](const detail::WordAcc<1>& a, int lv) {
                                            best = std::min(best, lv + a.weight());
                                            return true;
                                        });
        return best;
    };
    threads = resolve_threads(threads, n);
    if (threads == 1) return one_stripe(0, 1);
    std::vector<int> out(static_cast<size_t>(threads), INT_MAX);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] { out[static_cast<size_t>(t)] = one_stripe(t, threads); });
    for (auto& th : pool) th.join();
    return *std::min_element(out.begin(), out.end());
}

// Tallies counts[w] for one level of one set. set2 uses the stricter
// level <= w/2 - 1 membership rule so the two sets partition weight-w words.
void scan_level_counts(std::span<const uint64_t> rows, int n, int level, int w_max, bool set2,
                       std::span<uint64_t> counts, int threads) {
    auto one_stripe = [&](int t, int step, std::span<uint64_t> local) {
        for (int lead = t; lead <= n - level; lead += step)
            detail::combos_from_lead<1>(rows.data(), n, level, lead,
                                        [&](const detail::WordAcc<1>& a, int lv) {
                                            int w = lv + a.weight();
                                            if (w <= w_max && lv <= w / 2 - (set2 ? 1 : 0))
                                                ++local[static_cast<size_t>(w)];
                                            return true;
                                        });
    };
    threads = resolve_threads(threads, n);
    if (threads == 1) {
        one_stripe(0, 1, counts);
        return;
    }
    std::vector<std::vector<uint64_t>> locals(
        static_cast<size_t>(threads), std::vector<uint64_t>(counts.size(), 0));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] { one_stripe(t, threads, locals[static_cast<size_t>(t)]); });
    for (auto& th : pool) th.join();
    for (const auto& local : locals)
        for (size_t w = 0; w < counts.size(); ++w) counts[w] += local[w];
}

}  // namespace

std::string_view family_name(EnumeratorFamily f) {
    switch (f) {
        case EnumeratorFamily::W72_1: return "W72_1";
        case EnumeratorFamily::W72_2: return "W72_2";
        case EnumeratorFamily::TypeII: return "II";
    }
    return "?";
}

EnumeratorFamily family_from_name(std::string_view s) {
    if (s == "W72_1") return EnumeratorFamily::W72_1;
    if (s == "W72_2") return EnumeratorFamily::W72_2;
    if (s == "II" || s == "TYPE_II") return EnumeratorFamily::TypeII;
    throw std::invalid_argument("unknown enumerator family: " + std::string(s));
}

bool is_orthogonal(const BitMatrix& a) {
    if (a.rows() != a.cols()) return false;
    const int n = a.rows();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            int par = (a.row(i) & a.row(j)).weight() & 1;
            if (par != (i == j ? 1 : 0)) return false;
        }
    return true;
}

bool is_self_dual(const BitMatrix& g) {
    check_ia_shape(g);
    const int k = g.rows();
    const BitMatrix a = g.columns(k, k);

    bool route1 = is_orthogonal(a);

    const BitMatrix gram = mul(g, g.transposed());
    bool route2 = gram.is_zero() && rank_and_inverse(g).rank == k;

    if (route1 != route2)
        throw std::logic_error("self-duality criteria disagree: A*A^T vs G*G^T/rank");
    return route1;
}

bool classify_doubly_even(const BitMatrix& g) {
    if (!is_self_dual(g)) throw std::invalid_argument("classify_doubly_even: code is not self-dual");
    for (int r = 0; r < g.rows(); ++r)
        if (g.row(r).weight() % 4 != 0) return false;
    return true;
}

namespace detail {

TwoSetBases two_set_bases(const BitMatrix& g) {
    const int k = g.rows();
    TwoSetBases b;
    b.k = k;
    b.set1 = row_words(g.columns(k, k));

    std::vector<int> right(static_cast<size_t>(k));
    std::iota(right.begin(), right.end(), k);
    auto sys = systematic_form(g, right);
    if (!sys) throw std::invalid_argument("right half is not an information set");
    b.set2 = row_words(sys->columns(0, k));
    return b;
}

PartialMinResult partial_min_weight(std::span<const uint64_t> set1, std::span<const uint64_t> set2,
                                    int n, int max_level, int abort_below) {
    int best = INT_MAX;
    for (int level = 1; level <= std::min(max_level, n); ++level) {
        for (const auto& rows : {set1, set2}) {
            for (int lead = 0; lead <= n - level; ++lead) {
                bool cont = combos_from_lead<1>(rows.data(), n, level, lead,
                                                [&](const WordAcc<1>& a, int lv) {
                                                    int w = lv + a.weight();
                                                    if (w < best) best = w;
                                                    return w >= abort_below;
                                                });
                if (!cont) return {best, false};
            }
        }
    }
    return {best, true};
}

}  // namespace detail

int min_distance(const BitMatrix& g, int threads) {
    if (!is_self_dual(g)) throw std::invalid_argument("min_distance: code is not self-dual");
    const auto bases = detail::two_set_bases(g);
    const int k = bases.k;

    int best = INT_MAX;
    for (int level = 1; level <= k; ++level) {
        best = std::min(best, scan_level_min(bases.set1, k, level, threads));
        best = std::min(best, scan_level_min(bases.set2, k, level, threads));
        if (best <= 2 * (level + 1)) return best;
    }
    return best;
}

std::map<int, uint64_t> count_low_weights(const BitMatrix& g, int w_max, int threads) {
    if (w_max != 12 && w_max != 14 && w_max != 16)
        throw std::invalid_argument("count_low_weights: w_max must be 12, 14 or 16");
    if (!is_self_dual(g)) throw std::invalid_argument("count_low_weights: code is not self-dual");

    const auto bases = detail::two_set_bases(g);
    const int k = bases.k;
    const int n = g.cols();
    const int bound = std::min(w_max, n);

    std::vector<uint64_t> tally(static_cast<size_t>(w_max) + 1, 0);
    const int l1 = std::min(w_max / 2, k);
    const int l2 = std::min(w_max / 2 - 1, k);
    for (int level = 1; level <= l1; ++level)
        scan_level_counts(bases.set1, k, level, w_max, false, tally, threads);
    for (int level = 1; level <= l2; ++level)
        scan_level_counts(bases.set2, k, level, w_max, true, tally, threads);

    std::map<int, uint64_t> counts;
    for (int w = 2; w <= bound; w += 2) counts[w] = tally[static_cast<size_t>(w)];
    return counts;
}

FamilyParams family_params(bool doubly_even, int64_t a12, int64_t a14,
                           std::optional<int64_t> a16) {
    if (doubly_even) {
        if (a14 != 0) throw FamilyInconsistencyError("doubly-even code with A_14 > 0");
        return {EnumeratorFamily::TypeII, std::nullopt, std::nullopt, a12 - 4398};
    }

    if (a12 % 2 != 0) throw FamilyInconsistencyError("Type I code with odd A_12");
    const int64_t beta = a12 / 2;

    const int64_t num1 = 8640 - a14;
    const int64_t num2 = 7616 - a14;
    std::optional<int64_t> g1, g2;
    if (num1 % 64 == 0 && num1 >= 0 && num1 / 64 <= 135) g1 = num1 / 64;
    if (num2 % 64 == 0 && num2 >= 0 && num2 / 64 <= 119) g2 = num2 / 64;

    if (a16) {
        if (g1 && *a16 == 124281 - 24 * beta + 384 * *g1)
            return {EnumeratorFamily::W72_1, *g1, beta, std::nullopt};
        if (g2 && *a16 == 134521 - 24 * beta + 384 * *g2)
            return {EnumeratorFamily::W72_2, *g2, beta, std::nullopt};
        throw FamilyInconsistencyError("A_16 fits neither W72_1 nor W72_2");
    }
    if (g1) return {EnumeratorFamily::W72_1, *g1, beta, std::nullopt};
    if (g2) return {EnumeratorFamily::W72_2, *g2, beta, std::nullopt};
    throw FamilyInconsistencyError("A_14 fits neither W72_1 nor W72_2");
}

CodeReport extract_params(const BitMatrix& g, bool with_a16, int threads) {
    CodeReport r;
    r.self_dual = is_self_dual(g);
    if (!r.self_dual) throw std::invalid_argument("extract_params: code is not self-dual");

    r.counts = count_low_weights(g, with_a16 ? 16 : 14, threads);
    for (int w = 2; w < 12; w += 2)
        if (r.counts.at(w) != 0)
            throw NotExtremalError("minimum distance below 12 (A_" + std::to_string(w) + " > 0)");
    if (r.counts.at(12) == 0) throw NotExtremalError("minimum distance above 12 (A_12 = 0)");
    r.min_distance = 12;
    r.doubly_even = classify_doubly_even(g);

    FamilyParams p = family_params(r.doubly_even, static_cast<int64_t>(r.counts.at(12)),
                                   static_cast<int64_t>(r.counts.at(14)),
                                   with_a16 ? std::optional<int64_t>(static_cast<int64_t>(
                                                  r.counts.at(16)))
                                            : std::nullopt);
    r.family = p.family;
    r.gamma = p.gamma;
    r.beta = p.beta;
    r.alpha = p.alpha;
    return r;
}

int extremal_bound(int n, SelfDualType type) {
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("extremal_bound: length must be even");
    int base = 4 * (n / 24) + 4;
    if (type == SelfDualType::I && n % 24 == 22) return base + 2;
    return base;
}

BitMatrix read_generator_text(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        lines.push_back(line);
    }
    if (lines.size() != 36)
        throw std::runtime_error("generator text: expected 36 rows, got " +
                                 std::to_string(lines.size()));
    BitMatrix g(36, 72);
    for (int r = 0; r < 36; ++r) {
        const std::string& s = lines[static_cast<size_t>(r)];
        if (s.size() != 72)
            throw std::runtime_error("generator text: row " + std::to_string(r + 1) +
                                     " has length " + std::to_string(s.size()) + ", expected 72");
        for (int c = 0; c < 72; ++c) {
            char ch = s[static_cast<size_t>(c)];
            if (ch != '0' && ch != '1')
                throw std::runtime_error("generator text: row " + std::to_string(r + 1) +
                                         ": expected '0'/'1'");
            if (ch == '1') g.set(r, c, true);
        }
    }
    return g;
}

void write_generator_text(const BitMatrix& g, std::ostream& out) {
    for (int r = 0; r < g.rows(); ++r) out << g.row(r).to_string() << '\n';
}

std::string to_json(const CodeReport& r) {
    nlohmann::json j;
    if (!r.construction.empty()) j["construction"] = r.construction;
    if (!r.candidate_hex.empty()) j["candidate"] = r.candidate_hex;
    j["self_dual"] = r.self_dual;
    if (r.self_dual) {
        j["min_distance"] = r.min_distance;
        j["doubly_even"] = r.doubly_even;
        nlohmann::json counts = nlohmann::json::object();
        for (const auto& [w, c] : r.counts) counts["A" + std::to_string(w)] = c;
        j["counts"] = counts;
    }
    if (r.family) j["family"] = std::string(family_name(*r.family));
    if (r.gamma) j["gamma"] = *r.gamma;
    if (r.beta) j["beta"] = *r.beta;
    if (r.alpha) j["alpha"] = *r.alpha;
    return j.dump();
}

}  // namespace sdforge
