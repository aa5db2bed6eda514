#pragma once
// Persistence of discoveries (JSON-Lines hit log), the known-parameter ledger
// used for novelty checks, and the loader for the shipped table data that the
// verify-tables run reconstructs.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "sdforge/blocks.hpp"
#include "sdforge/code_analysis.hpp"

namespace sdforge {

struct HitRecord {
    std::string construction;
    std::string candidate_hex;  // 9 hex digits, a1 as MSB
    std::optional<EnumeratorFamily> family;
    std::optional<int64_t> gamma, beta, alpha;
    int d = 0;
    uint64_t a12 = 0, a14 = 0;
    uint64_t seed = 0;
    std::string algorithm;
    int iteration = 0;
    std::string timestamp;               // empty when suppressed
    std::optional<uint64_t> aut_order;   // external metadata, never computed here

    friend bool operator==(const HitRecord&, const HitRecord&) = default;
};

std::string hit_to_json(const HitRecord& h);
HitRecord hit_from_json(const std::string& line);

// Appends one JSON object per line; the line is written with a single atomic
// append so concurrent processes cannot interleave partial records.
void append_hit(const HitRecord& h, const std::filesystem::path& path);
std::vector<HitRecord> load_hits(const std::filesystem::path& path);

struct KnownParameterSet {
    std::set<std::tuple<std::string, int64_t, int64_t>> type_i;  // (family, gamma, beta)
    std::set<int64_t> type_ii;                                   // alpha
};

// CSV columns: kind(I|II), family, gamma, beta, alpha.
KnownParameterSet load_known_params(const std::filesystem::path& path);

// True iff the report's parameters are absent from the ledger.
bool is_new(const CodeReport& r, const KnownParameterSet& known);

struct TableRow {
    std::string id;            // "C1".."C58"
    std::string construction;  // "G1.1"..
    Candidate candidate;       // concatenated r-groups, a1 first
    std::vector<std::string> r_groups;
    bool type_two = false;
    std::optional<int64_t> gamma, beta, alpha;
    std::optional<uint64_t> aut_order;
};

// CSV columns: id, construction, r_bits (';'-separated bit groups), type,
// gamma, beta, alpha, aut_order. Parse errors carry the offending row number.
std::vector<TableRow> load_paper_tables(const std::filesystem::path& path);

}  // namespace sdforge
