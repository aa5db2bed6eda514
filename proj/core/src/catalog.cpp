#include "sdforge/catalog.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sdforge {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void row_error(const std::filesystem::path& path, size_t line_no, const std::string& what) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::string hit_to_json(const HitRecord& h) {
    nlohmann::json j;
    j["construction"] = h.construction;
    j["candidate"] = h.candidate_hex;
    if (h.family) j["family"] = std::string(family_name(*h.family));
    if (h.gamma) j["gamma"] = *h.gamma;
    if (h.beta) j["beta"] = *h.beta;
    if (h.alpha) j["alpha"] = *h.alpha;
    j["d"] = h.d;
    j["a12"] = h.a12;
    j["a14"] = h.a14;
    j["seed"] = h.seed;
    j["algorithm"] = h.algorithm;
    j["iteration"] = h.iteration;
    if (!h.timestamp.empty()) j["timestamp"] = h.timestamp;
    if (h.aut_order) j["aut_order"] = *h.aut_order;
    return j.dump();
}

HitRecord hit_from_json(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    HitRecord h;
    h.construction = j.at("construction").get<std::string>();
    h.candidate_hex = j.at("candidate").get<std::string>();
    if (Candidate::from_hex(h.candidate_hex).to_hex() != h.candidate_hex)
        throw std::runtime_error("hit record: candidate hex does not round-trip");
    if (j.contains("family")) h.family = family_from_name(j["family"].get<std::string>());
    if (j.contains("gamma")) h.gamma = j["gamma"].get<int64_t>();
    if (j.contains("beta")) h.beta = j["beta"].get<int64_t>();
    if (j.contains("alpha")) h.alpha = j["alpha"].get<int64_t>();
    h.d = j.at("d").get<int>();
    h.a12 = j.at("a12").get<uint64_t>();
    h.a14 = j.at("a14").get<uint64_t>();
    h.seed = j.at("seed").get<uint64_t>();
    h.algorithm = j.at("algorithm").get<std::string>();
    h.iteration = j.at("iteration").get<int>();
    if (j.contains("timestamp")) h.timestamp = j["timestamp"].get<std::string>();
    if (j.contains("aut_order")) h.aut_order = j["aut_order"].get<uint64_t>();
    return h;
}

void append_hit(const HitRecord& h, const std::filesystem::path& path) {
    std::string line = hit_to_json(h);
    line.push_back('\n');
    int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
    if (fd < 0) throw std::runtime_error("append_hit: cannot open " + path.string());
    ssize_t n = ::write(fd, line.data(), line.size());
    ::close(fd);
    if (n != static_cast<ssize_t>(line.size()))
        throw std::runtime_error("append_hit: short write to " + path.string());
}

std::vector<HitRecord> load_hits(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_hits: cannot open " + path.string());
    std::vector<HitRecord> out;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        try {
            out.push_back(hit_from_json(line));
        } catch (const std::exception& e) {
            row_error(path, line_no, e.what());
        }
    }
    return out;
}

KnownParameterSet load_known_params(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_known_params: cannot open " + path.string());
    KnownParameterSet known;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (line_no == 1 && t.starts_with("kind")) continue;  // header
        auto f = split(t, ',');
        if (f.size() != 5) row_error(path, line_no, "expected 5 columns");
        try {
            std::string kind = trim(f[0]);
            if (kind == "I") {
                known.type_i.emplace(trim(f[1]), std::stoll(trim(f[2])), std::stoll(trim(f[3])));
            } else if (kind == "II") {
                known.type_ii.insert(std::stoll(trim(f[4])));
            } else {
                row_error(path, line_no, "kind must be I or II");
            }
        } catch (const std::invalid_argument&) {
            row_error(path, line_no, "bad integer field");
        }
    }
    return known;
}

bool is_new(const CodeReport& r, const KnownParameterSet& known) {
    if (!r.family) throw std::invalid_argument("is_new: report carries no family");
    if (*r.family == EnumeratorFamily::TypeII)
        return known.type_ii.count(r.alpha.value()) == 0;
    return known.type_i.count({std::string(family_name(*r.family)), r.gamma.value(),
                               r.beta.value()}) == 0;
}

std::vector<TableRow> load_paper_tables(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_paper_tables: cannot open " + path.string());
    std::vector<TableRow> rows;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.starts_with("id,")) continue;  // header
        auto f = split(t, ',');
        if (f.size() != 8) row_error(path, line_no, "expected 8 columns");
        TableRow row;
        row.id = trim(f[0]);
        row.construction = trim(f[1]);
        std::string bits;
        for (auto& grp : split(trim(f[2]), ';')) {
            std::string g = trim(grp);
            for (char c : g)
                if (c != '0' && c != '1') row_error(path, line_no, "r_bits must be '0'/'1'");
            row.r_groups.push_back(g);
            bits += g;
        }
        if (bits.size() != 36)
            row_error(path, line_no, "r_bits groups must total 36 bits, got " +
                                         std::to_string(bits.size()));
        row.candidate = Candidate::from_bit_string(bits);
        std::string type = trim(f[3]);
        try {
            if (type == "II") {
                row.type_two = true;
                if (trim(f[6]).empty()) row_error(path, line_no, "Type II row without alpha");
                row.alpha = std::stoll(trim(f[6]));
            } else if (type == "W72_1" || type == "W72_2") {
                row.type_two = false;
                if (trim(f[4]).empty() || trim(f[5]).empty())
                    row_error(path, line_no, "Type I row without gamma/beta");
                row.gamma = std::stoll(trim(f[4]));
                row.beta = std::stoll(trim(f[5]));
            } else {
                row_error(path, line_no, "type must be W72_1, W72_2 or II");
            }
            if (!trim(f[7]).empty()) row.aut_order = std::stoull(trim(f[7]));
        } catch (const std::invalid_argument&) {
            row_error(path, line_no, "bad integer field");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace sdforge
