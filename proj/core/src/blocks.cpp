#include "sdforge/blocks.hpp"

#include <stdexcept>

namespace sdforge {

namespace {

constexpr BlockKind C = BlockKind::Circ;
constexpr BlockKind R = BlockKind::Revcirc;

constexpr std::array<BlockPattern, 9> k_patterns = {{
    {"P-C", {C, C, C, C, C, C, C, C, C, C, C, C}},
    {"P-R", {R, R, R, R, R, R, R, R, R, R, R, R}},
    {"P-RC", {R, R, R, R, R, R, C, C, C, C, C, C}},
    {"P-CR", {C, C, C, C, C, C, R, R, R, R, R, R}},
    {"P-3ALT", {C, C, C, R, R, R, C, C, C, R, R, R}},
    {"P-2ALT-R", {R, R, C, C, R, R, C, C, R, R, C, C}},
    {"P-ALT-R", {R, C, R, C, R, C, R, C, R, C, R, C}},
    {"P-ALT-C", {C, R, C, R, C, R, C, R, C, R, C, R}},
    {"P-2ALT-C", {C, C, R, R, C, C, R, R, C, C, R, R}},
}};

}  // namespace

Candidate Candidate::from_bit_string(std::string_view s) {
    if (s.size() != 36) throw std::invalid_argument("Candidate: expected 36 bits");
    Candidate c;
    for (int i = 0; i < 36; ++i) {
        char ch = s[static_cast<size_t>(i)];
        if (ch != '0' && ch != '1') throw std::invalid_argument("Candidate: expected '0'/'1'");
        if (ch == '1') c.set_bit(i, true);
    }
    return c;
}

Candidate Candidate::from_hex(std::string_view s) {
    if (s.size() != 9) throw std::invalid_argument("Candidate: expected 9 hex digits");
    uint64_t v = 0;
    for (char ch : s) {
        int d;
        if (ch >= '0' && ch <= '9')
            d = ch - '0';
        else if (ch >= 'a' && ch <= 'f')
            d = 10 + ch - 'a';
        else if (ch >= 'A' && ch <= 'F')
            d = 10 + ch - 'A';
        else
            throw std::invalid_argument("Candidate: bad hex digit");
        v = (v << 4) | static_cast<uint64_t>(d);
    }
    return Candidate{v};
}

std::string Candidate::to_bit_string() const {
    std::string s(36, '0');
    for (int i = 0; i < 36; ++i)
        if (bit(i)) s[static_cast<size_t>(i)] = '1';
    return s;
}

std::string Candidate::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s(9, '0');
    for (int i = 0; i < 9; ++i)
        s[static_cast<size_t>(i)] = digits[(bits >> (32 - 4 * i)) & 0xF];
    return s;
}

std::span<const BlockPattern> block_patterns() { return k_patterns; }

const BlockPattern& block_pattern(std::string_view name) {
    for (const auto& p : k_patterns)
        if (p.name == name) return p;
    throw std::invalid_argument("block_pattern: unknown pattern " + std::string(name));
}

Block3 make_block(BlockKind kind, bool x, bool y, bool z) {
    auto row = [](bool a, bool b, bool c) {
        return static_cast<uint8_t>((a ? 1 : 0) | (b ? 2 : 0) | (c ? 4 : 0));
    };
    Block3 blk;
    blk.rows[0] = row(x, y, z);
    if (kind == BlockKind::Circ) {
        blk.rows[1] = row(z, x, y);
        blk.rows[2] = row(y, z, x);
    } else {
        blk.rows[1] = row(y, z, x);
        blk.rows[2] = row(z, x, y);
    }
    return blk;
}

std::array<Block3, 12> build_blocks(Candidate c, const BlockPattern& p) {
    std::array<Block3, 12> blocks;
    for (int i = 0; i < 12; ++i)
        blocks[static_cast<size_t>(i)] =
            make_block(p.kinds[static_cast<size_t>(i)], c.bit(3 * i), c.bit(3 * i + 1), c.bit(3 * i + 2));
    return blocks;
}

BitMatrix block_to_matrix(const Block3& b) {
    BitMatrix m(3, 3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (b.get(r, c)) m.set(r, c, true);
    return m;
}

}  // namespace sdforge
