#pragma once
// The 36-bit search-space element and the nine block patterns that turn it
// into twelve 3x3 circulant/reverse-circulant blocks.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "sdforge/bits.hpp"
#include "sdforge/rng.hpp"

namespace sdforge {

// a1..a36 packed big-endian: a1 is the most significant of the 36 bits, so the
// 9-digit hex form reads in the same order as the paper's r-vectors.
struct Candidate {
    uint64_t bits = 0;

    bool bit(int i) const { return (bits >> (35 - i)) & 1u; }  // i = 0..35 <-> a_{i+1}
    void set_bit(int i, bool v) {
        uint64_t m = uint64_t{1} << (35 - i);
        bits = v ? (bits | m) : (bits & ~m);
    }

    static Candidate from_bits(uint64_t raw) { return Candidate{raw & ((uint64_t{1} << 36) - 1)}; }
    static Candidate from_bit_string(std::string_view s);  // 36 chars of '0'/'1', a1 first
    static Candidate from_hex(std::string_view s);         // 9 hex digits
    static Candidate random(Rng& rng) { return Candidate{rng.bits36()}; }

    std::string to_bit_string() const;
    std::string to_hex() const;

    friend bool operator==(const Candidate&, const Candidate&) = default;
    friend auto operator<=>(const Candidate&, const Candidate&) = default;
};

enum class BlockKind : uint8_t { Circ, Revcirc };

struct BlockPattern {
    std::string_view name;
    std::array<BlockKind, 12> kinds;
};

// The nine named patterns of the block equations. Order matches the registry
// documentation, not the paper's equation numbering.
std::span<const BlockPattern> block_patterns();
const BlockPattern& block_pattern(std::string_view name);

// A 3x3 GF(2) block; row r is the low 3 bits of rows[r].
struct Block3 {
    std::array<uint8_t, 3> rows{0, 0, 0};

    bool get(int r, int c) const { return (rows[static_cast<size_t>(r)] >> c) & 1u; }
    Block3 transposed() const {
        Block3 t;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                if (get(r, c)) t.rows[static_cast<size_t>(c)] |= uint8_t(1u << r);
        return t;
    }
    friend bool operator==(const Block3&, const Block3&) = default;
};

// circ(x,y,z): rows (x,y,z),(z,x,y),(y,z,x); revcirc: rows (x,y,z),(y,z,x),(z,x,y).
Block3 make_block(BlockKind kind, bool x, bool y, bool z);

// Block i (0-based) from the candidate triple (a_{3i+1}, a_{3i+2}, a_{3i+3}).
std::array<Block3, 12> build_blocks(Candidate c, const BlockPattern& p);

BitMatrix block_to_matrix(const Block3& b);

}  // namespace sdforge
