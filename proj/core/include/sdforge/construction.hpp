#pragma once
// The 28 registered generator-matrix constructions: each pairs one of the
// eight group cases with a block pattern and assembles a 36x36 group matrix
// from a 36-bit candidate, either generically from the group's Cayley table
// or through the case's explicit block layout. Both assembly routes are
// exposed so they can be cross-checked; constructions are built through their
// authoritative route.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdforge/bits.hpp"
#include "sdforge/blocks.hpp"
#include "sdforge/groups.hpp"

namespace sdforge {

enum class Assembly : uint8_t { Cayley, Explicit };

struct ExplicitCell {
    uint8_t block;   // 0..11
    bool transpose;  // apply 3x3 transpose to the placed block
};
using ExplicitLayout = std::array<std::array<ExplicitCell, 12>, 12>;

// The case's 12x12 grid of block placements (the paper's printed form, with
// the A4 rows-11/12 misprints corrected).
const ExplicitLayout& explicit_layout(GroupCase g);

// sigma_3: grid cell (i,j) holds blocks[cayley(inverse[i], j)].
BitMatrix cayley_block_matrix(const GroupSpec& g, std::span<const Block3, 12> blocks);
BitMatrix explicit_block_matrix(GroupCase g, std::span<const Block3, 12> blocks);

struct Construction {
    std::string_view id;  // "G1.1" .. "G8.3"
    GroupCase group;
    const BlockPattern* pattern;
    Assembly assembly;

    // 36x36 group matrix for the candidate, via the authoritative assembly.
    BitMatrix group_matrix(Candidate c) const;
    // [I_36 | group_matrix(c)], 36x72.
    BitMatrix generator(Candidate c) const;
};

std::span<const Construction> construction_registry();  // exactly 28 entries
const Construction& find_construction(std::string_view id);  // throws on unknown id

}  // namespace sdforge
