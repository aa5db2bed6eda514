#include "sdforge/construction.hpp"

#include <stdexcept>

namespace sdforge {

namespace {

int mod6(int x) { return ((x % 6) + 6) % 6; }
int mod3(int x) { return ((x % 3) + 3) % 3; }

ExplicitLayout make_d12_case1() {
    // [[A, B], [B^T, A^T]] with A = CIRC(A1..A6), B = CIRC(A7..A12); the
    // transposes are full 18x18 transposes, so the lower quadrants reverse the
    // block arrangement AND transpose each 3x3 block (Table 1 row C1 pins this
    // reading: without the per-block transposes it yields beta=237, not the
    // published 129). sigma_3 under the case-1 ordering reproduces the block
    // arrangement but never transposes blocks, so this case is assembled from
    // the layout, not the Cayley table.
    ExplicitLayout g{};
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            g[r][c] = {static_cast<uint8_t>(mod6(c - r)), false};
            g[r][c + 6] = {static_cast<uint8_t>(6 + mod6(c - r)), false};
            g[r + 6][c] = {static_cast<uint8_t>(6 + mod6(r - c)), true};
            g[r + 6][c + 6] = {static_cast<uint8_t>(mod6(r - c)), true};
        }
    return g;
}

ExplicitLayout make_d12_case2() {
    // [[A, B], [B, A]] with A = CIRC(A1..A6), B = REVCIRC(A7..A12).
    ExplicitLayout g{};
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            g[r][c] = {static_cast<uint8_t>(mod6(c - r)), false};
            g[r][c + 6] = {static_cast<uint8_t>(6 + mod6(r + c)), false};
            g[r + 6][c] = {static_cast<uint8_t>(6 + mod6(r + c)), false};
            g[r + 6][c + 6] = {static_cast<uint8_t>(mod6(c - r)), false};
        }
    return g;
}

ExplicitLayout make_c12_case1() {
    // [[A, B], [B', A]]: B = CIRC(A7..A12), B' = CIRC(A12, A7..A11).
    ExplicitLayout g{};
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            g[r][c] = {static_cast<uint8_t>(mod6(c - r)), false};
            g[r][c + 6] = {static_cast<uint8_t>(6 + mod6(c - r)), false};
            g[r + 6][c] = {static_cast<uint8_t>(6 + mod6(c - r - 1)), false};
            g[r + 6][c + 6] = {static_cast<uint8_t>(mod6(c - r)), false};
        }
    return g;
}

ExplicitLayout make_c12_case2() {
    // 4x4 grid of 3-block circulants; quadrants below the diagonal use the
    // right-rotated (primed) variants.
    ExplicitLayout g{};
    for (int R = 0; R < 12; ++R)
        for (int C = 0; C < 12; ++C) {
            int q = R / 3, p = C / 3, r = R % 3, c = C % 3;
            int d = ((p - q) % 4 + 4) % 4;
            int idx = (p >= q) ? 3 * d + mod3(c - r) : 3 * d + mod3(c - r - 1);
            g[R][C] = {static_cast<uint8_t>(idx), false};
        }
    return g;
}

ExplicitLayout make_c6xc2() {
    // [[A, B], [B, A]] with A = CIRC(A1..A6), B = CIRC(A7..A12).
    ExplicitLayout g{};
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            g[r][c] = {static_cast<uint8_t>(mod6(c - r)), false};
            g[r][c + 6] = {static_cast<uint8_t>(6 + mod6(c - r)), false};
            g[r + 6][c] = {static_cast<uint8_t>(6 + mod6(c - r)), false};
            g[r + 6][c + 6] = {static_cast<uint8_t>(mod6(c - r)), false};
        }
    return g;
}

ExplicitLayout make_c3xc4() {
    // 4x4 block-circulant of 3-block circulants, all unprimed.
    ExplicitLayout g{};
    for (int R = 0; R < 12; ++R)
        for (int C = 0; C < 12; ++C) {
            int q = R / 3, p = C / 3, r = R % 3, c = C % 3;
            int d = ((p - q) % 4 + 4) % 4;
            g[R][C] = {static_cast<uint8_t>(3 * d + mod3(c - r)), false};
        }
    return g;
}

ExplicitLayout make_a4() {
    // Printed A4 grid with the two row-11/12 misprints corrected (a group
    // matrix carries each coefficient exactly once per row).
    static constexpr uint8_t grid[12][12] = {
        {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12},
        {3, 1, 2, 12, 10, 11, 6, 4, 5, 9, 7, 8},
        {2, 3, 1, 8, 9, 7, 11, 12, 10, 5, 6, 4},
        {4, 5, 6, 1, 2, 3, 10, 11, 12, 7, 8, 9},
        {12, 10, 11, 3, 1, 2, 9, 7, 8, 6, 4, 5},
        {8, 9, 7, 2, 3, 1, 5, 6, 4, 11, 12, 10},
        {7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6},
        {6, 4, 5, 9, 7, 8, 3, 1, 2, 12, 10, 11},
        {11, 12, 10, 5, 6, 4, 2, 3, 1, 8, 9, 7},
        {10, 11, 12, 7, 8, 9, 4, 5, 6, 1, 2, 3},
        {9, 7, 8, 6, 4, 5, 12, 10, 11, 3, 1, 2},
        {5, 6, 4, 11, 12, 10, 8, 9, 7, 2, 3, 1},
    };
    ExplicitLayout g{};
    for (int r = 0; r < 12; ++r)
        for (int c = 0; c < 12; ++c) g[r][c] = {static_cast<uint8_t>(grid[r][c] - 1), false};
    return g;
}

ExplicitLayout make_dic12() {
    // [[A, B], [C, A]]: A = CIRC(A1..A6), B = REVCIRC(A7..A12),
    // C = REVCIRC(A10, A11, A12, A7, A8, A9).
    ExplicitLayout g{};
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            g[r][c] = {static_cast<uint8_t>(mod6(c - r)), false};
            g[r][c + 6] = {static_cast<uint8_t>(6 + mod6(r + c)), false};
            g[r + 6][c] = {static_cast<uint8_t>(6 + mod6(r + c + 3)), false};
            g[r + 6][c + 6] = {static_cast<uint8_t>(mod6(c - r)), false};
        }
    return g;
}

const ExplicitLayout k_layouts[8] = {
    make_d12_case1(), make_d12_case2(), make_c12_case1(), make_c12_case2(),
    make_c6xc2(),     make_c3xc4(),     make_a4(),        make_dic12(),
};

void place_block(BitMatrix& m, int grid_r, int grid_c, const Block3& b) {
    for (int r = 0; r < 3; ++r) {
        uint8_t bits = b.rows[static_cast<size_t>(r)];
        for (int c = 0; c < 3; ++c)
            if ((bits >> c) & 1u) m.set(3 * grid_r + r, 3 * grid_c + c, true);
    }
}

const BlockPattern& pat(std::string_view name) { return block_pattern(name); }

const std::vector<Construction>& registry_storage() {
    static const std::vector<Construction> reg = {
        {"G1.1", GroupCase::D12Case1, &pat("P-CR"), Assembly::Explicit},
        {"G1.2", GroupCase::D12Case1, &pat("P-R"), Assembly::Explicit},
        {"G2.1", GroupCase::D12Case2, &pat("P-3ALT"), Assembly::Cayley},
        {"G2.2", GroupCase::D12Case2, &pat("P-2ALT-R"), Assembly::Cayley},
        {"G2.3", GroupCase::D12Case2, &pat("P-RC"), Assembly::Cayley},
        {"G2.4", GroupCase::D12Case2, &pat("P-ALT-R"), Assembly::Cayley},
        {"G2.5", GroupCase::D12Case2, &pat("P-ALT-C"), Assembly::Cayley},
        {"G2.6", GroupCase::D12Case2, &pat("P-2ALT-C"), Assembly::Cayley},
        {"G3.1", GroupCase::C12Case1, &pat("P-C"), Assembly::Cayley},
        {"G3.2", GroupCase::C12Case1, &pat("P-R"), Assembly::Cayley},
        {"G3.3", GroupCase::C12Case1, &pat("P-RC"), Assembly::Cayley},
        {"G3.4", GroupCase::C12Case1, &pat("P-CR"), Assembly::Cayley},
        {"G4.1", GroupCase::C12Case2, &pat("P-3ALT"), Assembly::Cayley},
        {"G4.2", GroupCase::C12Case2, &pat("P-R"), Assembly::Cayley},
        {"G4.3", GroupCase::C12Case2, &pat("P-C"), Assembly::Cayley},
        {"G5.1", GroupCase::C6xC2, &pat("P-CR"), Assembly::Cayley},
        {"G5.2", GroupCase::C6xC2, &pat("P-3ALT"), Assembly::Cayley},
        {"G5.3", GroupCase::C6xC2, &pat("P-RC"), Assembly::Cayley},
        {"G6.1", GroupCase::C3xC4, &pat("P-ALT-C"), Assembly::Cayley},
        {"G6.2", GroupCase::C3xC4, &pat("P-2ALT-R"), Assembly::Cayley},
        {"G7.1", GroupCase::A4, &pat("P-3ALT"), Assembly::Cayley},
        {"G7.2", GroupCase::A4, &pat("P-2ALT-C"), Assembly::Cayley},
        {"G7.3", GroupCase::A4, &pat("P-ALT-C"), Assembly::Cayley},
        {"G7.4", GroupCase::A4, &pat("P-2ALT-R"), Assembly::Cayley},
        {"G7.5", GroupCase::A4, &pat("P-RC"), Assembly::Cayley},
        {"G8.1", GroupCase::Dic12, &pat("P-R"), Assembly::Explicit},
        {"G8.2", GroupCase::Dic12, &pat("P-RC"), Assembly::Explicit},
        {"G8.3", GroupCase::Dic12, &pat("P-2ALT-C"), Assembly::Explicit},
    };
    return reg;
}

}  // namespace

const ExplicitLayout& explicit_layout(GroupCase g) {
    return k_layouts[static_cast<size_t>(g)];
}

BitMatrix cayley_block_matrix(const GroupSpec& g, std::span<const Block3, 12> blocks) {
    BitMatrix m(36, 36);
    for (int i = 0; i < 12; ++i) {
        int inv_i = g.inv(i);
        for (int j = 0; j < 12; ++j)
            place_block(m, i, j, blocks[g.mul(inv_i, j)]);
    }
    return m;
}

BitMatrix explicit_block_matrix(GroupCase g, std::span<const Block3, 12> blocks) {
    const ExplicitLayout& layout = explicit_layout(g);
    BitMatrix m(36, 36);
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) {
            const ExplicitCell& cell = layout[static_cast<size_t>(i)][static_cast<size_t>(j)];
            const Block3& b = blocks[cell.block];
            place_block(m, i, j, cell.transpose ? b.transposed() : b);
        }
    return m;
}

BitMatrix Construction::group_matrix(Candidate c) const {
    std::array<Block3, 12> blocks = build_blocks(c, *pattern);
    if (assembly == Assembly::Explicit) return explicit_block_matrix(group, blocks);
    return cayley_block_matrix(group_spec(group), blocks);
}

BitMatrix Construction::generator(Candidate c) const {
    return BitMatrix::hconcat(BitMatrix::identity(36), group_matrix(c));
}

std::span<const Construction> construction_registry() { return registry_storage(); }

const Construction& find_construction(std::string_view id) {
    for (const auto& k : registry_storage())
        if (k.id == id) return k;
    throw std::invalid_argument("unknown construction id: " + std::string(id));
}

}  // namespace sdforge
