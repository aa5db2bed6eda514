#pragma once
// The eight order-12 group cases behind the construction registry. Tables are
// hard-coded data: element labels in the documented ordering (element 0 is the
// identity), the 12x12 Cayley index table, and per-element inverses.

#include <array>
#include <cstdint>
#include <string_view>

namespace sdforge {

enum class GroupCase : uint8_t {
    D12Case1,
    D12Case2,
    C12Case1,
    C12Case2,
    C6xC2,
    C3xC4,
    A4,
    Dic12,
};

inline constexpr std::array<GroupCase, 8> kAllGroupCases = {
    GroupCase::D12Case1, GroupCase::D12Case2, GroupCase::C12Case1, GroupCase::C12Case2,
    GroupCase::C6xC2,    GroupCase::C3xC4,    GroupCase::A4,       GroupCase::Dic12,
};

struct GroupSpec {
    std::string_view name;
    std::string_view ordering;  // human-readable element-ordering note
    std::array<std::string_view, 12> elements;
    std::array<std::array<uint8_t, 12>, 12> cayley;  // cayley[i][j] = index of g_i * g_j
    std::array<uint8_t, 12> inverse;

    uint8_t mul(int i, int j) const { return cayley[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    uint8_t inv(int i) const { return inverse[static_cast<size_t>(i)]; }

    bool is_latin_square() const;
    bool inverses_consistent() const;  // cayley(inverse[i], i) == identity, element 0 identity
};

const GroupSpec& group_spec(GroupCase g);
std::string_view group_case_name(GroupCase g);

}  // namespace sdforge
