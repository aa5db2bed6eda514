#include "sdforge/groups.hpp"

#include <stdexcept>

// Tables generated offline from the group presentations; the construction
// cross-check tests validate them against the explicit block layouts.

namespace sdforge {
namespace {

constexpr GroupSpec k_d12_case1 = {
    "D12",
    "1, b^5, b^4, b^3, b^2, b, a, ab, ab^2, ab^3, ab^4, ab^5  (b^6=a^2=1, ab=b^-1 a)",
    {{"1", "b5", "b4", "b3", "b2", "b", "a", "ab", "ab2", "ab3", "ab4", "ab5"}},
    {{
        {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
        {{1, 2, 3, 4, 5, 0, 7, 8, 9, 10, 11, 6}},
        {{2, 3, 4, 5, 0, 1, 8, 9, 10, 11, 6, 7}},
        {{3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8}},
        {{4, 5, 0, 1, 2, 3, 10, 11, 6, 7, 8, 9}},
        {{5, 0, 1, 2, 3, 4, 11, 6, 7, 8, 9, 10}},
        {{6, 11, 10, 9, 8, 7, 0, 5, 4, 3, 2, 1}},
        {{7, 6, 11, 10, 9, 8, 1, 0, 5, 4, 3, 2}},
        {{8, 7, 6, 11, 10, 9, 2, 1, 0, 5, 4, 3}},
        {{9, 8, 7, 6, 11, 10, 3, 2, 1, 0, 5, 4}},
        {{10, 9, 8, 7, 6, 11, 4, 3, 2, 1, 0, 5}},
        {{11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0}},
    }},
    {{0, 5, 4, 3, 2, 1, 6, 7, 8, 9, 10, 11}},
};

constexpr GroupSpec k_d12_case2 = {
    "D12",
    "1, b, b^2, b^3, b^4, b^5, a, ab, ab^2, ab^3, ab^4, ab^5  (b^6=a^2=1, ab=b^-1 a)",
    {{"1", "b", "b2", "b3", "b4", "b5", "a", "ab", "ab2", "ab3", "ab4", "ab5"}},
    {{
        {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
        {{1, 2, 3, 4, 5, 0, 11, 6, 7, 8, 9, 10}},
        {{2, 3, 4, 5, 0, 1, 10, 11, 6, 7, 8, 9}},
        {{3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8}},
        {{4, 5, 0, 1, 2, 3, 8, 9, 10, 11, 6, 7}},
        {{5, 0, 1, 2, 3, 4, 7, 8, 9, 10, 11, 6}},
        {{6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5}},
        {{7, 8, 9, 10, 11, 6, 5, 0, 1, 2, 3, 4}},
        {{8, 9, 10, 11, 6, 7, 4, 5, 0, 1, 2, 3}},
        {{9, 10, 11, 6, 7, 8, 3, 4, 5, 0, 1, 2}},
        {{10, 11, 6, 7, 8, 9, 2, 3, 4, 5, 0, 1}},
        {{11, 6, 7, 8, 9, 10, 1, 2, 3, 4, 5, 0}},
    }},
    {{0, 5, 4, 3, 2, 1, 6, 7, 8, 9, 10, 11}},
};

constexpr GroupSpec k_c12_case1 = {
    "C12",
    "1, g^2, g^4, g^6, g^8, g^10, g, g^3, g^5, g^7, g^9, g^11",
    {{"1", "g2", "g4", "g6", "g8", "g10", "g", "g3", "g5", "g7", "g9", "g11"}},
    {{
        {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
        {{1, 2, 3, 4, 5, 0, 7, 8, 9, 10, 11, 6}},
        {{2, 3, 4, 5, 0, 1, 8, 9, 10, 11, 6, 7}},
        {{3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8}},
        {{4, 5, 0, 1, 2, 3, 10, 11, 6, 7, 8, 9}},
        {{5, 0, 1, 2, 3, 4, 11, 6, 7, 8, 9, 10}},
        {{6, 7, 8, 9, 10, 11, 1, 2, 3, 4, 5, 0}},
        {{7, 8, 9, 10, 11, 6, 2, 3, 4, 5, 0, 1}},
        {{8, 9, 10, 11, 6, 7, 3, 4, 5, 0, 1, 2}},
        {{9, 10, 11, 6, 7, 8, 4, 5, 0, 1, 2, 3}},
        {{10, 11, 6, 7, 8, 9, 5, 0, 1, 2, 3, 4}},
        {{11, 6, 7, 8, 9, 10, 0, 1, 2, 3, 4, 5}},
    }},
    {{0, 5, 4, 3, 2, 1, 11, 10, 9, 8, 7, 6}},
};

constexpr GroupSpec k_c12_case2 = {
    "C12",
    "1, g^4, g^8, g, g^5, g^9, g^2, g^6, g^10, g^3, g^7, g^11",
    {{"1", "g4", "g8", "g", "g5", "g9", "g2", "g6", "g10", "g3", "g7", "g11"}},
    {{
        {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
        {{1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9}},
        {{2, 0, 1, 5, 3, 4, 8, 6, 7, 11, 9, 10}},
        {{3, 4, 5, 6, 7, 8, 9, 10, 11, 1, 2, 0}},
        {{4, 5, 3, 7, 8, 6, 10, 11, 9, 2, 0, 1}},
        {{5, 3, 4, 8, 6, 7, 11, 9, 10, 0, 1, 2}},
        {{6, 7, 8, 9, 10, 11, 1, 2, 0, 4, 5, 3}},
        {{7, 8, 6, 10, 11, 9, 2, 0, 1, 5, 3, 4}},
        {{8, 6, 7, 11, 9, 10, 0, 1, 2, 3, 4, 5}},
        {{9, 10, 11, 1, 2, 0, 4, 5, 3, 7, 8, 6}},
        {{10, 11, 9, 2, 0, 1, 5, 3, 4, 8, 6, 7}},
        {{11, 9, 10, 0, 1, 2, 3, 4, 5, 6, 7, 8}},
    }},
    {{0, 2, 1, 11, 10, 9, 8, 7, 6, 5, 4, 3}},
};

constexpr GroupSpec k_c6xc2 = {
    "C6xC2",
    "(h^t, 1) for t = 0..5, then (h^t, k)",
    {{"(1,1)", "(h,1)", "(h2,1)", "(h3,1)", "(h4,1)", "(h5,1)",
      "(1,k)", "(h,k)", "(h2,k)", "(h3,k)", "(h4,k)", "(h5,k)"}},
    {{
        {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
        {{1, 2, 3, 4, 5, 0, 7, 8, 9, 10, 11, 6}},
        {{2, 3, 4, 5, 0, 1, 8, 9, 10, 11, 6, 7}},
        {{3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8}},
        {{4, 5, 0, 1, 2, 3, 10, 11, 6, 7, 8, 9}},
        {{5, 0, 1, 2, 3, 4, 11, 6, 7, 8, 9, 10}},
        {{6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5}},
        {{7, 8, 9, 10, 11, 6, 1, 2, 3, 4, 5, 0}},
        {{8, 9, 10, 11, 6, 7, 2, 3, 4, 5, 0, 1}},
        {{9, 10, 11, 6, 7, 8, 3, 4, 5, 0, 1, 2}},
        {{10, 11, 6, 7, 8, 9, 4, 5, 0, 1, 2, 3}},
        {{11, 6, 7, 8, 9, 10, 5, 0, 1, 2, 3, 4}},
    }},
    {{0, 5, 4, 3, 2, 1, 6, 11, 10, 9, 8, 7}},
};

constexpr GroupSpec k_c3xc4 = {
    "C3xC4",
    "(t^r, f^q) at position 3q+r, q = 0..3, r = 0..2",
    {{"(1,1)", "(t,1)", "(t2,1)", "(1,f)", "(t,f)", "(t2,f)",
      "(1,f2)", "(t,f2)", "(t2,f2)", "(1,f3)", "(t,f3)", "(t2,f3)"}},
    {{
        {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
        {{1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9}},
        {{2, 0, 1, 5, 3, 4, 8, 6, 7, 11, 9, 10}},
        {{3, 4, 5, 6, 7, 8, 9, 10, 11, 0, 1, 2}},
        {{4, 5, 3, 7, 8, 6, 10, 11, 9, 1, 2, 0}},
        {{5, 3, 4, 8, 6, 7, 11, 9, 10, 2, 0, 1}},
        {{6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5}},
        {{7, 8, 6, 10, 11, 9, 1, 2, 0, 4, 5, 3}},
        {{8, 6, 7, 11, 9, 10, 2, 0, 1, 5, 3, 4}},
        {{9, 10, 11, 0, 1, 2, 3, 4, 5, 6, 7, 8}},
        {{10, 11, 9, 1, 2, 0, 4, 5, 3, 7, 8, 6}},
        {{11, 9, 10, 2, 0, 1, 5, 3, 4, 8, 6, 7}},
    }},
    {{0, 2, 1, 9, 11, 10, 6, 8, 7, 3, 5, 4}},
};

constexpr GroupSpec k_a4 = {
    "A4",
    "e, c, c^2, x, xc, xc^2, y, yc, yc^2, z, zc, zc^2 with c=(123), x=(12)(34), y=(14)(23), z=(13)(24)",
    {{"e", "c", "c2", "x", "xc", "xc2", "y", "yc", "yc2", "z", "zc", "zc2"}},
    {{
        {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
        {{1, 2, 0, 7, 8, 6, 10, 11, 9, 4, 5, 3}},
        {{2, 0, 1, 11, 9, 10, 5, 3, 4, 8, 6, 7}},
        {{3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8}},
        {{4, 5, 3, 10, 11, 9, 7, 8, 6, 1, 2, 0}},
        {{5, 3, 4, 8, 6, 7, 2, 0, 1, 11, 9, 10}},
        {{6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5}},
        {{7, 8, 6, 1, 2, 0, 4, 5, 3, 10, 11, 9}},
        {{8, 6, 7, 5, 3, 4, 11, 9, 10, 2, 0, 1}},
        {{9, 10, 11, 6, 7, 8, 3, 4, 5, 0, 1, 2}},
        {{10, 11, 9, 4, 5, 3, 1, 2, 0, 7, 8, 6}},
        {{11, 9, 10, 2, 0, 1, 8, 6, 7, 5, 3, 4}},
    }},
    {{0, 2, 1, 3, 11, 7, 6, 5, 10, 9, 8, 4}},
};

constexpr GroupSpec k_dic12 = {
    "Dic12",
    "1, x, x^2, x^3, x^4, x^5, y, yx, yx^2, yx^3, yx^4, yx^5  (x^6=1, y^2=x^3, x^y=x^-1)",
    {{"1", "x", "x2", "x3", "x4", "x5", "y", "yx", "yx2", "yx3", "yx4", "yx5"}},
    {{
        {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
        {{1, 2, 3, 4, 5, 0, 11, 6, 7, 8, 9, 10}},
        {{2, 3, 4, 5, 0, 1, 10, 11, 6, 7, 8, 9}},
        {{3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8}},
        {{4, 5, 0, 1, 2, 3, 8, 9, 10, 11, 6, 7}},
        {{5, 0, 1, 2, 3, 4, 7, 8, 9, 10, 11, 6}},
        {{6, 7, 8, 9, 10, 11, 3, 4, 5, 0, 1, 2}},
        {{7, 8, 9, 10, 11, 6, 2, 3, 4, 5, 0, 1}},
        {{8, 9, 10, 11, 6, 7, 1, 2, 3, 4, 5, 0}},
        {{9, 10, 11, 6, 7, 8, 0, 1, 2, 3, 4, 5}},
        {{10, 11, 6, 7, 8, 9, 5, 0, 1, 2, 3, 4}},
        {{11, 6, 7, 8, 9, 10, 4, 5, 0, 1, 2, 3}},
    }},
    {{0, 5, 4, 3, 2, 1, 9, 10, 11, 6, 7, 8}},
};

}  // namespace

bool GroupSpec::is_latin_square() const {
    for (int i = 0; i < 12; ++i) {
        uint16_t row_mask = 0, col_mask = 0;
        for (int j = 0; j < 12; ++j) {
            row_mask |= uint16_t(1) << mul(i, j);
            col_mask |= uint16_t(1) << mul(j, i);
        }
        if (row_mask != 0x0FFF || col_mask != 0x0FFF) return false;
    }
    return true;
}

bool GroupSpec::inverses_consistent() const {
    for (int i = 0; i < 12; ++i) {
        if (mul(0, i) != i || mul(i, 0) != i) return false;
        if (mul(inv(i), i) != 0 || mul(i, inv(i)) != 0) return false;
    }
    return true;
}

const GroupSpec& group_spec(GroupCase g) {
    switch (g) {
        case GroupCase::D12Case1: return k_d12_case1;
        case GroupCase::D12Case2: return k_d12_case2;
        case GroupCase::C12Case1: return k_c12_case1;
        case GroupCase::C12Case2: return k_c12_case2;
        case GroupCase::C6xC2: return k_c6xc2;
        case GroupCase::C3xC4: return k_c3xc4;
        case GroupCase::A4: return k_a4;
        case GroupCase::Dic12: return k_dic12;
    }
    throw std::invalid_argument("group_spec: unknown case");
}

std::string_view group_case_name(GroupCase g) {
    switch (g) {
        case GroupCase::D12Case1: return "D12-case1";
        case GroupCase::D12Case2: return "D12-case2";
        case GroupCase::C12Case1: return "C12-case1";
        case GroupCase::C12Case2: return "C12-case2";
        case GroupCase::C6xC2: return "C6xC2";
        case GroupCase::C3xC4: return "C3xC4";
        case GroupCase::A4: return "A4";
        case GroupCase::Dic12: return "Dic12";
    }
    return "?";
}

}  // namespace sdforge
