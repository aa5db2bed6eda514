#pragma once
// Shared helpers for tests: random orthogonal matrices over GF(2) (producing
// random self-dual [2k,k] codes as [I|A]) and a naive full-enumeration oracle
// kept deliberately independent of the library's packed-word paths.

#include <map>
#include <random>
#include <vector>

#include "sdforge/bits.hpp"

namespace sdforge::testing {

// I + u^T u is orthogonal when u has even weight; products of such
// transvections and a random permutation cover a healthy slice of O(k, F2).
inline BitMatrix random_orthogonal(int k, std::mt19937_64& rng) {
    BitMatrix a(k, k);
    std::vector<int> perm(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) perm[static_cast<size_t>(i)] = i;
    for (int i = k - 1; i > 0; --i)
        std::swap(perm[static_cast<size_t>(i)], perm[rng() % static_cast<uint64_t>(i + 1)]);
    for (int i = 0; i < k; ++i) a.set(i, perm[static_cast<size_t>(i)], true);

    int rounds = 2 * k;
    for (int t = 0; t < rounds; ++t) {
        BitVector u(k);
        do {
            for (int i = 0; i < k; ++i) u.set(i, rng() & 1);
            if (u.weight() % 2 != 0) u.set(0, !u.get(0));
        } while (u.is_zero());
        BitMatrix m = BitMatrix::identity(k);
        for (int r = 0; r < k; ++r)
            if (u.get(r)) m.row(r) ^= u;  // I + u^T u
        a = mul(a, m);
    }
    return a;
}

struct FullEnumeration {
    int min_weight = 0;
    std::map<int, uint64_t> counts;  // weight -> count over all nonzero codewords
};

// Enumerates all 2^k - 1 nonzero codewords of [I|A] entry by entry.
inline FullEnumeration enumerate_code(const BitMatrix& g) {
    const int k = g.rows(), n = g.cols();
    FullEnumeration out;
    out.min_weight = n + 1;
    for (uint64_t mask = 1; mask < (uint64_t{1} << k); ++mask) {
        std::vector<int> word(static_cast<size_t>(n), 0);
        for (int r = 0; r < k; ++r)
            if ((mask >> r) & 1)
                for (int c = 0; c < n; ++c) word[static_cast<size_t>(c)] ^= g.get(r, c) ? 1 : 0;
        int w = 0;
        for (int c = 0; c < n; ++c) w += word[static_cast<size_t>(c)];
        ++out.counts[w];
        if (w < out.min_weight) out.min_weight = w;
    }
    return out;
}

}  // namespace sdforge::testing
