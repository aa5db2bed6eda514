#pragma once
// Certification of [I_k | A] generator matrices: self-duality, Type I/II,
// exact minimum distance and low-weight counts via two-information-set
// enumeration, and the weight-enumerator parameters gamma/beta (Type I) or
// alpha (Type II) of the [72,36,12] families.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "sdforge/bits.hpp"

namespace sdforge {

enum class EnumeratorFamily : uint8_t { W72_1, W72_2, TypeII };

std::string_view family_name(EnumeratorFamily f);
EnumeratorFamily family_from_name(std::string_view s);

struct NotExtremalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FamilyInconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CodeReport {
    std::string construction;  // empty when analyzed from a bare matrix
    std::string candidate_hex;
    bool self_dual = false;
    int min_distance = 0;
    bool doubly_even = false;
    std::map<int, uint64_t> counts;  // A_w for even w up to the counted bound
    std::optional<EnumeratorFamily> family;
    std::optional<int64_t> gamma, beta, alpha;
};

std::string to_json(const CodeReport& r);

// True iff the code generated by g = [I | A] is self-dual. Computes both
// A*A^T == I and (G*G^T == 0 and rank(G) == k) and insists they agree.
// Throws std::invalid_argument if g is not of [I | A] shape.
bool is_self_dual(const BitMatrix& g);

// A*A^T == I for square a; the cheap half of the self-duality criterion.
bool is_orthogonal(const BitMatrix& a);

// True iff every row weight of g is divisible by 4 (with self-orthogonality
// this makes every codeword weight divisible by 4). Pre: is_self_dual(g).
bool classify_doubly_even(const BitMatrix& g);

// Exact minimum nonzero codeword weight. Enumerates row combinations of
// increasing size over both systematic forms (pivots = left half, pivots =
// right half); after finishing size s every unseen codeword weighs at least
// 2(s+1), so the scan stops once the best seen weight reaches that bound.
// Pre: is_self_dual(g).
int min_distance(const BitMatrix& g, int threads = 1);

// Exact A_w for every even w <= min(w_max, n). A weight-w codeword has at
// most floor(w/2) support on one of the two information sets, so counting
// set-1 combinations with level <= floor(w/2) and set-2 combinations with
// level <= ceil(w/2)-1 partitions the weight-w words. Pre: is_self_dual(g);
// w_max in {12, 14, 16}.
std::map<int, uint64_t> count_low_weights(const BitMatrix& g, int w_max, int threads = 1);

struct FamilyParams {
    EnumeratorFamily family;
    std::optional<int64_t> gamma, beta, alpha;
};

// Inverts the weight-enumerator formulas: Type II -> alpha = A12 - 4398;
// Type I -> beta = A12/2 and gamma from A14 under W72_1 (8640 - 64*gamma) or
// W72_2 (7616 - 64*gamma). The two gamma candidates differ by exactly 16 and
// can both be integral, so A16 settles the family when supplied (the A16
// formulas differ by 4096 for equal counts). Throws FamilyInconsistencyError
// when nothing fits.
FamilyParams family_params(bool doubly_even, int64_t a12, int64_t a14,
                           std::optional<int64_t> a16 = std::nullopt);

// Full report for a [72,36,12] self-dual code. Throws NotExtremalError when
// d != 12, FamilyInconsistencyError when no family fits the counts.
CodeReport extract_params(const BitMatrix& g, bool with_a16 = false, int threads = 1);

enum class SelfDualType : uint8_t { I, II };

// Upper bound on the minimum distance of a self-dual code of even length n:
// Type II: 4*floor(n/24) + 4; Type I: the same except n = 22 (mod 24), where
// the bound is 4*floor(n/24) + 6.
int extremal_bound(int n, SelfDualType type);

// Text format used by the analyze subcommand: 36 lines of 72 '0'/'1' chars.
BitMatrix read_generator_text(std::istream& in);
void write_generator_text(const BitMatrix& g, std::ostream& out);

namespace detail {

// Interleaved scan of both information sets, levels 1..max_level, aborting as
// soon as a codeword weight below abort_below shows up. set1/set2 are the
// non-pivot halves of the two systematic forms, one 64-bit word per row.
struct PartialMinResult {
    int min_weight;  // smallest weight seen (INT_MAX if none)
    bool completed;  // false when the abort threshold fired
};
PartialMinResult partial_min_weight(std::span<const uint64_t> set1, std::span<const uint64_t> set2,
                                    int n, int max_level, int abort_below);

// set1 = A row words, set2 = non-pivot half of the right-half systematic form.
struct TwoSetBases {
    std::vector<uint64_t> set1, set2;
    int k = 0;
};
TwoSetBases two_set_bases(const BitMatrix& g);

}  // namespace detail

}  // namespace sdforge
