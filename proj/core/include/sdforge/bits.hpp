#pragma once
// Bit-packed GF(2) vectors and matrices sized for this project: vectors up to
// 128 bits (typical 36 or 72), matrices up to 128 columns. Rows live in 64-bit
// words; weight uses std::popcount (hardware popcnt where the target has it,
// portable fallback otherwise). All values are canonical: bits beyond the
// declared length are always zero, so equality and hashing are word-wise.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sdforge {

class BitVector {
public:
    static constexpr int kMaxBits = 128;

    BitVector() = default;
    explicit BitVector(int len) : len_(checked_len(len)) {}

    static BitVector from_string(std::string_view s) {
        BitVector v(static_cast<int>(s.size()));
        for (int i = 0; i < v.len_; ++i) {
            char c = s[static_cast<size_t>(i)];
            if (c != '0' && c != '1') throw std::invalid_argument("BitVector: expected '0'/'1'");
            if (c == '1') v.set(i, true);
        }
        return v;
    }

    static BitVector unit(int len, int i) {
        BitVector v(len);
        v.set(i, true);
        return v;
    }

    int size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(int i) const { return (w_[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1u; }

    void set(int i, bool v) {
        if (i < 0 || i >= len_) throw std::out_of_range("BitVector::set");
        uint64_t m = uint64_t{1} << (i & 63);
        if (v)
            w_[static_cast<size_t>(i >> 6)] |= m;
        else
            w_[static_cast<size_t>(i >> 6)] &= ~m;
    }

    int weight() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
    bool is_zero() const { return (w_[0] | w_[1]) == 0; }

    uint64_t word(int k) const { return w_[static_cast<size_t>(k)]; }
    void set_word(int k, uint64_t v) {
        w_[static_cast<size_t>(k)] = v;
        mask_tail();
    }

    BitVector& operator^=(const BitVector& o) {
        if (o.len_ != len_) throw std::invalid_argument("BitVector: length mismatch in XOR");
        w_[0] ^= o.w_[0];
        w_[1] ^= o.w_[1];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }
    BitVector& operator&=(const BitVector& o) {
        if (o.len_ != len_) throw std::invalid_argument("BitVector: length mismatch in AND");
        w_[0] &= o.w_[0];
        w_[1] &= o.w_[1];
        return *this;
    }
    friend BitVector operator&(BitVector a, const BitVector& b) {
        a &= b;
        return a;
    }

    friend bool operator==(const BitVector& a, const BitVector& b) = default;

    // Total order: length first, then value with bit 0 treated as least significant.
    friend bool operator<(const BitVector& a, const BitVector& b) {
        if (a.len_ != b.len_) return a.len_ < b.len_;
        if (a.w_[1] != b.w_[1]) return a.w_[1] < b.w_[1];
        return a.w_[0] < b.w_[0];
    }

    // Bits [begin, begin+count) as a new vector.
    BitVector slice(int begin, int count) const {
        if (begin < 0 || count < 0 || begin + count > len_)
            throw std::out_of_range("BitVector::slice");
        BitVector r(count);
        for (int i = 0; i < count; ++i)
            if (get(begin + i)) r.set(i, true);
        return r;
    }

    static BitVector concat(const BitVector& a, const BitVector& b) {
        BitVector r(a.len_ + b.len_);
        for (int i = 0; i < a.len_; ++i)
            if (a.get(i)) r.set(i, true);
        for (int i = 0; i < b.len_; ++i)
            if (b.get(i)) r.set(a.len_ + i, true);
        return r;
    }

    std::string to_string() const {
        std::string s(static_cast<size_t>(len_), '0');
        for (int i = 0; i < len_; ++i)
            if (get(i)) s[static_cast<size_t>(i)] = '1';
        return s;
    }

    size_t hash() const {
        uint64_t h = w_[0] * 0x9e3779b97f4a7c15ull;
        h ^= w_[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<size_t>(h ^ static_cast<uint64_t>(len_));
    }

private:
    static int checked_len(int len) {
        if (len < 0 || len > kMaxBits) throw std::invalid_argument("BitVector: bad length");
        return len;
    }
    void mask_tail() {
        if (len_ < 64) {
            w_[0] &= (len_ == 0) ? 0 : (~uint64_t{0} >> (64 - len_));
            w_[1] = 0;
        } else if (len_ < 128) {
            if (len_ == 64)
                w_[1] = 0;
            else
                w_[1] &= ~uint64_t{0} >> (128 - len_);
        }
    }

    std::array<uint64_t, 2> w_{0, 0};
    int len_ = 0;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : nrows_(rows), ncols_(cols), rows_(static_cast<size_t>(rows), BitVector(cols)) {
        if (rows < 0 || cols < 0 || cols > BitVector::kMaxBits)
            throw std::invalid_argument("BitMatrix: bad shape");
    }

    static BitMatrix identity(int n) {
        BitMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static BitMatrix from_strings(std::span<const std::string_view> rows) {
        BitMatrix m;
        m.nrows_ = static_cast<int>(rows.size());
        m.ncols_ = rows.empty() ? 0 : static_cast<int>(rows.front().size());
        for (auto s : rows) {
            if (static_cast<int>(s.size()) != m.ncols_)
                throw std::invalid_argument("BitMatrix: ragged rows");
            m.rows_.push_back(BitVector::from_string(s));
        }
        return m;
    }
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows) {
        std::vector<std::string_view> v(rows);
        return from_strings(std::span<const std::string_view>(v));
    }

    int rows() const { return nrows_; }
    int cols() const { return ncols_; }

    bool get(int r, int c) const { return rows_[static_cast<size_t>(r)].get(c); }
    void set(int r, int c, bool v) { rows_[static_cast<size_t>(r)].set(c, v); }

    const BitVector& row(int r) const { return rows_[static_cast<size_t>(r)]; }
    BitVector& row(int r) { return rows_[static_cast<size_t>(r)]; }

    void xor_row_into(int src, int dst) { rows_[static_cast<size_t>(dst)] ^= rows_[static_cast<size_t>(src)]; }
    void swap_rows(int a, int b) { std::swap(rows_[static_cast<size_t>(a)], rows_[static_cast<size_t>(b)]); }

    BitMatrix transposed() const {
        BitMatrix t(ncols_, nrows_);
        for (int r = 0; r < nrows_; ++r)
            for (int c = 0; c < ncols_; ++c)
                if (get(r, c)) t.set(c, r, true);
        return t;
    }

    // Columns [begin, begin+count) of every row.
    BitMatrix columns(int begin, int count) const {
        BitMatrix m(nrows_, count);
        for (int r = 0; r < nrows_; ++r) m.rows_[static_cast<size_t>(r)] = row(r).slice(begin, count);
        return m;
    }

    static BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b) {
        if (a.nrows_ != b.nrows_) throw std::invalid_argument("BitMatrix::hconcat: row mismatch");
        BitMatrix m(a.nrows_, a.ncols_ + b.ncols_);
        for (int r = 0; r < a.nrows_; ++r)
            m.rows_[static_cast<size_t>(r)] = BitVector::concat(a.row(r), b.row(r));
        return m;
    }

    bool is_zero() const {
        for (const auto& r : rows_)
            if (!r.is_zero()) return false;
        return true;
    }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

private:
    int nrows_ = 0;
    int ncols_ = 0;
    std::vector<BitVector> rows_;
};

// C = A * B over GF(2). Throws on inner-dimension mismatch.
BitMatrix mul(const BitMatrix& a, const BitMatrix& b);

struct RankInverse {
    int rank = 0;
    std::optional<BitMatrix> inverse;  // present iff input square and full rank
};

// Gaussian elimination; never fails (absent inverse signals singular/non-square).
RankInverse rank_and_inverse(const BitMatrix& a);

// Row-equivalent matrix whose restriction to pivot_cols (ascending) is the
// identity, or nullopt when pivot_cols is not an information set. Requires
// pivot_cols.size() == g.rows(). The row space is unchanged.
std::optional<BitMatrix> systematic_form(const BitMatrix& g, std::span<const int> pivot_cols);

namespace detail {

template <int W>
struct WordAcc {
    std::array<uint64_t, W> w;
    void load(const uint64_t* p) {
        for (int i = 0; i < W; ++i) w[static_cast<size_t>(i)] = p[i];
    }
    void xor_from(const WordAcc& a, const uint64_t* p) {
        for (int i = 0; i < W; ++i) w[static_cast<size_t>(i)] = a.w[static_cast<size_t>(i)] ^ p[i];
    }
    int weight() const {
        int s = 0;
        for (int i = 0; i < W; ++i) s += std::popcount(w[static_cast<size_t>(i)]);
        return s;
    }
};

// Lexicographic enumeration of all row subsets of size `level` whose smallest
// index is `lead`, maintaining a prefix-XOR stack so each visited subset costs
// one row XOR. F: bool(const WordAcc<W>&, int level); false stops the walk.
template <int W, class F>
bool combos_from_lead(const uint64_t* rows, int n, int level, int lead, F&& f) {
    WordAcc<W> prefix[40];
    int idx[40];
    idx[0] = lead;
    prefix[0].load(rows + static_cast<size_t>(lead) * W);
    if (level == 1) return f(prefix[0], 1);
    int j = 1;
    idx[1] = lead;
    while (true) {
        ++idx[j];
        if (idx[j] >= n - (level - 1 - j)) {
            if (--j == 0) return true;
            continue;
        }
        prefix[j].xor_from(prefix[j - 1], rows + static_cast<size_t>(idx[j]) * W);
        if (j == level - 1) {
            if (!f(prefix[j], level)) return false;
        } else {
            ++j;
            idx[j] = idx[j - 1];
        }
    }
}

// Levels 1..max_level in increasing size; within a level, subsets in
// lexicographic index order restricted to leading index in [lead_lo, lead_hi).
template <int W, class F>
bool combos(const uint64_t* rows, int n, int max_level, int lead_lo, int lead_hi, F&& f) {
    for (int level = 1; level <= max_level; ++level)
        for (int lead = lead_lo; lead < lead_hi && lead <= n - level; ++lead)
            if (!combos_from_lead<W, F>(rows, n, level, lead, std::forward<F>(f))) return false;
    return true;
}

}  // namespace detail

// Enumerates every nonempty row subset of size <= max_level exactly once,
// levels in increasing size, lexicographic within a level. The callback gets
// the accumulated XOR of the subset and the subset size; returning false stops
// the enumeration early. The leading-index window makes partitioned parallel
// runs possible: each subset is visited by exactly one window since its
// smallest row index falls in exactly one.
// F: bool(const BitVector& acc, int level)
template <class F>
bool for_each_combination_leading(const BitMatrix& base, int max_level, int lead_lo, int lead_hi,
                                  F&& f) {
    if (max_level < 0 || max_level > base.rows())
        throw std::invalid_argument("for_each_combination: bad max_level");
    const int n = base.rows();
    const int words = base.cols() > 64 ? 2 : 1;
    std::vector<uint64_t> rows(static_cast<size_t>(n) * static_cast<size_t>(words));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < words; ++k)
            rows[static_cast<size_t>(r * words + k)] = base.row(r).word(k);

    BitVector acc(base.cols());
    if (words == 1) {
        return detail::combos<1>(rows.data(), n, max_level, lead_lo, lead_hi,
                                 [&](const detail::WordAcc<1>& a, int level) {
                                     acc.set_word(0, a.w[0]);
                                     return f(static_cast<const BitVector&>(acc), level);
                                 });
    }
    return detail::combos<2>(rows.data(), n, max_level, lead_lo, lead_hi,
                             [&](const detail::WordAcc<2>& a, int level) {
                                 acc.set_word(0, a.w[0]);
                                 acc.set_word(1, a.w[1]);
                                 return f(static_cast<const BitVector&>(acc), level);
                             });
}

template <class F>
bool for_each_combination(const BitMatrix& base, int max_level, F&& f) {
    return for_each_combination_leading(base, max_level, 0, base.rows(), std::forward<F>(f));
}

}  // namespace sdforge
