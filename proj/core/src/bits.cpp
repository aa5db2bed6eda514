#include "sdforge/bits.hpp"

namespace sdforge {

BitMatrix mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: inner dimension mismatch");
    BitMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        BitVector acc(b.cols());
        for (int k = 0; k < a.cols(); ++k)
            if (a.get(i, k)) acc ^= b.row(k);
        c.row(i) = acc;
    }
    return c;
}

RankInverse rank_and_inverse(const BitMatrix& a) {
    const int n = a.rows(), m = a.cols();
    BitMatrix work = a;
    BitMatrix inv = BitMatrix::identity(n);  // tracks row ops; meaningful only if square

    int rank = 0;
    for (int col = 0; col < m && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if (work.get(r, col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        work.swap_rows(rank, pivot);
        inv.swap_rows(rank, pivot);
        for (int r = 0; r < n; ++r)
            if (r != rank && work.get(r, col)) {
                work.xor_row_into(rank, r);
                inv.xor_row_into(rank, r);
            }
        ++rank;
    }

    RankInverse out;
    out.rank = rank;
    if (n == m && rank == n) out.inverse = std::move(inv);
    return out;
}

std::optional<BitMatrix> systematic_form(const BitMatrix& g, std::span<const int> pivot_cols) {
    if (static_cast<int>(pivot_cols.size()) != g.rows())
        throw std::invalid_argument("systematic_form: |pivot_cols| must equal row count");
    for (int c : pivot_cols)
        if (c < 0 || c >= g.cols()) throw std::invalid_argument("systematic_form: column out of range");

    BitMatrix work = g;
    int next = 0;
    for (int c : pivot_cols) {
        int pivot = -1;
        for (int r = next; r < work.rows(); ++r)
            if (work.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;  // dependent columns
        work.swap_rows(next, pivot);
        for (int r = 0; r < work.rows(); ++r)
            if (r != next && work.get(r, c)) work.xor_row_into(next, r);
        ++next;
    }
    return work;
}

}  // namespace sdforge
