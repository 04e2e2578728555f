#pragma once

// Exact arithmetic shared by every ring in the library: bit-packed linear
// algebra over F_2, a small Z/4 module solver, and binomial residues.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cfgcoh {

/// Dense matrix over F_2 with each row stored as packed 64-bit words.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_(word_count(cols)),
          data_(static_cast<std::size_t>(rows) * word_count(cols), 0)
    {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("F2Matrix: negative dimension");
    }

    static F2Matrix identity(int n)
    {
        F2Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.set(i, i, true);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const
    {
        return (row_ptr(r)[c >> 6] >> (c & 63)) & 1u;
    }
    void set(int r, int c, bool v)
    {
        auto& w = row_ptr(r)[c >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        w = v ? (w | bit) : (w & ~bit);
    }
    void flip(int r, int c) { row_ptr(r)[c >> 6] ^= std::uint64_t{1} << (c & 63); }

    /// row(dst) += row(src)
    void add_row(int dst, int src)
    {
        auto* d = row_ptr(dst);
        const auto* s = row_ptr(src);
        for (int w = 0; w < words_; ++w)
            d[w] ^= s[w];
    }
    void swap_rows(int a, int b)
    {
        if (a == b)
            return;
        std::swap_ranges(row_ptr(a), row_ptr(a) + words_, row_ptr(b));
    }
    bool row_is_zero(int r) const
    {
        const auto* p = row_ptr(r);
        return std::all_of(p, p + words_, [](std::uint64_t w) { return w == 0; });
    }

    F2Matrix transpose() const
    {
        F2Matrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (get(r, c))
                    t.set(c, r, true);
        return t;
    }

    /// Appends a row given by the set of its nonzero column indices.
    void append_row(const std::vector<int>& support)
    {
        data_.resize(data_.size() + static_cast<std::size_t>(words_), 0);
        ++rows_;
        for (int c : support)
            flip(rows_ - 1, c);
    }

    friend bool operator==(const F2Matrix& a, const F2Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    static int word_count(int cols) { return cols <= 0 ? 0 : (cols + 63) / 64; }
    std::uint64_t* row_ptr(int r) { return data_.data() + static_cast<std::size_t>(r) * words_; }
    const std::uint64_t* row_ptr(int r) const
    {
        return data_.data() + static_cast<std::size_t>(r) * words_;
    }

    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> data_;
};

struct RowReduction {
    int rank = 0;
    std::vector<int> pivot_columns;
    F2Matrix reduced;
};

/// Gauss-Jordan elimination to reduced row-echelon form.
inline RowReduction row_reduce(F2Matrix m)
{
    RowReduction out;
    int pivot_row = 0;
    for (int c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        int found = -1;
        for (int r = pivot_row; r < m.rows(); ++r)
            if (m.get(r, c)) {
                found = r;
                break;
            }
        if (found < 0)
            continue;
        m.swap_rows(pivot_row, found);
        for (int r = 0; r < m.rows(); ++r)
            if (r != pivot_row && m.get(r, c))
                m.add_row(r, pivot_row);
        out.pivot_columns.push_back(c);
        ++pivot_row;
    }
    out.rank = pivot_row;
    out.reduced = std::move(m);
    return out;
}

inline int f2_rank(const F2Matrix& m) { return row_reduce(m).rank; }

/// Coefficient of a torsion monomial: modulus 2 or 4, or 0 for an unrestricted integer.
struct Residue {
    std::int64_t value = 0;
    int modulus = 0;

    static Residue make(std::int64_t v, int modulus)
    {
        if (modulus != 0 && modulus != 2 && modulus != 4)
            throw std::invalid_argument("Residue: modulus must be 0, 2 or 4");
        if (modulus != 0) {
            v %= modulus;
            if (v < 0)
                v += modulus;
        }
        return Residue{v, modulus};
    }
    bool is_zero() const { return value == 0; }
    friend bool operator==(const Residue&, const Residue&) = default;
};

/// C(n,k) mod 2 by Lucas: odd iff the binary digits of k are dominated by those of n.
constexpr int binom_mod2(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    return (static_cast<std::uint64_t>(k) & ~static_cast<std::uint64_t>(n)) == 0 ? 1 : 0;
}

/// Exact C(n,k) as a big integer; zero outside 0 <= k <= n.
inline boost::multiprecision::cpp_int binom_exact(std::int64_t n, std::int64_t k)
{
    using boost::multiprecision::cpp_int;
    if (n < 0 || k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    cpp_int acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    return acc;
}

inline Residue binom_mod4(std::int64_t n, std::int64_t k)
{
    const auto r = binom_exact(n, k) % 4;
    return Residue::make(r.convert_to<std::int64_t>(), 4);
}

/// log2 of the order of the submodule of (Z/4)^dim spanned by `gens`.
///
/// Works by diagonalising over the local ring Z/4: unit pivots first, then
/// pivots equal to 2. The order is 4^(#unit pivots) * 2^(#pivots equal to 2).
inline int z4_span_log2_order(std::vector<std::vector<int>> gens, int dim)
{
    for (auto& g : gens) {
        if (static_cast<int>(g.size()) != dim)
            throw std::invalid_argument("z4_span_log2_order: generator length mismatch");
        for (auto& x : g)
            x = ((x % 4) + 4) % 4;
    }
    const int nrows = static_cast<int>(gens.size());
    std::vector<bool> row_used(nrows, false), col_used(dim, false);
    int log2_order = 0;

    auto eliminate = [&](int pr, int pc) {
        // make the pivot entry a power of two's "canonical" form
        const int p = gens[pr][pc];
        if (p % 2 == 1) {
            const int inv = p; // 1*1 = 3*3 = 1 mod 4
            for (auto& x : gens[pr])
                x = (x * inv) % 4;
        }
        const int pivot = gens[pr][pc];
        for (int r = 0; r < nrows; ++r) {
            if (r == pr || gens[r][pc] == 0)
                continue;
            // pivot == 1: subtract x*row; pivot == 2: every remaining entry is even, subtract (x/2)*row
            const int factor = pivot == 1 ? gens[r][pc] : gens[r][pc] / 2;
            for (int c = 0; c < dim; ++c)
                gens[r][c] = ((gens[r][c] - factor * gens[pr][c]) % 4 + 4) % 4;
        }
        row_used[pr] = true;
        col_used[pc] = true;
    };

    for (int wanted : {1, 2}) {
        for (;;) {
            int pr = -1, pc = -1;
            for (int r = 0; r < nrows && pr < 0; ++r) {
                if (row_used[r])
                    continue;
                for (int c = 0; c < dim; ++c)
                    if (!col_used[c] && (wanted == 1 ? gens[r][c] % 2 == 1 : gens[r][c] == 2)) {
                        pr = r;
                        pc = c;
                        break;
                    }
            }
            if (pr < 0)
                break;
            eliminate(pr, pc);
            log2_order += wanted == 1 ? 2 : 1;
        }
    }
    return log2_order;
}

} // namespace cfgcoh
