#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homtest {

/**
 * Dense matrix over GF(2), bit-packed into 64-bit words row by row.
 *
 * The packing makes row operations word-parallel, which is what rank
 * computations on boundary matrices spend all their time on.
 */
class Z2Matrix {
public:
    Z2Matrix() = default;
    Z2Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool value);
    void flip(int r, int c);

    /// dst ^= src, whole rows.
    void xor_row(int dst, int src);
    void swap_rows(int a, int b);

    /// Column index of the first set bit in row r, or -1 if the row is zero.
    int leading_bit(int r) const;
    int row_weight(int r) const;
    int col_weight(int c) const;
    bool is_zero() const;

    Z2Matrix operator*(const Z2Matrix& rhs) const;
    bool operator==(const Z2Matrix& rhs) const = default;

    /// Debug dump: one line of '0'/'1' characters per row.
    std::string dump() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0; // words per row
    std::vector<std::uint64_t> bits_;

    friend int gf2_rank(Z2Matrix scratch);
};

/// Rank over GF(2) by word-parallel elimination. Takes its argument by
/// value: the caller's matrix is never mutated.
int gf2_rank(Z2Matrix scratch);

/**
 * A chain complex over GF(2): sizes[i] generators in dimension i and
 * boundary matrices D_i of shape sizes[i-1] x sizes[i] for i >= 1.
 *
 * boundary(0) is the zero map out of dimension 0; it is not stored.
 * When `truncated_above` is set, generators in dimensions above that
 * value exist in the underlying space but are not stored; homology is
 * then certified only through truncated_above - 1.
 */
struct ChainComplexZ2 {
    std::vector<int> sizes;
    std::vector<Z2Matrix> boundaries; // boundaries[i] = D_i; index 0 unused
    std::optional<int> truncated_above;

    bool empty() const { return sizes.empty(); }
    int top_dim() const { return static_cast<int>(sizes.size()) - 1; }
    bool truncated() const { return truncated_above.has_value(); }

    int size(int dim) const;
    const Z2Matrix& boundary(int i) const;

    /// Highest dimension whose homology is determined by the stored data.
    int certified_through() const;
};

struct ValidationWitness {
    int dim = -1; // index i of the failing pair D_i * D_{i+1}
    int col = -1; // column of D_{i+1} whose boundary-of-boundary is nonzero
    std::string what;
};

/// Shape consistency and D_i * D_{i+1} = 0 for every stored pair.
bool validate(const ChainComplexZ2& c, ValidationWitness* witness = nullptr);

/// Sum of (-1)^i sizes[i]; rejects truncated complexes.
long long euler_characteristic(const ChainComplexZ2& c);

/**
 * Mod-2 Betti numbers b_i = n_i - rank D_i - rank D_{i+1}.
 *
 * `values` holds dimensions 0..complete_through. For a truncated complex
 * the top stored dimension is not certified (its outgoing rank is known
 * but the incoming D_{top+1} is not). The reduced variant subtracts one
 * in dimension 0 of a nonempty complex; the empty complex is reported
 * with the explicit `empty_complex` marker instead of numbers.
 */
struct BettiVector {
    bool reduced = true;
    bool empty_complex = false;
    std::vector<int> values;
    int complete_through = -1;
    bool complete = true; // true when values describe every dimension

    int at(int dim) const; // throws std::out_of_range beyond complete_through

    /// values with trailing zeros removed; handy for comparisons.
    std::vector<int> trimmed() const;

    bool operator==(const BettiVector& rhs) const = default;
};

BettiVector betti(const ChainComplexZ2& c, bool reduced = true);

/// True when the two vectors agree on every dimension both sides certify,
/// and neither hides a nonzero value the other certifies as zero.
bool betti_agree(const BettiVector& a, const BettiVector& b);

/// Per-dimension permutations of generators; perm[d][i] is the image of
/// generator i in dimension d.
using CellInvolution = std::vector<std::vector<int>>;

bool involution_is_free(const CellInvolution& inv);

/**
 * Quotient of a chain complex by a free cellular involution: one
 * generator per orbit (represented by the smaller index), boundary
 * coefficient of orbit [f] in d[c] = (mult of f in dc) + (mult of
 * inv(f) in dc) mod 2. Rejects non-free involutions.
 */
ChainComplexZ2 quotient_chain_complex(const ChainComplexZ2& c, const CellInvolution& inv);

} // namespace homtest
