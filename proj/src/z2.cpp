#include "homtest/z2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "homtest/errors.hpp"

namespace homtest {

Z2Matrix::Z2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(static_cast<std::size_t>(rows) * words_, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Z2Matrix: negative shape");
}

bool Z2Matrix::get(int r, int c) const {
    return (bits_[static_cast<std::size_t>(r) * words_ + c / 64] >> (c % 64)) & 1u;
}

void Z2Matrix::set(int r, int c, bool value) {
    std::uint64_t& w = bits_[static_cast<std::size_t>(r) * words_ + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    if (value)
        w |= mask;
    else
        w &= ~mask;
}

void Z2Matrix::flip(int r, int c) {
    bits_[static_cast<std::size_t>(r) * words_ + c / 64] ^= std::uint64_t{1} << (c % 64);
}

void Z2Matrix::xor_row(int dst, int src) {
    std::uint64_t* d = bits_.data() + static_cast<std::size_t>(dst) * words_;
    const std::uint64_t* s = bits_.data() + static_cast<std::size_t>(src) * words_;
    for (int w = 0; w < words_; ++w) d[w] ^= s[w];
}

void Z2Matrix::swap_rows(int a, int b) {
    if (a == b) return;
    std::uint64_t* ra = bits_.data() + static_cast<std::size_t>(a) * words_;
    std::uint64_t* rb = bits_.data() + static_cast<std::size_t>(b) * words_;
    for (int w = 0; w < words_; ++w) std::swap(ra[w], rb[w]);
}

int Z2Matrix::leading_bit(int r) const {
    const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(r) * words_;
    for (int w = 0; w < words_; ++w)
        if (row[w] != 0) return w * 64 + std::countr_zero(row[w]);
    return -1;
}

int Z2Matrix::row_weight(int r) const {
    const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(r) * words_;
    int total = 0;
    for (int w = 0; w < words_; ++w) total += std::popcount(row[w]);
    return total;
}

int Z2Matrix::col_weight(int c) const {
    int total = 0;
    for (int r = 0; r < rows_; ++r) total += get(r, c) ? 1 : 0;
    return total;
}

bool Z2Matrix::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

Z2Matrix Z2Matrix::operator*(const Z2Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("Z2Matrix: shape mismatch in product");
    Z2Matrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r) {
        const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(r) * words_;
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bitsleft = row[w];
            while (bitsleft != 0) {
                const int k = w * 64 + std::countr_zero(bitsleft);
                bitsleft &= bitsleft - 1;
                std::uint64_t* d = out.bits_.data() + static_cast<std::size_t>(r) * out.words_;
                const std::uint64_t* s = rhs.bits_.data() + static_cast<std::size_t>(k) * rhs.words_;
                for (int ww = 0; ww < out.words_; ++ww) d[ww] ^= s[ww];
            }
        }
    }
    return out;
}

std::string Z2Matrix::dump() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) os << (get(r, c) ? '1' : '0');
        os << '\n';
    }
    return os.str();
}

int gf2_rank(Z2Matrix a) {
    if (a.rows_ == 0 || a.cols_ == 0) return 0;
    std::vector<int> pivot_row_of_col(a.cols_, -1);
    int rank = 0;
    for (int r = 0; r < a.rows_; ++r) {
        for (;;) {
            const int lead = a.leading_bit(r);
            if (lead < 0) break;
            const int p = pivot_row_of_col[lead];
            if (p < 0) {
                pivot_row_of_col[lead] = r;
                ++rank;
                break;
            }
            a.xor_row(r, p);
        }
    }
    return rank;
}

int ChainComplexZ2::size(int dim) const {
    if (dim < 0 || dim > top_dim()) return 0;
    return sizes[dim];
}

const Z2Matrix& ChainComplexZ2::boundary(int i) const {
    if (i < 1 || i > top_dim()) throw std::out_of_range("ChainComplexZ2::boundary: no such matrix");
    return boundaries[i];
}

int ChainComplexZ2::certified_through() const {
    if (empty()) return -1;
    return truncated() ? *truncated_above - 1 : top_dim();
}

bool validate(const ChainComplexZ2& c, ValidationWitness* witness) {
    auto fail = [&](int dim, int col, std::string what) {
        if (witness) *witness = ValidationWitness{dim, col, std::move(what)};
        return false;
    };
    if (c.empty()) {
        if (!c.boundaries.empty()) return fail(-1, -1, "boundaries present on empty complex");
        return true;
    }
    const int top = c.top_dim();
    if (static_cast<int>(c.boundaries.size()) != top + 1)
        return fail(-1, -1, "boundary list length does not match sizes");
    for (int i = 0; i <= top; ++i) {
        if (c.sizes[i] < 0) return fail(i, -1, "negative generator count");
        if (i == 0) continue;
        const Z2Matrix& d = c.boundaries[i];
        if (d.rows() != c.sizes[i - 1] || d.cols() != c.sizes[i])
            return fail(i, -1, "boundary matrix shape mismatch");
    }
    // d(d(cell)) = 0, column by column so a failure can be located.
    for (int i = 1; i + 1 <= top; ++i) {
        const Z2Matrix prod = c.boundaries[i] * c.boundaries[i + 1];
        if (!prod.is_zero()) {
            for (int col = 0; col < prod.cols(); ++col)
                if (prod.col_weight(col) > 0)
                    return fail(i, col, "D_i * D_{i+1} has a nonzero column");
        }
    }
    return true;
}

long long euler_characteristic(const ChainComplexZ2& c) {
    if (c.truncated()) throw std::invalid_argument("euler_characteristic: complex is truncated");
    long long chi = 0;
    for (int i = 0; i <= c.top_dim(); ++i) chi += (i % 2 == 0) ? c.sizes[i] : -c.sizes[i];
    return chi;
}

int BettiVector::at(int dim) const {
    if (dim < 0 || (dim > complete_through && !complete))
        throw std::out_of_range("BettiVector::at: dimension not certified");
    if (dim >= static_cast<int>(values.size())) return 0;
    return values[dim];
}

std::vector<int> BettiVector::trimmed() const {
    std::vector<int> v = values;
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

BettiVector betti(const ChainComplexZ2& c, bool reduced) {
    BettiVector out;
    out.reduced = reduced;
    if (c.empty()) {
        out.empty_complex = true;
        out.complete_through = -1;
        out.complete = !c.truncated();
        return out;
    }
    const int top = c.top_dim();
    const int through = c.certified_through();
    out.complete_through = through;
    out.complete = !c.truncated();
    if (through < 0) return out;

    std::vector<int> rank(top + 2, 0); // rank[i] = rank D_i; D_0 and D_{top+1} are zero maps
    for (int i = 1; i <= top; ++i) rank[i] = gf2_rank(c.boundaries[i]);

    out.values.resize(through + 1);
    for (int i = 0; i <= through; ++i) {
        const int b = c.sizes[i] - rank[i] - rank[i + 1];
        if (b < 0) throw InternalError("betti: negative rank balance at dimension " + std::to_string(i));
        out.values[i] = b;
    }
    if (reduced) {
        if (out.values.empty() || out.values[0] < 1)
            throw InternalError("betti: nonempty complex with unreduced b_0 < 1");
        out.values[0] -= 1;
    }
    return out;
}

bool betti_agree(const BettiVector& a, const BettiVector& b) {
    if (a.reduced != b.reduced) return false;
    if (a.empty_complex || b.empty_complex) return a.empty_complex == b.empty_complex;
    const int shared = std::min(a.complete_through, b.complete_through);
    for (int i = 0; i <= shared; ++i)
        if (a.values[i] != b.values[i]) return false;
    // A complete side pins all higher dimensions to its stored values (zero
    // beyond the array); the other side must not certify anything different.
    auto check_tail = [&](const BettiVector& full, const BettiVector& part) {
        if (!full.complete) return true;
        for (int i = shared + 1; i <= part.complete_through; ++i)
            if (part.values[i] != full.at(i)) return false;
        return true;
    };
    return check_tail(a, b) && check_tail(b, a);
}

bool involution_is_free(const CellInvolution& inv) {
    for (const auto& perm : inv)
        for (std::size_t i = 0; i < perm.size(); ++i)
            if (perm[i] == static_cast<int>(i)) return false;
    return true;
}

namespace {

void check_involution_shape(const ChainComplexZ2& c, const CellInvolution& inv) {
    if (inv.size() != c.sizes.size())
        throw std::invalid_argument("involution: dimension count mismatch");
    for (int d = 0; d <= c.top_dim(); ++d) {
        const auto& perm = inv[d];
        if (static_cast<int>(perm.size()) != c.sizes[d])
            throw std::invalid_argument("involution: size mismatch in dimension " + std::to_string(d));
        for (int i = 0; i < c.sizes[d]; ++i) {
            const int j = perm[i];
            if (j < 0 || j >= c.sizes[d] || perm[j] != i)
                throw std::invalid_argument("involution: not an involutive permutation");
        }
    }
}

} // namespace

ChainComplexZ2 quotient_chain_complex(const ChainComplexZ2& c, const CellInvolution& inv) {
    check_involution_shape(c, inv);
    if (!involution_is_free(inv))
        throw std::invalid_argument("quotient_chain_complex: involution has a fixed cell");

    ChainComplexZ2 q;
    q.truncated_above = c.truncated_above;
    if (c.empty()) return q;

    const int top = c.top_dim();
    // Orbit representative = smaller index of the pair; orbits keep the
    // representatives' relative order.
    std::vector<std::vector<int>> orbit_of(top + 1); // generator index -> orbit index
    std::vector<std::vector<int>> rep_of(top + 1);   // orbit index -> representative
    q.sizes.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        orbit_of[d].assign(c.sizes[d], -1);
        for (int i = 0; i < c.sizes[d]; ++i) {
            if (orbit_of[d][i] >= 0) continue;
            const int o = static_cast<int>(rep_of[d].size());
            orbit_of[d][i] = o;
            orbit_of[d][inv[d][i]] = o;
            rep_of[d].push_back(i);
        }
        q.sizes[d] = static_cast<int>(rep_of[d].size());
    }

    q.boundaries.resize(top + 1);
    for (int d = 1; d <= top; ++d) {
        const Z2Matrix& full = c.boundaries[d];
        Z2Matrix m(q.sizes[d - 1], q.sizes[d]);
        for (int o = 0; o < q.sizes[d]; ++o) {
            const int rep = rep_of[d][o];
            for (int r = 0; r < c.sizes[d - 1]; ++r)
                if (full.get(r, rep)) m.flip(orbit_of[d - 1][r], o);
        }
        q.boundaries[d] = std::move(m);
    }
    return q;
}

} // namespace homtest
