#include "covmat/boolmat.hpp"

#include <bit>
#include <sstream>

namespace covmat {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

// Mask selecting the valid bits of the last word, or all ones when the
// length is word-aligned.
std::uint64_t tail_mask(std::size_t bits) {
    const std::size_t rem = bits % kWordBits;
    return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

}  // namespace

BoolVector::BoolVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BoolVector BoolVector::ones(std::size_t length) {
    BoolVector v(length);
    if (!v.words_.empty()) {
        for (auto& w : v.words_) w = ~std::uint64_t{0};
        v.words_.back() &= tail_mask(length);
    }
    return v;
}

bool BoolVector::get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BoolVector::set(std::size_t i, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= bit;
    else
        words_[i / kWordBits] &= ~bit;
}

bool BoolVector::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

std::size_t BoolVector::count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

void BoolVector::check_same_length(const BoolVector& other) const {
    if (length_ != other.length_)
        throw DimensionMismatchError("vector lengths disagree (" + std::to_string(length_) +
                                     " vs " + std::to_string(other.length_) + ")");
}

bool BoolVector::is_subset_of(const BoolVector& other) const {
    check_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w]) return false;
    return true;
}

bool BoolVector::intersects(const BoolVector& other) const {
    check_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & other.words_[w]) return true;
    return false;
}

BoolVector& BoolVector::operator|=(const BoolVector& other) {
    check_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

BoolVector& BoolVector::operator&=(const BoolVector& other) {
    check_same_length(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

BoolVector BoolVector::complemented() const {
    BoolVector result(length_);
    for (std::size_t w = 0; w < words_.size(); ++w) result.words_[w] = ~words_[w];
    if (!result.words_.empty()) result.words_.back() &= tail_mask(length_);
    return result;
}

BoolMatrix::BoolMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(word_count(cols)), words_(rows * words_per_row_, 0) {}

BoolMatrix BoolMatrix::identity(std::size_t n) {
    BoolMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BoolMatrix BoolMatrix::ones(std::size_t rows, std::size_t cols) {
    BoolMatrix m(rows, cols);
    if (m.words_per_row_ == 0) return m;
    const std::uint64_t tail = tail_mask(cols);
    for (std::size_t i = 0; i < rows; ++i) {
        auto row = m.row_words_mut(i);
        for (auto& w : row) w = ~std::uint64_t{0};
        row.back() = tail;
    }
    return m;
}

bool BoolMatrix::get(std::size_t i, std::size_t j) const {
    return (words_[i * words_per_row_ + j / kWordBits] >> (j % kWordBits)) & 1u;
}

void BoolMatrix::set(std::size_t i, std::size_t j, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (j % kWordBits);
    auto& word = words_[i * words_per_row_ + j / kWordBits];
    if (value)
        word |= bit;
    else
        word &= ~bit;
}

BoolVector BoolMatrix::row(std::size_t i) const {
    BoolVector v(cols_);
    const auto src = row_words(i);
    for (std::size_t w = 0; w < src.size(); ++w) v.words_[w] = src[w];
    return v;
}

void BoolMatrix::assign_row(std::size_t i, const BoolVector& bits) {
    if (bits.size() != cols_)
        throw DimensionMismatchError("row length " + std::to_string(bits.size()) +
                                     " does not match column count " + std::to_string(cols_));
    auto dst = row_words_mut(i);
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] = bits.words()[w];
}

std::span<const std::uint64_t> BoolMatrix::row_words(std::size_t i) const {
    return {words_.data() + i * words_per_row_, words_per_row_};
}

std::span<std::uint64_t> BoolMatrix::row_words_mut(std::size_t i) {
    return {words_.data() + i * words_per_row_, words_per_row_};
}

std::string BoolMatrix::debug_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << (get(i, j) ? '1' : '0');
        }
        out << '\n';
    }
    return out.str();
}

namespace {

void check_inner(const char* op, std::size_t a_rows, std::size_t a_cols, std::size_t b_rows,
                 std::size_t b_cols) {
    if (a_cols != b_rows)
        throw DimensionMismatchError(std::string(op) + ": inner dimensions disagree (" +
                                     std::to_string(a_rows) + "x" + std::to_string(a_cols) +
                                     " vs " + std::to_string(b_rows) + "x" +
                                     std::to_string(b_cols) + ")");
}

// Calls fn(k) for every set bit k of the row.
template <typename Fn>
void for_each_set_bit(std::span<const std::uint64_t> row, Fn&& fn) {
    for (std::size_t w = 0; w < row.size(); ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
            fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
}

}  // namespace

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
    check_inner("bool_product", a.rows_, a.cols_, b.rows_, b.cols_);
    BoolMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        auto out = c.row_words_mut(i);
        for_each_set_bit(a.row_words(i), [&](std::size_t k) {
            const auto bk = b.row_words(k);
            for (std::size_t w = 0; w < out.size(); ++w) out[w] |= bk[w];
        });
    }
    return c;
}

BoolVector bool_product(const BoolMatrix& a, const BoolVector& v) {
    check_inner("bool_product", a.rows_, a.cols_, v.length_, 1);
    BoolVector result(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        const auto row = a.row_words(i);
        for (std::size_t w = 0; w < row.size(); ++w) {
            if (row[w] & v.words_[w]) {
                result.set(i, true);
                break;
            }
        }
    }
    return result;
}

BoolMatrix impl_product(const BoolMatrix& a, const BoolMatrix& b) {
    check_inner("impl_product", a.rows_, a.cols_, b.rows_, b.cols_);
    // Row i of the result is the intersection of the rows of b selected by
    // row i of a; an empty selection leaves the vacuous all-ones row.
    BoolMatrix c = BoolMatrix::ones(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        auto out = c.row_words_mut(i);
        for_each_set_bit(a.row_words(i), [&](std::size_t k) {
            const auto bk = b.row_words(k);
            for (std::size_t w = 0; w < out.size(); ++w) out[w] &= bk[w];
        });
    }
    return c;
}

BoolVector impl_product(const BoolMatrix& a, const BoolVector& v) {
    check_inner("impl_product", a.rows_, a.cols_, v.length_, 1);
    BoolVector result(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        const auto row = a.row_words(i);
        bool contained = true;
        for (std::size_t w = 0; w < row.size(); ++w) {
            if (row[w] & ~v.words_[w]) {  // tail bits of row are zero
                contained = false;
                break;
            }
        }
        result.set(i, contained);
    }
    return result;
}

BoolMatrix transpose(const BoolMatrix& a) {
    BoolMatrix t(a.cols_, a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for_each_set_bit(a.row_words(i), [&](std::size_t j) { t.set(j, i, true); });
    return t;
}

BoolMatrix as_column_matrix(const BoolVector& v) {
    BoolMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v.get(i));
    return m;
}

BoolVector as_vector(const BoolMatrix& column) {
    if (column.cols() != 1)
        throw DimensionMismatchError("as_vector expects a single-column matrix, got " +
                                     std::to_string(column.cols()) + " columns");
    BoolVector v(column.rows());
    for (std::size_t i = 0; i < column.rows(); ++i) v.set(i, column.get(i, 0));
    return v;
}

}  // namespace covmat
