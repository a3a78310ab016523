#ifndef COVMAT_BOOLMAT_HPP_
#define COVMAT_BOOLMAT_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "covmat/errors.hpp"

namespace covmat {

class BoolMatrix;

/// Dense 0/1 column vector, word-packed. Bits at positions >= size() are
/// kept zero so whole-word comparisons and subset tests stay exact.
class BoolVector {
public:
    explicit BoolVector(std::size_t length);
    static BoolVector ones(std::size_t length);

    std::size_t size() const { return length_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);

    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;

    bool is_subset_of(const BoolVector& other) const;
    bool intersects(const BoolVector& other) const;

    BoolVector& operator|=(const BoolVector& other);
    BoolVector& operator&=(const BoolVector& other);
    BoolVector complemented() const;

    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const BoolVector&, const BoolVector&) = default;

private:
    void check_same_length(const BoolVector& other) const;

    std::size_t length_;
    std::vector<std::uint64_t> words_;

    friend class BoolMatrix;
    friend BoolVector bool_product(const BoolMatrix&, const BoolVector&);
    friend BoolVector impl_product(const BoolMatrix&, const BoolVector&);
};

/// Dense 0/1 matrix with word-packed rows.
class BoolMatrix {
public:
    BoolMatrix(std::size_t rows, std::size_t cols);
    static BoolMatrix identity(std::size_t n);
    static BoolMatrix ones(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, bool value);

    /// Row i as a standalone vector of length cols().
    BoolVector row(std::size_t i) const;
    void assign_row(std::size_t i, const BoolVector& bits);

    std::span<const std::uint64_t> row_words(std::size_t i) const;

    /// One line per row, entries '0'/'1' separated by single spaces.
    std::string debug_string() const;

    friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

private:
    std::span<std::uint64_t> row_words_mut(std::size_t i);

    std::size_t rows_;
    std::size_t cols_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> words_;

    friend BoolMatrix bool_product(const BoolMatrix&, const BoolMatrix&);
    friend BoolVector bool_product(const BoolMatrix&, const BoolVector&);
    friend BoolMatrix impl_product(const BoolMatrix&, const BoolMatrix&);
    friend BoolVector impl_product(const BoolMatrix&, const BoolVector&);
    friend BoolMatrix transpose(const BoolMatrix&);
};

/// Max-min product: entry (i,j) = 1 iff some k has A(i,k) = B(k,j) = 1.
BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);
BoolVector bool_product(const BoolMatrix& a, const BoolVector& v);

/// Implication product: entry (i,j) = 1 iff A(i,k) <= B(k,j) for every k,
/// i.e. row i of A, read as a set, is contained in column j of B. The
/// integer form min_k(B(k,j) - A(i,k) + 1) clamped to {0,1} agrees with
/// this predicate on 0/1 operands.
BoolMatrix impl_product(const BoolMatrix& a, const BoolMatrix& b);
BoolVector impl_product(const BoolMatrix& a, const BoolVector& v);

BoolMatrix transpose(const BoolMatrix& a);

/// Vector <-> single-column matrix bridges, for treating a vector as an
/// n x 1 operand of the generic products.
BoolMatrix as_column_matrix(const BoolVector& v);
BoolVector as_vector(const BoolMatrix& column);

}  // namespace covmat

#endif  // COVMAT_BOOLMAT_HPP_
