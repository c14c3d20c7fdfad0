#pragma once

#include "kappa/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace kappa {

// Dense exact-rational matrix whose rows and columns carry unique string
// labels (partitions, multisets, ...). Entries are stored row-major.
class LabeledMatrix {
public:
    LabeledMatrix() = default;
    LabeledMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels);
    LabeledMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                  std::vector<Rational> entries);

    std::size_t rows() const { return row_labels_.size(); }
    std::size_t cols() const { return col_labels_.size(); }

    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols() + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }

    std::optional<std::size_t> row_index(const std::string& label) const;
    std::optional<std::size_t> col_index(const std::string& label) const;

    const Rational& at(const std::string& row, const std::string& col) const;

    std::vector<Rational> row(std::size_t r) const;
    std::vector<Rational> column(std::size_t c) const;

    LabeledMatrix transpose() const;

    bool operator==(const LabeledMatrix&) const = default;

private:
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
    std::vector<Rational> entries_;
    std::unordered_map<std::string, std::size_t> row_lookup_;
    std::unordered_map<std::string, std::size_t> col_lookup_;
};

struct LabeledVector {
    std::vector<std::string> labels;
    std::vector<Rational> values;
};

/// Exact rank over Q. Rows are cleared of denominators and reduced with
/// fraction-free (Bareiss) elimination over the integers.
std::size_t rank(const LabeledMatrix& m);

/// Rank of a plain row-major rational matrix.
std::size_t rank(std::span<const Rational> entries, std::size_t rows, std::size_t cols);

enum class Triangle { upper, lower };

struct TriangularReport {
    bool triangular = false;
    bool diagonal_nonzero = false;
};

/// Restricts `m` to the listed rows and columns (in that order) and checks
/// that everything strictly below (upper mode) or above (lower mode) the
/// diagonal is zero. Row i is paired with column i on the diagonal.
TriangularReport is_triangular(const LabeledMatrix& m, std::span<const std::string> row_order,
                               std::span<const std::string> col_order, Triangle mode);

bool in_span(const LabeledVector& v, std::span<const LabeledVector> basis);

/// Inverse of a square matrix; throws DomainError if singular. Row labels of
/// the result are the column labels of `m` and vice versa.
LabeledMatrix inverse(const LabeledMatrix& m);

/// m * x for a column vector x indexed like m's columns.
std::vector<Rational> multiply(const LabeledMatrix& m, std::span<const Rational> x);

}  // namespace kappa
