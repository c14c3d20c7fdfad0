#include "kappa/matrix.hpp"

#include "kappa/error.hpp"

#include <algorithm>
#include <utility>

namespace kappa {

namespace {

std::unordered_map<std::string, std::size_t> index_labels(const std::vector<std::string>& labels,
                                                          const char* axis)
{
    std::unordered_map<std::string, std::size_t> lookup;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!lookup.emplace(labels[i], i).second)
            throw DomainError(std::string("duplicate ") + axis + " label '" + labels[i] + "'");
    return lookup;
}

// Bareiss elimination on an integer matrix, in place. Returns the rank.
std::size_t bareiss_rank(std::vector<Integer>& a, std::size_t rows, std::size_t cols)
{
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot * cols + c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r)
            for (std::size_t k = 0; k < cols; ++k)
                std::swap(a[pivot * cols + k], a[r * cols + k]);
        const Integer& p = a[r * cols + c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Integer f = a[i * cols + c];
            for (std::size_t k = c + 1; k < cols; ++k) {
                Integer v = p * a[i * cols + k] - f * a[r * cols + k];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i * cols + k] = std::move(v);
            }
            a[i * cols + c] = 0;
        }
        prev = p;
        ++r;
    }
    return r;
}

}  // namespace

LabeledMatrix::LabeledMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels)
    : LabeledMatrix(std::move(row_labels), std::move(col_labels), {})
{
}

LabeledMatrix::LabeledMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                             std::vector<Rational> entries)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)), entries_(std::move(entries))
{
    if (entries_.empty())
        entries_.assign(rows() * cols(), Rational(0));
    if (entries_.size() != rows() * cols())
        throw DomainError("entry count does not match label counts");
    row_lookup_ = index_labels(row_labels_, "row");
    col_lookup_ = index_labels(col_labels_, "column");
}

std::optional<std::size_t> LabeledMatrix::row_index(const std::string& label) const
{
    auto it = row_lookup_.find(label);
    if (it == row_lookup_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> LabeledMatrix::col_index(const std::string& label) const
{
    auto it = col_lookup_.find(label);
    if (it == col_lookup_.end())
        return std::nullopt;
    return it->second;
}

const Rational& LabeledMatrix::at(const std::string& row, const std::string& col) const
{
    auto r = row_index(row);
    auto c = col_index(col);
    if (!r || !c)
        throw DomainError("unknown label (" + row + ", " + col + ")");
    return at(*r, *c);
}

std::vector<Rational> LabeledMatrix::row(std::size_t r) const
{
    return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols()),
            entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols())};
}

std::vector<Rational> LabeledMatrix::column(std::size_t c) const
{
    std::vector<Rational> out;
    out.reserve(rows());
    for (std::size_t r = 0; r < rows(); ++r)
        out.push_back(at(r, c));
    return out;
}

LabeledMatrix LabeledMatrix::transpose() const
{
    std::vector<Rational> t(entries_.size());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c)
            t[c * rows() + r] = at(r, c);
    return LabeledMatrix(col_labels_, row_labels_, std::move(t));
}

std::size_t rank(std::span<const Rational> entries, std::size_t rows, std::size_t cols)
{
    std::vector<Integer> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Integer lcm = 1;
        for (std::size_t c = 0; c < cols; ++c)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), entries[r * cols + c].get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) {
            const Rational& q = entries[r * cols + c];
            a[r * cols + c] = q.get_num() * (lcm / q.get_den());
        }
    }
    return bareiss_rank(a, rows, cols);
}

std::size_t rank(const LabeledMatrix& m)
{
    std::vector<Rational> flat;
    flat.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            flat.push_back(m.at(r, c));
    return rank(flat, m.rows(), m.cols());
}

TriangularReport is_triangular(const LabeledMatrix& m, std::span<const std::string> row_order,
                               std::span<const std::string> col_order, Triangle mode)
{
    if (row_order.size() != col_order.size())
        throw DomainError("triangularity needs as many rows as columns");
    std::vector<std::size_t> rows, cols;
    for (const auto& l : row_order) {
        auto i = m.row_index(l);
        if (!i)
            throw DomainError("unknown row label '" + l + "'");
        rows.push_back(*i);
    }
    for (const auto& l : col_order) {
        auto j = m.col_index(l);
        if (!j)
            throw DomainError("unknown column label '" + l + "'");
        cols.push_back(*j);
    }
    TriangularReport report{true, true};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (m.at(rows[i], cols[i]) == 0)
            report.diagonal_nonzero = false;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            bool forbidden = mode == Triangle::upper ? i > j : i < j;
            if (forbidden && m.at(rows[i], cols[j]) != 0)
                report.triangular = false;
        }
    }
    return report;
}

bool in_span(const LabeledVector& v, std::span<const LabeledVector> basis)
{
    for (const auto& b : basis)
        if (b.labels != v.labels)
            throw DomainError("in_span: label sets differ");
    const std::size_t n = v.labels.size();
    std::vector<Rational> flat;
    flat.reserve((basis.size() + 1) * n);
    for (const auto& b : basis)
        flat.insert(flat.end(), b.values.begin(), b.values.end());
    const std::size_t base_rank = rank(flat, basis.size(), n);
    flat.insert(flat.end(), v.values.begin(), v.values.end());
    return rank(flat, basis.size() + 1, n) == base_rank;
}

LabeledMatrix inverse(const LabeledMatrix& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n)
        throw DomainError("inverse of a non-square matrix");
    // Gauss-Jordan on [m | I].
    std::vector<Rational> a(n * 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            a[r * 2 * n + c] = m.at(r, c);
        a[r * 2 * n + n + r] = 1;
    }
    const std::size_t w = 2 * n;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot * w + c] == 0)
            ++pivot;
        if (pivot == n)
            throw DomainError("matrix is singular");
        if (pivot != c)
            for (std::size_t k = 0; k < w; ++k)
                std::swap(a[pivot * w + k], a[c * w + k]);
        const Rational inv = 1 / a[c * w + c];
        for (std::size_t k = 0; k < w; ++k)
            a[c * w + k] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r * w + c] == 0)
                continue;
            const Rational f = a[r * w + c];
            for (std::size_t k = 0; k < w; ++k)
                a[r * w + k] -= f * a[c * w + k];
        }
    }
    std::vector<Rational> out(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out[r * n + c] = a[r * w + n + c];
    return LabeledMatrix(m.col_labels(), m.row_labels(), std::move(out));
}

std::vector<Rational> multiply(const LabeledMatrix& m, std::span<const Rational> x)
{
    if (x.size() != m.cols())
        throw DomainError("vector length does not match column count");
    std::vector<Rational> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (x[c] != 0)
                out[r] += m.at(r, c) * x[c];
    return out;
}

}  // namespace kappa
