#pragma once

#include "kappa/rational.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace kappa::intersect {

/// A psi intersection number <tau_{a_1} ... tau_{a_n}>_g. Exponents are kept
/// sorted in decreasing order.
struct TauQuery {
    int genus = 0;
    std::vector<int> exponents;

    TauQuery() = default;
    TauQuery(int g, std::vector<int> exps);

    std::size_t points() const { return exponents.size(); }
    bool stable() const { return points() >= 1 && 2 * genus - 2 + static_cast<int>(points()) > 0; }
    bool dimension_matched() const;

    bool operator==(const TauQuery&) const = default;
};

/// The intersection number of psi classes over the moduli space of genus-g
/// stable curves with exponents.size() markings.
///
/// Exponent-0 insertions are removed with the string equation and
/// exponent-1 insertions with the dilaton equation; what remains (all
/// exponents >= 2) is reduced in genus by the DVV form of the Virasoro
/// constraints. Results are memoized in a process-wide cache.
///
/// Dimension-mismatched queries return 0. Unstable queries (no points,
/// or genus 0 with fewer than three points) throw DomainError.
Rational tau(const TauQuery& q);
Rational tau(int genus, std::vector<int> exponents);

/// (n-3)! / prod a_i! when sum a_i = n-3, else 0. Requires n >= 3.
Rational genus0_closed(const std::vector<int>& exponents);

/// Cache plumbing. The on-disk format is one record per line,
/// `g|a1,a2,...,an|num/den`, exponents decreasing, lines sorted.
std::size_t cache_size();
void clear_cache();
std::size_t load_cache(const std::filesystem::path& file);
void save_cache(const std::filesystem::path& file);

/// Cache file inside a cache directory.
std::filesystem::path cache_file(const std::filesystem::path& dir);

std::string format_record(const TauQuery& q, const Rational& value);

}  // namespace kappa::intersect
