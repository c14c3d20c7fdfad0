#pragma once

#include "kappa/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace kappa {

/// A weakly decreasing sequence of positive integers. Parts are sorted on
/// construction, so Partition{1, 3, 1} == Partition{3, 1, 1}. The empty
/// partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int sum() const;
    bool empty() const { return parts_.empty(); }

    int operator[](std::size_t i) const { return parts_[i]; }
    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    /// Number of parts strictly greater than `i`.
    std::size_t count_greater(int i) const;

    /// Multiset union.
    Partition operator|(const Partition& other) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// An ordered sequence of positive integers.
struct Composition {
    std::vector<int> parts;
    int sum() const;
    bool operator==(const Composition&) const = default;
};

/// Total order on partitions of a fixed size extending refinement: more parts
/// sort first, ties broken lexicographically on the decreasing part sequence.
struct OrderKey {
    long neg_length;  // more parts => smaller key
    std::vector<int> parts;
    auto operator<=>(const OrderKey&) const = default;
};

OrderKey order_key(const Partition& p);

/// Strict weak ordering by order_key; usable for std::sort and std::map.
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

/// All partitions of d in increasing order_key.
std::vector<Partition> enumerate(int d);

/// P_i(d, k): partitions of d with at most k parts greater than i.
std::vector<Partition> enumerate_bounded(int d, int i, int k);

/// P(d, k) = P_0(d, k): partitions of d with at most k parts.
std::vector<Partition> enumerate_at_most(int d, int k);

/// P(d; k): partitions of d with exactly k parts.
std::vector<Partition> enumerate_exact_len(int d, int k);

/// True iff b is obtained from a by grouping parts of a and summing groups.
bool refines(const Partition& a, const Partition& b);

/// Product over distinct part values of (multiplicity)!.
Integer aut(const Partition& p);

/// p^-: drop the ones, subtract one from every other part.
Partition minus(const Partition& p);

/// p[l]: append l parts equal to 1.
Partition pad(const Partition& p, int l);

/// Add one to every part and pad with ones to sum(p) parts (a partition of
/// 2 sum(p) into exactly sum(p) parts).
Partition hat(const Partition& p);
Partition hat(const Composition& c);

/// All compositions of l (2^(l-1) of them), coarsest first.
std::vector<Composition> compositions(int l);

/// l! / prod(m_i!).
Integer multinomial(const Composition& m);

/// Comma separated parts, "" for the empty partition.
std::string to_string(const Partition& p);
std::string to_string(const Composition& c);

/// Inverse of to_string. Accepts parts in any order; rejects non-positive parts.
Partition parse_partition(std::string_view text);

}  // namespace kappa

template <>
struct std::hash<kappa::Partition> {
    std::size_t operator()(const kappa::Partition& p) const noexcept;
};
