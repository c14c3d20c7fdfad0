#pragma once

#include "kappa/kappa_poly.hpp"
#include "kappa/partition.hpp"
#include "kappa/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kappa {

/// A vertex datum (g_i, m_i) of a modified weight multiset: genus and the
/// number of special points (markings plus half-edges).
struct ThetaEntry {
    int genus = 0;
    int legs = 0;

    /// 3g - 3 + m, the dimension of the vertex moduli space.
    int dimension() const { return 3 * genus - 3 + legs; }
    bool stable() const { return 2 * genus + legs > 2; }
    auto operator<=>(const ThetaEntry&) const = default;
};

/// Modified weight multiset q_G of a stable weighted graph. Entries are kept
/// sorted in decreasing order; every entry satisfies 2g + m > 2.
class ThetaMultiset {
public:
    ThetaMultiset() = default;
    explicit ThetaMultiset(std::vector<ThetaEntry> entries);
    ThetaMultiset(std::initializer_list<ThetaEntry> entries);

    const std::vector<ThetaEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    int total_legs() const;
    int total_genus() const;
    /// Sum of vertex dimensions.
    int dimension() const;
    /// (sum m_i - n) / 2 for an ambient with n markings; -1 if not integral.
    int edges(int n) const;

    /// True iff this multiset is q_G for some stable weighted graph of
    /// genus g with n markings.
    bool realizable(int g, int n) const;

    auto operator<=>(const ThetaMultiset&) const = default;

private:
    std::vector<ThetaEntry> entries_;
};

/// "(1,1)|(0,3)".
std::string to_string(const ThetaMultiset& q);
ThetaMultiset parse_multiset(std::string_view text);

/// p_map of q in order_key order, then entries lexicographically.
struct ThetaOrder {
    bool operator()(const ThetaMultiset& a, const ThetaMultiset& b) const;
};

/// Dual graph of a stable curve. Markings are labels 1..n; self-loops and
/// multi-edges are allowed.
struct StableWeightedGraph {
    struct Vertex {
        int genus = 0;
        std::vector<int> markings;
    };
    std::vector<Vertex> vertices;
    std::vector<std::pair<int, int>> edges;

    int markings() const;
    int degree(std::size_t v) const;
    /// sum g_v + |E| - |V| + 1.
    int genus() const;
    bool connected() const;

    /// Throws DomainError naming the first violated condition.
    void validate() const;
};

ThetaMultiset theta(const StableWeightedGraph& graph);

/// Q(d; g, n) in ThetaOrder. Supported for g <= 2.
std::vector<ThetaMultiset> enum_Q(int d, int g, int n);

/// q_0(n) = {(0, n_i + 2)} for l = 0, q_l(n) = {(1, l)} + {(0, n_i + 2)} for l >= 1.
ThetaMultiset genus1_q(int l, const Partition& n);

/// The ambient (d, g, n) of genus1_q(l, n).
struct CycleAmbient {
    int d = 0;
    int g = 0;
    int n = 0;
    bool operator==(const CycleAmbient&) const = default;
};
CycleAmbient genus1_ambient(int l, const Partition& n);

/// The partition {3g_i - 3 + m_i}; zero values are dropped.
Partition p_map(const ThetaMultiset& q);

/// <psi(p), q>: sum over assignments of the |p| extra points to the entries
/// of q of the product of the vertex intersection numbers. Throws
/// DomainError when d(p) != dim(q).
Rational pair_psi(const Partition& p, const ThetaMultiset& q);

/// As above, additionally checking that q lies in Q(d(p); g, n).
Rational pair_psi(const Partition& p, const ThetaMultiset& q, int g, int n);

/// Linear extension of pair_psi to a psi-basis expression.
Rational pair_psi_expr(const FormalExpr& psi_coords, const ThetaMultiset& q);

/// Pairing of a formal expression in any basis; kappa and bracket bases are
/// converted to psi coordinates first.
Rational pair_formal(const FormalExpr& phi, Basis basis, const ThetaMultiset& q, int g, int n);

bool is_compact_type(const ThetaMultiset& q, int g, int n);

/// Reinterprets q0 in Q(d; 0, n + 2g) as an element of Q(d; g, n).
ThetaMultiset lift_multiset(const ThetaMultiset& q0, int g, int n);

/// A rational combination of multisets in a common Q(d; g, n).
class KTrivialCycle {
public:
    using Terms = std::map<ThetaMultiset, Rational, ThetaOrder>;

    KTrivialCycle() = default;
    explicit KTrivialCycle(CycleAmbient ambient) : ambient_(ambient), has_ambient_(true) {}

    /// Throws DomainError if q does not lie in this cycle's Q(d; g, n).
    void add(const ThetaMultiset& q, const Rational& c);
    /// Adds a genus-1 term, fixing the ambient on first use.
    void add_genus1(int l, const Partition& n, const Rational& c);

    const Terms& terms() const { return terms_; }
    const CycleAmbient& ambient() const { return ambient_; }
    bool empty() const { return terms_.empty(); }

private:
    CycleAmbient ambient_;
    bool has_ambient_ = false;
    Terms terms_;
};

}  // namespace kappa
