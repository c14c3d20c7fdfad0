#pragma once

#include "kappa/matrix.hpp"
#include "kappa/partition.hpp"
#include "kappa/rational.hpp"
#include "kappa/strata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kappa {

struct RankReport {
    int d = 0;
    int g = 0;
    int n = 0;
    long matrix_rank = 0;
    std::optional<long> formula_value;
    long q_count = 0;
    long p_count = 0;

    /// Empty when there is no formula to compare against.
    std::optional<bool> agrees() const;
};

/// {"d":..,"g":..,"n":..,"rank":..,"formula":..,"agrees":..}; formula and
/// agrees are null without a formula.
std::string to_json(const RankReport& r);

/// Rows P(d), columns enum_Q(d, g, n), entries pair_psi(p, q).
LabeledMatrix pairing_matrix(int d, int g, int n);

/// Formula: |P_1(d, n-d)| for g = 1, |P(d, n-2-d)| for g = 0, none for g = 2.
RankReport rank_kappa_c(int d, int g, int n);

/// |P_1(d, n-d)|.
long genus1_rank_formula(int d, int n);

/// C(n+e, e) C(g+e, e) / (e+1)!.
Rational asymptotic_formula(int g, int e, int n);

struct Genus1Generator {
    int l = 0;
    Partition parts;
    ThetaMultiset q;
};

struct GeneratorSets {
    std::vector<Genus1Generator> a1;
    std::vector<Genus1Generator> a2;
};

/// A1: q_l(n) with n having n-d parts, all >= 2. A2: q_l(1, n_2, ...) with
/// the remaining n-d-1 parts at most l+1. Requires n-d >= 1.
GeneratorSets generators_A(int d, int n);

/// q_0(hat(m)).
ThetaMultiset frak_q(const Partition& m);

/// P(d) \ P(d, n-d) in order_key order.
std::vector<Partition> triangular_index(int d, int n);

/// Rows and columns triangular_index(d, n); entry (p, p') = pair_psi(p, frak_q(p')).
LabeledMatrix matrix_N(int d, int n);

/// Rows triangular_index(d, n), columns A1(d; 1, n): the coefficients of
/// q_l(n) in the frak_q basis. Entries of dimension-0 vertices are
/// pairing-inert, so q_l(n) and q_l(n[l]) are identified.
LabeledMatrix matrix_M(int d, int n);

/// Row label of the entry (-1)^(l-1) (l-1)!/24 in the column of q_l(n).
std::string designated_row(const Genus1Generator& gen);

/// Brackets <p>, p in P(d), lie in the pairing-coordinate span of
/// {<p> : p in P(d, e-g+1)} and {J^lead(m) : m outside P(d, e-g+1)}.
bool spanning_check(int d, int g, int n, int e);

}  // namespace kappa
