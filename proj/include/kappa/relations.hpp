#pragma once

#include "kappa/kappa_poly.hpp"
#include "kappa/matrix.hpp"
#include "kappa/partition.hpp"
#include "kappa/rational.hpp"
#include "kappa/strata.hpp"

#include <string>
#include <variant>
#include <vector>

namespace kappa {

/// (-1)^(l+len p) / Aut(p) * prod p_i^(p_i-1)/p_i! * sum over injections
/// phi: parts of n -> parts of p of prod p_phi(i)^(1-n_i). Zero when n has
/// more parts than p.
Rational coeff_C(const Partition& n, int l, const Partition& p);

/// Leading term of the relation attached to m, as a bracket-basis expression
/// of degree d(m). Requires |m| > 2g-2+n-d.
FormalExpr j_lead(const Partition& m, int g, int n);

/// Rows m in P(d) \ P(d, 2g-2+n-d), columns p in P(d), entries
/// coeff_C(m^-, l(m), p).
LabeledMatrix c_matrix(int d, int g, int n);
std::size_t rank_C(int d, int g, int n);

/// (1/24) q_0(N + a) - sum_{i=1}^{N-1} C(N-2, i-1) q_i((N-i) + a).
KTrivialCycle ktrivial_basic(int N, const Partition& append = {});

/// Difference of the two expansions of (1/24) q_0(a, b + append); a > b >= 2.
KTrivialCycle ktrivial_ab(int a, int b, const Partition& append = {});

/// q_l(n[l]) + (1/24) sum over compositions m of l of
/// (-1)^|m| (m_1/l) multinomial(l; m) q_0(hat(m) + n).
KTrivialCycle ktrivial_lemma55(int l, const Partition& n);

/// Sum of c_i <psi(p), q_i> over the terms of the cycle.
Rational pair_cycle(const Partition& p, const KTrivialCycle& cycle);

/// True iff the cycle pairs to zero with psi(p) for every p in P(d).
bool verify_ktrivial(const KTrivialCycle& cycle);

enum class RelationKind { genus1_basic, genus1_appended, genus1_ab, lemma55, jlead };

std::string to_string(RelationKind kind);

/// A constructed relation together with the parameters used to build it.
struct RelationFamily {
    RelationKind kind;
    std::vector<int> integers;
    Partition partition;
    std::variant<KTrivialCycle, FormalExpr> realization;

    std::string describe() const;
};

RelationFamily make_basic(int N, const Partition& append = {});
RelationFamily make_ab(int a, int b, const Partition& append = {});
RelationFamily make_lemma55(int l, const Partition& n);
RelationFamily make_jlead(const Partition& m, int g, int n);

}  // namespace kappa
