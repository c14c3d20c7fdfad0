#pragma once

#include "kappa/matrix.hpp"
#include "kappa/partition.hpp"
#include "kappa/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace kappa {

/// The moduli space a class lives on.
struct Ambient {
    int genus = 0;
    int markings = 0;

    /// 2g - 2 + n, the value of kappa_0.
    int kappa0() const { return 2 * genus - 2 + markings; }
    bool stable() const { return kappa0() > 0; }
    bool operator==(const Ambient&) const = default;
};

/// A polynomial in kappa_1, kappa_2, ... with exact coefficients. A monomial
/// prod kappa_{a_i} is keyed by the partition (a_i); the empty partition is
/// the constant monomial. kappa_0 never appears: it is the scalar 2g-2+n and
/// is folded into coefficients when it arises.
class KappaPoly {
public:
    using Terms = std::map<Partition, Rational, PartitionOrder>;

    KappaPoly() = default;
    explicit KappaPoly(Ambient ambient) : ambient_(ambient) {}
    KappaPoly(Ambient ambient, Terms terms);

    /// The monomial prod kappa_{p_i}.
    static KappaPoly monomial(Ambient ambient, const Partition& p, Rational coeff = 1);

    const Ambient& ambient() const { return ambient_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Partition& monomial) const;
    void add_term(const Partition& monomial, const Rational& coeff);

    /// Degree if every monomial has the same degree; nullopt for mixed
    /// degrees. The zero polynomial reports nullopt.
    std::optional<int> homogeneous_degree() const;

    /// Throws DomainError when ambients differ.
    KappaPoly& operator+=(const KappaPoly& other);
    KappaPoly& operator*=(const Rational& s);
    friend KappaPoly operator+(KappaPoly a, const KappaPoly& b) { return a += b; }
    friend KappaPoly operator*(KappaPoly a, const Rational& s) { return a *= s; }

    bool operator==(const KappaPoly&) const = default;

private:
    Ambient ambient_;
    Terms terms_;
};

/// Terms in order_key order of their index partition, e.g. "1*k1^2 + 1*k2".
std::string to_string(const KappaPoly& p);

enum class Basis { psi, kappa, bracket };

std::string_view to_string(Basis b);
Basis parse_basis(std::string_view text);

/// An element of the formal space freely generated by the partitions of d.
struct FormalExpr {
    int degree = 0;
    std::map<Partition, Rational, PartitionOrder> coeffs;

    explicit FormalExpr(int d = 0) : degree(d) {}
    static FormalExpr unit(const Partition& p);

    /// Throws DomainError when p is not a partition of `degree`.
    void add(const Partition& p, const Rational& c);
    bool operator==(const FormalExpr&) const = default;
};

/// psi(p): pushforward of prod psi_{n+i}^{p_i+1} along forgetting |p| points.
/// Throws DomainError when 2g-2+n <= 0.
KappaPoly psi_class(const Partition& p, int g, int n);

/// Sum over permutations of S_|p| of prod over cycles c of kappa_{sum of p over c}.
/// Independent of the pushforward engine; used to cross-check psi_class.
KappaPoly psi_class_oracle(const Partition& p, Ambient ambient = {0, 3});

/// Degree-j part of the pushforward of prod 1/(1 - p_i psi_{n+i}).
KappaPoly bracket(const Partition& p, int j, int g, int n);

/// Pushforward of prod psi_{n+i}^{e_i} along forgetting all listed points
/// onto a space with kappa_0 = c0 (exponents may be 0 or 1).
KappaPoly pushforward_psi(const std::vector<int>& exponents, int c0);

/// Linear extension of the chosen basis map.
KappaPoly evaluate_formal(const FormalExpr& phi, Basis via, int g, int n);

/// Columns: source classes (psi(p) or <p>^d) for p in P(d); rows: the kappa
/// monomials indexed by P(d); both in order_key order. `c0` = 2g-2+n is only
/// used for brackets.
LabeledMatrix change_basis(int d, Basis from, int c0 = 1);

/// Converts formal expressions in any basis to psi-basis coordinates for a
/// fixed degree and kappa_0 value.
class PsiCoordinates {
public:
    PsiCoordinates(int d, int c0);

    int degree() const { return degree_; }
    int c0() const { return c0_; }

    FormalExpr to_psi(const FormalExpr& phi, Basis basis) const;
    FormalExpr kappa_to_psi(const KappaPoly& k) const;

private:
    int degree_;
    int c0_;
    std::vector<Partition> index_;
    LabeledMatrix psi_to_kappa_inverse_;
    LabeledMatrix bracket_to_kappa_;
};

}  // namespace kappa
