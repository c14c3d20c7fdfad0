#include "kappa/relations.hpp"

#include "kappa/error.hpp"
#include "kappa/parallel.hpp"

#include <functional>

namespace kappa {

namespace {

Integer ipow(long base, unsigned long exp)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return r;
}

// p^e for integers p >= 1 and possibly negative e.
Rational rpow(int p, int e)
{
    if (e >= 0)
        return Rational(ipow(p, static_cast<unsigned long>(e)));
    return Rational(Integer(1), ipow(p, static_cast<unsigned long>(-e)));
}

Rational injection_sum(const Partition& n, const Partition& p)
{
    std::vector<bool> used(p.length(), false);
    std::function<Rational(std::size_t)> rec = [&](std::size_t i) -> Rational {
        if (i == n.length())
            return 1;
        Rational total = 0;
        for (std::size_t j = 0; j < p.length(); ++j) {
            if (used[j])
                continue;
            used[j] = true;
            total += rpow(p[j], 1 - n[i]) * rec(i + 1);
            used[j] = false;
        }
        return total;
    };
    return rec(0);
}

}  // namespace

Rational coeff_C(const Partition& n, int l, const Partition& p)
{
    if (n.length() > p.length())
        return 0;
    Rational c = Rational(1) / Rational(aut(p));
    for (int part : p)
        c *= Rational(ipow(part, static_cast<unsigned long>(part - 1))) / Rational(factorial(part));
    if ((l + static_cast<long>(p.length())) % 2 != 0)
        c = -c;
    return c * injection_sum(n, p);
}

FormalExpr j_lead(const Partition& m, int g, int n)
{
    const int d = m.sum();
    const int bound = 2 * g - 2 + n - d;
    const int l = static_cast<int>(m.length()) - bound;
    if (l <= 0)
        throw DomainError("j_lead needs more than " + std::to_string(bound) + " parts, got (" + to_string(m) + ")");
    const Partition n_minus = minus(m);
    FormalExpr out(d);
    for (const auto& p : enumerate(d))
        out.add(p, coeff_C(n_minus, l, p));
    return out;
}

LabeledMatrix c_matrix(int d, int g, int n)
{
    const int bound = 2 * g - 2 + n - d;
    const auto all = enumerate(d);
    std::vector<Partition> rows;
    for (const auto& m : all)
        if (static_cast<int>(m.length()) > bound)
            rows.push_back(m);
    std::vector<std::string> row_labels, col_labels;
    for (const auto& m : rows)
        row_labels.push_back(to_string(m));
    for (const auto& p : all)
        col_labels.push_back(to_string(p));
    LabeledMatrix out(std::move(row_labels), std::move(col_labels));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Partition n_minus = minus(rows[r]);
        const int l = static_cast<int>(rows[r].length()) - bound;
        for (std::size_t c = 0; c < all.size(); ++c)
            out.at(r, c) = coeff_C(n_minus, l, all[c]);
    }
    return out;
}

std::size_t rank_C(int d, int g, int n)
{
    return rank(c_matrix(d, g, n));
}

KTrivialCycle ktrivial_basic(int N, const Partition& append)
{
    if (N < 2)
        throw DomainError("ktrivial_basic needs N >= 2");
    KTrivialCycle cycle;
    cycle.add_genus1(0, Partition{N} | append, Rational(1, 24));
    for (int i = 1; i <= N - 1; ++i)
        cycle.add_genus1(i, Partition{N - i} | append, -Rational(binomial(N - 2, i - 1)));
    return cycle;
}

KTrivialCycle ktrivial_ab(int a, int b, const Partition& append)
{
    if (!(a > b && b >= 2))
        throw DomainError("ktrivial_ab needs a > b >= 2");
    KTrivialCycle cycle;
    for (int i = 1; i <= a - 1; ++i)
        cycle.add_genus1(i, Partition{a - i, b} | append, Rational(binomial(a - 2, i - 1)));
    for (int i = 1; i <= b - 1; ++i)
        cycle.add_genus1(i, Partition{a, b - i} | append, -Rational(binomial(b - 2, i - 1)));
    return cycle;
}

KTrivialCycle ktrivial_lemma55(int l, const Partition& n)
{
    if (l < 1)
        throw DomainError("ktrivial_lemma55 needs l >= 1");
    KTrivialCycle cycle;
    cycle.add_genus1(l, pad(n, l), 1);
    for (const auto& m : compositions(l)) {
        Rational c = Rational(m.parts.front()) / l * Rational(multinomial(m)) / 24;
        if (m.parts.size() % 2 != 0)
            c = -c;
        cycle.add_genus1(0, hat(m) | n, c);
    }
    return cycle;
}

Rational pair_cycle(const Partition& p, const KTrivialCycle& cycle)
{
    Rational total = 0;
    for (const auto& [q, c] : cycle.terms())
        total += c * pair_psi(p, q);
    return total;
}

bool verify_ktrivial(const KTrivialCycle& cycle)
{
    if (cycle.empty())
        return true;
    const auto ps = enumerate(cycle.ambient().d);
    std::vector<char> zero(ps.size(), 0);
    parallel_for(ps.size(), [&](std::size_t i) { zero[i] = pair_cycle(ps[i], cycle) == 0; });
    for (char z : zero)
        if (!z)
            return false;
    return true;
}

std::string to_string(RelationKind kind)
{
    switch (kind) {
    case RelationKind::genus1_basic: return "genus1_basic";
    case RelationKind::genus1_appended: return "genus1_appended";
    case RelationKind::genus1_ab: return "genus1_ab";
    case RelationKind::lemma55: return "lemma55";
    case RelationKind::jlead: return "jlead";
    }
    return "?";
}

std::string RelationFamily::describe() const
{
    std::string s = to_string(kind) + "(";
    for (std::size_t i = 0; i < integers.size(); ++i)
        s += (i ? "," : "") + std::to_string(integers[i]);
    if (!partition.empty() || kind == RelationKind::lemma55 || kind == RelationKind::jlead)
        s += ";[" + to_string(partition) + "]";
    return s + ")";
}

RelationFamily make_basic(int N, const Partition& append)
{
    return {append.empty() ? RelationKind::genus1_basic : RelationKind::genus1_appended, {N}, append,
            ktrivial_basic(N, append)};
}

RelationFamily make_ab(int a, int b, const Partition& append)
{
    return {RelationKind::genus1_ab, {a, b}, append, ktrivial_ab(a, b, append)};
}

RelationFamily make_lemma55(int l, const Partition& n)
{
    return {RelationKind::lemma55, {l}, n, ktrivial_lemma55(l, n)};
}

RelationFamily make_jlead(const Partition& m, int g, int n)
{
    return {RelationKind::jlead, {g, n}, m, j_lead(m, g, n)};
}

}  // namespace kappa
