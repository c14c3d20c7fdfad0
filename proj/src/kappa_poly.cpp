#include "kappa/kappa_poly.hpp"

#include "kappa/error.hpp"
#include "mixed_poly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace kappa {

namespace detail {

void MixedPoly::add(MixedMonomial m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

namespace {

// Distinct kappa indices of a monomial with their multiplicities.
std::vector<std::pair<int, int>> grouped(const Partition& p)
{
    std::vector<std::pair<int, int>> out;
    for (int a : p) {
        if (!out.empty() && out.back().first == a)
            ++out.back().second;
        else
            out.emplace_back(a, 1);
    }
    return out;
}

}  // namespace

MixedPoly forget_one(const MixedPoly& m)
{
    if (m.forgettable < 1)
        throw DomainError("forget_one: no forgettable marking");
    MixedPoly out;
    out.c0 = m.c0;
    out.forgettable = m.forgettable - 1;
    // kappa_0 on the target space.
    const Rational kappa0(m.c0 + out.forgettable);

    for (const auto& [mono, coeff] : m.terms) {
        const int last = mono.psi.back();
        std::vector<int> base_psi(mono.psi.begin(), mono.psi.end() - 1);
        const auto groups = grouped(mono.kappa);

        // kappa_a = pi^* kappa_a + psi_last^a: choose how many copies of each
        // distinct kappa_a move onto psi_last.
        std::vector<int> take(groups.size(), 0);
        while (true) {
            Integer weight = 1;
            int t = last;
            std::vector<int> kept;
            for (std::size_t i = 0; i < groups.size(); ++i) {
                const auto [a, mult] = groups[i];
                weight *= binomial(mult, take[i]);
                t += a * take[i];
                kept.insert(kept.end(), static_cast<std::size_t>(mult - take[i]), a);
            }
            const Rational c = coeff * Rational(weight);
            if (t >= 2) {
                kept.push_back(t - 1);
                out.add({Partition(std::move(kept)), base_psi}, c);
            } else if (t == 1) {
                out.add({Partition(std::move(kept)), base_psi}, c * kappa0);
            } else {
                // String rule on the remaining psi classes.
                for (std::size_t j = 0; j < base_psi.size(); ++j) {
                    if (base_psi[j] == 0)
                        continue;
                    auto lowered = base_psi;
                    --lowered[j];
                    out.add({Partition(kept), std::move(lowered)}, c);
                }
            }

            std::size_t i = 0;
            while (i < groups.size() && take[i] == groups[i].second)
                take[i++] = 0;
            if (i == groups.size())
                break;
            ++take[i];
        }
    }
    return out;
}

}  // namespace detail

KappaPoly::KappaPoly(Ambient ambient, Terms terms) : ambient_(ambient)
{
    for (auto& [m, c] : terms)
        add_term(m, c);
}

KappaPoly KappaPoly::monomial(Ambient ambient, const Partition& p, Rational coeff)
{
    KappaPoly out(ambient);
    out.add_term(p, coeff);
    return out;
}

Rational KappaPoly::coefficient(const Partition& monomial) const
{
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Rational(0) : it->second;
}

void KappaPoly::add_term(const Partition& monomial, const Rational& coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(monomial, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::optional<int> KappaPoly::homogeneous_degree() const
{
    std::optional<int> deg;
    for (const auto& [m, c] : terms_) {
        if (deg && *deg != m.sum())
            return std::nullopt;
        deg = m.sum();
    }
    return deg;
}

KappaPoly& KappaPoly::operator+=(const KappaPoly& other)
{
    if (!(ambient_ == other.ambient_))
        throw DomainError("adding kappa classes from different moduli spaces");
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

KappaPoly& KappaPoly::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= s;
    return *this;
}

std::string to_string(const KappaPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : p.terms()) {
        Rational c = coeff;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0)
                c = -c;
        }
        first = false;
        out += to_string(c);
        // Ascending kappa index inside a monomial.
        std::vector<int> idx(mono.parts().rbegin(), mono.parts().rend());
        for (std::size_t i = 0; i < idx.size();) {
            std::size_t j = i;
            while (j < idx.size() && idx[j] == idx[i])
                ++j;
            out += "*k" + std::to_string(idx[i]);
            if (j - i > 1)
                out += "^" + std::to_string(j - i);
            i = j;
        }
    }
    return out;
}

std::string_view to_string(Basis b)
{
    switch (b) {
    case Basis::psi:
        return "psi";
    case Basis::kappa:
        return "kappa";
    case Basis::bracket:
        return "bracket";
    }
    return "?";
}

Basis parse_basis(std::string_view text)
{
    if (text == "psi")
        return Basis::psi;
    if (text == "kappa")
        return Basis::kappa;
    if (text == "bracket")
        return Basis::bracket;
    throw DomainError("unknown basis '" + std::string(text) + "'");
}

FormalExpr FormalExpr::unit(const Partition& p)
{
    FormalExpr out(p.sum());
    out.add(p, 1);
    return out;
}

void FormalExpr::add(const Partition& p, const Rational& c)
{
    if (p.sum() != degree)
        throw DomainError("partition " + to_string(p) + " is not of degree " + std::to_string(degree));
    if (c == 0)
        return;
    auto [it, inserted] = coeffs.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs.erase(it);
    }
}

namespace {

KappaPoly::Terms pushforward_terms(const std::vector<int>& exponents, int c0)
{
    if (c0 <= 0)
        throw DomainError("pushforward onto an unstable moduli space (2g-2+n = " + std::to_string(c0) + ")");
    detail::MixedPoly m;
    m.c0 = c0;
    m.forgettable = static_cast<int>(exponents.size());
    m.add({Partition{}, exponents}, 1);
    while (m.forgettable > 0)
        m = detail::forget_one(m);
    KappaPoly::Terms out;
    for (auto& [mono, c] : m.terms)
        out.emplace(mono.kappa, c);
    return out;
}

Ambient representative(int c0)
{
    return Ambient{0, c0 + 2};
}

void check_stable(int g, int n)
{
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0)
        throw DomainError("unstable moduli space M_{" + std::to_string(g) + "," + std::to_string(n) + "}");
}

// Bracket computed against kappa_0 = c0 only.
KappaPoly::Terms bracket_terms(const Partition& p, int j, int c0)
{
    KappaPoly::Terms out;
    if (j < 0)
        return out;
    const int len = static_cast<int>(p.length());
    const int total = j + len;

    // Accumulate prod p_i^{a_i} over exponent vectors a with sum = total,
    // grouped by the sorted vector (the pushforward is symmetric in a).
    std::map<std::vector<int>, Rational> weights;
    std::vector<int> a(static_cast<std::size_t>(len), 0);
    std::function<void(int, int, Integer)> rec = [&](int i, int left, Integer w) {
        if (i == len - 1) {
            a[static_cast<std::size_t>(i)] = left;
            Integer pw;
            mpz_pow_ui(pw.get_mpz_t(), Integer(p[static_cast<std::size_t>(i)]).get_mpz_t(),
                       static_cast<unsigned long>(left));
            auto key = a;
            std::sort(key.begin(), key.end(), std::greater<>());
            weights[key] += Rational(w * pw);
            return;
        }
        Integer pw = 1;
        for (int e = 0; e <= left; ++e) {
            a[static_cast<std::size_t>(i)] = e;
            rec(i + 1, left - e, w * pw);
            pw *= p[static_cast<std::size_t>(i)];
        }
    };
    if (len == 0) {
        if (j == 0)
            out.emplace(Partition{}, Rational(1));
        return out;
    }
    rec(0, total, Integer(1));

    KappaPoly acc(representative(c0));
    for (const auto& [exps, w] : weights)
        acc += KappaPoly(representative(c0), pushforward_terms(exps, c0)) * w;
    return acc.terms();
}

}  // namespace

KappaPoly pushforward_psi(const std::vector<int>& exponents, int c0)
{
    return KappaPoly(representative(c0), pushforward_terms(exponents, c0));
}

KappaPoly psi_class(const Partition& p, int g, int n)
{
    check_stable(g, n);
    std::vector<int> exps;
    for (int x : p)
        exps.push_back(x + 1);
    return KappaPoly(Ambient{g, n}, pushforward_terms(exps, 2 * g - 2 + n));
}

KappaPoly psi_class_oracle(const Partition& p, Ambient ambient)
{
    const std::size_t m = p.length();
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<Partition, Integer, PartitionOrder> counts;
    std::vector<char> seen(m);
    do {
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<int> mono;
        for (std::size_t s = 0; s < m; ++s) {
            if (seen[s])
                continue;
            int total = 0;
            for (std::size_t i = s; !seen[i]; i = perm[i]) {
                seen[i] = 1;
                total += p[i];
            }
            mono.push_back(total);
        }
        counts[Partition(std::move(mono))] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    KappaPoly out(ambient);
    for (const auto& [mono, c] : counts)
        out.add_term(mono, Rational(c));
    return out;
}

KappaPoly bracket(const Partition& p, int j, int g, int n)
{
    check_stable(g, n);
    return KappaPoly(Ambient{g, n}, bracket_terms(p, j, 2 * g - 2 + n));
}

KappaPoly evaluate_formal(const FormalExpr& phi, Basis via, int g, int n)
{
    check_stable(g, n);
    const Ambient amb{g, n};
    KappaPoly out(amb);
    for (const auto& [p, c] : phi.coeffs) {
        switch (via) {
        case Basis::psi:
            out += psi_class(p, g, n) * c;
            break;
        case Basis::kappa:
            out += KappaPoly::monomial(amb, p, c);
            break;
        case Basis::bracket:
            out += bracket(p, phi.degree, g, n) * c;
            break;
        }
    }
    return out;
}

LabeledMatrix change_basis(int d, Basis from, int c0)
{
    if (d < 0)
        throw DomainError("negative degree");
    const auto parts = enumerate(d);
    std::vector<std::string> labels;
    for (const auto& p : parts)
        labels.push_back(to_string(p));
    LabeledMatrix m(labels, labels);
    for (std::size_t col = 0; col < parts.size(); ++col) {
        KappaPoly::Terms column;
        switch (from) {
        case Basis::psi: {
            std::vector<int> exps;
            for (int x : parts[col])
                exps.push_back(x + 1);
            column = pushforward_terms(exps, std::max(c0, 1));
            break;
        }
        case Basis::bracket:
            column = bracket_terms(parts[col], d, c0);
            break;
        case Basis::kappa:
            column.emplace(parts[col], Rational(1));
            break;
        }
        for (const auto& [mono, c] : column) {
            auto row = m.row_index(to_string(mono));
            if (!row)
                throw DomainError("kappa monomial of unexpected degree in basis change");
            m.at(*row, col) = c;
        }
    }
    return m;
}

PsiCoordinates::PsiCoordinates(int d, int c0)
    : degree_(d), c0_(c0), index_(enumerate(d))
{
    if (c0 <= 0)
        throw DomainError("unstable moduli space (2g-2+n <= 0)");
    psi_to_kappa_inverse_ = inverse(change_basis(d, Basis::psi));
    bracket_to_kappa_ = change_basis(d, Basis::bracket, c0);
}

FormalExpr PsiCoordinates::kappa_to_psi(const KappaPoly& k) const
{
    std::vector<Rational> v(index_.size());
    for (const auto& [mono, c] : k.terms()) {
        if (mono.sum() != degree_)
            throw DomainError("kappa class is not homogeneous of degree " + std::to_string(degree_));
        auto it = std::find(index_.begin(), index_.end(), mono);
        v[static_cast<std::size_t>(it - index_.begin())] = c;
    }
    const auto w = multiply(psi_to_kappa_inverse_, v);
    FormalExpr out(degree_);
    for (std::size_t i = 0; i < index_.size(); ++i)
        out.add(index_[i], w[i]);
    return out;
}

FormalExpr PsiCoordinates::to_psi(const FormalExpr& phi, Basis basis) const
{
    if (phi.degree != degree_)
        throw DomainError("formal expression has degree " + std::to_string(phi.degree) + ", expected " +
                          std::to_string(degree_));
    if (basis == Basis::psi)
        return phi;
    std::vector<Rational> src(index_.size());
    for (std::size_t i = 0; i < index_.size(); ++i) {
        auto it = phi.coeffs.find(index_[i]);
        if (it != phi.coeffs.end())
            src[i] = it->second;
    }
    std::vector<Rational> kappa_coords = src;
    if (basis == Basis::bracket)
        kappa_coords = multiply(bracket_to_kappa_, src);
    const auto w = multiply(psi_to_kappa_inverse_, kappa_coords);
    FormalExpr out(degree_);
    for (std::size_t i = 0; i < index_.size(); ++i)
        out.add(index_[i], w[i]);
    return out;
}

}  // namespace kappa
