#include "kappa/kappa_ring.hpp"

#include "kappa/error.hpp"
#include "kappa/kappa_poly.hpp"
#include "kappa/parallel.hpp"
#include "kappa/relations.hpp"

#include <json.hpp>

namespace kappa {

std::optional<bool> RankReport::agrees() const
{
    if (!formula_value)
        return std::nullopt;
    return *formula_value == matrix_rank;
}

std::string to_json(const RankReport& r)
{
    nlohmann::ordered_json j;
    j["d"] = r.d;
    j["g"] = r.g;
    j["n"] = r.n;
    j["rank"] = r.matrix_rank;
    j["formula"] = r.formula_value ? nlohmann::ordered_json(*r.formula_value) : nlohmann::ordered_json(nullptr);
    auto a = r.agrees();
    j["agrees"] = a ? nlohmann::ordered_json(*a) : nlohmann::ordered_json(nullptr);
    return j.dump();
}

LabeledMatrix pairing_matrix(int d, int g, int n)
{
    const auto qs = enum_Q(d, g, n);
    const auto ps = enumerate(d);
    std::vector<std::string> rows, cols;
    for (const auto& p : ps)
        rows.push_back(to_string(p));
    for (const auto& q : qs)
        cols.push_back(to_string(q));
    LabeledMatrix m(std::move(rows), std::move(cols));
    const std::size_t nc = qs.size();
    parallel_for(ps.size() * nc, [&](std::size_t k) { m.at(k / nc, k % nc) = pair_psi(ps[k / nc], qs[k % nc]); });
    return m;
}

RankReport rank_kappa_c(int d, int g, int n)
{
    const auto m = pairing_matrix(d, g, n);
    RankReport r;
    r.d = d;
    r.g = g;
    r.n = n;
    r.matrix_rank = static_cast<long>(rank(m));
    r.p_count = static_cast<long>(m.rows());
    r.q_count = static_cast<long>(m.cols());
    if (g == 1)
        r.formula_value = genus1_rank_formula(d, n);
    else if (g == 0)
        r.formula_value = static_cast<long>(enumerate_at_most(d, n - 2 - d).size());
    return r;
}

long genus1_rank_formula(int d, int n)
{
    if (d < 0 || d > n)
        throw DomainError("genus1_rank_formula needs 0 <= d <= n");
    return static_cast<long>(enumerate_bounded(d, 1, n - d).size());
}

Rational asymptotic_formula(int g, int e, int n)
{
    return Rational(binomial(n + e, e) * binomial(g + e, e)) / Rational(factorial(static_cast<unsigned>(e + 1)));
}

GeneratorSets generators_A(int d, int n)
{
    const int k = n - d;
    if (k < 1)
        throw DomainError("generators_A needs n - d >= 1");
    GeneratorSets out;
    for (int l = 1; l <= 2 * d - n; ++l)
        for (const auto& parts : enumerate_exact_len(n - l, k))
            if (parts.parts().back() >= 2)
                out.a1.push_back({l, parts, genus1_q(l, parts)});
    for (int l = 1; l <= d; ++l)
        for (const auto& rest : enumerate_exact_len(n - l - 1, k - 1))
            if (rest.empty() || rest[0] <= l + 1) {
                Partition parts = Partition{1} | rest;
                out.a2.push_back({l, parts, genus1_q(l, parts)});
            }
    return out;
}

ThetaMultiset frak_q(const Partition& m)
{
    return genus1_q(0, hat(m));
}

std::vector<Partition> triangular_index(int d, int n)
{
    std::vector<Partition> out;
    for (auto& p : enumerate(d))
        if (static_cast<int>(p.length()) > n - d)
            out.push_back(std::move(p));
    return out;
}

namespace {

std::vector<std::string> labels(const std::vector<Partition>& ps)
{
    std::vector<std::string> out;
    for (const auto& p : ps)
        out.push_back(to_string(p));
    return out;
}

}  // namespace

LabeledMatrix matrix_N(int d, int n)
{
    if (n > 2 * d)
        throw DomainError("matrix_N needs n <= 2d");
    const auto index = triangular_index(d, n);
    LabeledMatrix m(labels(index), labels(index));
    const std::size_t sz = index.size();
    parallel_for(sz * sz, [&](std::size_t k) { m.at(k / sz, k % sz) = pair_psi(index[k / sz], frak_q(index[k % sz])); });
    return m;
}

LabeledMatrix matrix_M(int d, int n)
{
    const auto gens = generators_A(d, n).a1;
    const auto index = triangular_index(d, n);
    std::vector<std::string> cols;
    for (const auto& gen : gens)
        cols.push_back(to_string(gen.q));
    LabeledMatrix m(labels(index), std::move(cols));
    for (std::size_t c = 0; c < gens.size(); ++c) {
        const int l = gens[c].l;
        const Partition tail = minus(gens[c].parts);
        for (const auto& comp : compositions(l)) {
            Rational coeff = Rational(comp.parts.front()) / l * Rational(multinomial(comp)) / 24;
            if (comp.parts.size() % 2 == 0)
                coeff = -coeff;
            const auto r = m.row_index(to_string(Partition(comp.parts) | tail));
            if (!r)
                throw std::logic_error("matrix_M: row outside the index set");
            m.at(*r, c) += coeff;
        }
    }
    return m;
}

std::string designated_row(const Genus1Generator& gen)
{
    return to_string(pad(minus(gen.parts), gen.l));
}

bool spanning_check(int d, int g, int n, int e)
{
    if (e != 3 * g - 3 + n - d)
        throw DomainError("spanning_check needs e = 3g-3+n-d");
    const int k = e - g + 1;
    const auto pairing = pairing_matrix(d, g, n);
    const auto ps = enumerate(d);
    const PsiCoordinates coords(d, 2 * g - 2 + n);
    const std::size_t nq = pairing.cols();

    auto coordinates = [&](const FormalExpr& bracket_expr) {
        const FormalExpr psi = coords.to_psi(bracket_expr, Basis::bracket);
        std::vector<Rational> v(nq, 0);
        for (const auto& [p, c] : psi.coeffs) {
            const auto r = *pairing.row_index(to_string(p));
            for (std::size_t j = 0; j < nq; ++j)
                v[j] += c * pairing.at(r, j);
        }
        return v;
    };

    std::vector<Rational> spanning, everything;
    std::size_t spanning_rows = 0;
    for (const auto& p : ps) {
        const auto v = coordinates(FormalExpr::unit(p));
        everything.insert(everything.end(), v.begin(), v.end());
        if (static_cast<int>(p.length()) <= k) {
            spanning.insert(spanning.end(), v.begin(), v.end());
            ++spanning_rows;
        }
    }
    for (const auto& m : ps) {
        if (static_cast<int>(m.length()) <= k)
            continue;
        const auto v = coordinates(j_lead(m, g, n));
        spanning.insert(spanning.end(), v.begin(), v.end());
        ++spanning_rows;
    }
    const std::size_t base = rank(spanning, spanning_rows, nq);
    std::vector<Rational> combined = spanning;
    combined.insert(combined.end(), everything.begin(), everything.end());
    return rank(combined, spanning_rows + ps.size(), nq) == base;
}

}  // namespace kappa
