#include "kappa/verify.hpp"

#include "kappa/intersect.hpp"
#include "kappa/kappa_poly.hpp"
#include "kappa/kappa_ring.hpp"
#include "kappa/relations.hpp"

#include <functional>
#include <stdexcept>

namespace kappa {

namespace {

template <class T>
std::string fmt(const T& v)
{
    if constexpr (std::is_same_v<T, bool>)
        return v ? "true" : "false";
    else if constexpr (std::is_same_v<T, Rational>)
        return to_fraction_string(v);
    else if constexpr (std::is_same_v<T, std::string>)
        return v;
    else
        return std::to_string(v);
}

class Collector {
public:
    template <class T>
    void check(std::string name, const T& expected, const T& got)
    {
        cases_.push_back({std::move(name), fmt(expected), fmt(got), expected == got});
    }
    std::vector<VerifyCase> take() { return std::move(cases_); }

private:
    std::vector<VerifyCase> cases_;
};

std::string ambient(int d, int g, int n)
{
    return "(d=" + std::to_string(d) + ",g=" + std::to_string(g) + ",n=" + std::to_string(n) + ")";
}

void genus0_relations(Collector& out, VerifyLimits lim)
{
    for (int n = 4; n <= lim.max_n; ++n)
        for (int d = 1; d <= std::min(n - 3, lim.max_d); ++d) {
            const auto r = rank_kappa_c(d, 0, n);
            out.check("rank " + ambient(d, 0, n), *r.formula_value, r.matrix_rank);
        }
    for (int n = 3; n <= lim.max_n; ++n)
        for (int d = 1; d <= std::min(n - 3, lim.max_d); ++d) {
            const auto qs = enum_Q(d, 0, n);
            const PsiCoordinates coords(d, n - 2);
            for (const auto& m : enumerate(d)) {
                if (static_cast<int>(m.length()) <= n - 2 - d)
                    continue;
                const auto psi = coords.to_psi(j_lead(m, 0, n), Basis::bracket);
                long nonzero = 0;
                for (const auto& q : qs)
                    nonzero += pair_psi_expr(psi, q) != 0;
                out.check("jlead nonzero pairings m=(" + to_string(m) + ") " + ambient(d, 0, n), 0L, nonzero);
            }
        }
}

void ktrivial(Collector& out, VerifyLimits lim)
{
    auto fits = [&](const KTrivialCycle& c) { return c.ambient().d <= lim.max_d && c.ambient().n <= lim.max_n; };
    auto record = [&](const RelationFamily& f) {
        const auto& c = std::get<KTrivialCycle>(f.realization);
        if (fits(c))
            out.check(f.describe() + " " + ambient(c.ambient().d, 1, c.ambient().n), true, verify_ktrivial(c));
    };
    for (int s = 0; s <= lim.max_n; ++s)
        for (const auto& a : enumerate(s)) {
            for (int N = 2; N + s <= lim.max_n; ++N)
                record(make_basic(N, a));
            for (int x = 3; x + s <= lim.max_n; ++x)
                for (int y = 2; y < x && x + y + s <= lim.max_n; ++y)
                    record(make_ab(x, y, a));
            for (int l = 1; l <= 3 && s + 2 * l <= lim.max_n; ++l)
                record(make_lemma55(l, a));
        }
}

void genus1_rank(Collector& out, VerifyLimits lim)
{
    for (int n = 2; n <= lim.max_n; ++n)
        for (int d = 1; d <= std::min(n - 1, lim.max_d); ++d) {
            const auto r = rank_kappa_c(d, 1, n);
            out.check("rank " + ambient(d, 1, n), *r.formula_value, r.matrix_rank);
        }
}

void bases(Collector& out, VerifyLimits lim)
{
    out.check("<tau_1>_1", Rational(1, 24), intersect::tau(1, {1}));
    out.check("<tau_2 tau_0>_1", Rational(1, 24), intersect::tau(1, {2, 0}));
    for (int d = 1; d <= lim.max_d; ++d) {
        for (const auto& p : enumerate(d))
            out.check("psi_class vs permutation sum p=(" + to_string(p) + ")", to_string(psi_class_oracle(p)),
                      to_string(psi_class(p, 0, 3)));
        const long full = static_cast<long>(enumerate(d).size());
        out.check("change_basis psi rank d=" + std::to_string(d), full,
                  static_cast<long>(rank(change_basis(d, Basis::psi))));
        for (int c0 = 1; c0 <= 3; ++c0)
            out.check("change_basis bracket rank d=" + std::to_string(d) + " c0=" + std::to_string(c0), full,
                      static_cast<long>(rank(change_basis(d, Basis::bracket, c0))));
    }
    for (int n = 3; n <= lim.max_n + 2; ++n)
        for (const auto& p : enumerate_at_most(n - 3, n)) {
            std::vector<int> exps(p.begin(), p.end());
            exps.resize(static_cast<std::size_t>(n), 0);
            out.check("genus-0 tau [" + to_string(p) + "] n=" + std::to_string(n), intersect::genus0_closed(exps),
                      intersect::tau(0, exps));
        }
}

void matrices(Collector& out, VerifyLimits lim)
{
    for (int d = 1; d <= lim.max_d; ++d)
        for (int n = d + 1; n <= 2 * d - 1; ++n) {
            const auto N = matrix_N(d, n);
            const auto tri = is_triangular(N, N.row_labels(), N.col_labels(), Triangle::upper);
            out.check("matrix_N triangular " + ambient(d, 1, n), true, tri.triangular && tri.diagonal_nonzero);
            const auto gens = generators_A(d, n);
            const auto M = matrix_M(d, n);
            out.check("matrix_M rank " + ambient(d, 1, n), static_cast<long>(gens.a1.size()),
                      static_cast<long>(rank(M)));
            for (const auto& gen : gens.a1) {
                const int l = gen.l;
                Rational expected = Rational(factorial(static_cast<unsigned>(l - 1))) / 24;
                if (l % 2 == 0)
                    expected = -expected;
                out.check("matrix_M designated entry " + to_string(gen.q), expected,
                          M.at(designated_row(gen), to_string(gen.q)));
            }
        }
    for (int d = 1; d <= lim.max_d; ++d)
        for (int n = d + 1; n <= 2 * d + 1; ++n) {
            const auto gens = generators_A(d, n);
            out.check("|A1|+|A2| " + ambient(d, 1, n), genus1_rank_formula(d, n),
                      static_cast<long>(gens.a1.size() + gens.a2.size()));
        }
}

}  // namespace

std::vector<std::string> suite_names()
{
    return {"genus0-relations", "ktrivial", "genus1-rank", "bases", "matrices"};
}

std::vector<VerifyCase> run_suite(std::string_view suite, VerifyLimits limits)
{
    static const std::vector<std::pair<std::string_view, std::function<void(Collector&, VerifyLimits)>>> table{
        {"genus0-relations", genus0_relations},
        {"ktrivial", ktrivial},
        {"genus1-rank", genus1_rank},
        {"bases", bases},
        {"matrices", matrices},
    };
    for (const auto& [name, fn] : table)
        if (name == suite) {
            Collector c;
            fn(c, limits);
            return c.take();
        }
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace kappa
