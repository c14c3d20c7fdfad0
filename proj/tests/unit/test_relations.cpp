#include "kappa/error.hpp"
#include "kappa/kappa_poly.hpp"
#include "kappa/relations.hpp"

#include <doctest.h>

#include <map>

using namespace kappa;

namespace {

using Expansion = std::map<ThetaMultiset, Rational>;

void accumulate(Expansion& into, const Expansion& from, const Rational& scale)
{
    for (const auto& [q, c] : from) {
        into[q] += scale * c;
        if (into[q] == 0)
            into.erase(q);
    }
}

// q_l(n[l]) in terms of q_0 multisets, obtained by peeling off the i = l term
// of the basic relation with N = l + 1 and recursing on the others.
Expansion expand_recursively(int l, const Partition& n)
{
    Expansion out;
    out[genus1_q(0, pad(Partition{l + 1} | n, l - 1))] = Rational(1, 24);
    for (int i = 1; i <= l - 1; ++i)
        accumulate(out, expand_recursively(l - i, hat(Partition{i}) | n), -Rational(binomial(l - 1, i)));
    return out;
}

Expansion closed_form(int l, const Partition& n)
{
    Expansion out;
    const auto cycle = ktrivial_lemma55(l, n);
    for (const auto& [q, c] : cycle.terms())
        if (q.entries().front().genus == 0)
            out[q] = -c;
    return out;
}

}  // namespace

TEST_CASE("coeff_C values")
{
    CHECK(coeff_C(Partition{1}, 1, Partition{2}) == 1);
    CHECK(coeff_C(Partition{}, 1, Partition{1, 1}) == Rational(-1, 2));
    CHECK(coeff_C(Partition{1}, 1, Partition{1, 1}) == -1);
    CHECK(coeff_C(Partition{2}, 1, Partition{2, 1}) == Rational(-3, 2));
    CHECK(coeff_C(Partition{1, 1, 1}, 2, Partition{2, 1}) == 0);
    for (int d = 1; d <= 5; ++d)
        for (const auto& p : enumerate(d))
            for (const auto& n : enumerate(3)) {
                CHECK(coeff_C(n, 1, p) == -coeff_C(n, 2, p));
                CHECK(coeff_C(n, 2, p) == coeff_C(n, 4, p));
            }
}

TEST_CASE("j_lead")
{
    CHECK_THROWS_AS(j_lead(Partition{2}, 1, 3), DomainError);
    const auto j = j_lead(Partition{1, 1}, 0, 4);
    CHECK(j.degree == 2);
    for (int d = 1; d <= 6; ++d)
        for (const auto& m : enumerate(d)) {
            const int bound = 2 * 1 - 2 + 5 - d;
            if (static_cast<int>(m.length()) <= bound)
                continue;
            const auto jl = j_lead(m, 1, 5);
            const auto mm = minus(m);
            for (const auto& [p, c] : jl.coeffs)
                if (p.length() < mm.length())
                    CHECK(c == 0);
        }
}

TEST_CASE("leading terms vanish on every genus-zero multiset")
{
    for (int n = 3; n <= 8; ++n)
        for (int d = 1; d <= std::min(5, n - 3); ++d) {
            const PsiCoordinates coords(d, n - 2);
            const auto qs = enum_Q(d, 0, n);
            for (const auto& m : enumerate(d)) {
                if (static_cast<int>(m.length()) <= n - 2 - d)
                    continue;
                const auto psi = coords.to_psi(j_lead(m, 0, n), Basis::bracket);
                for (const auto& q : qs)
                    CHECK_MESSAGE(pair_psi_expr(psi, q) == 0, to_string(m), " ", to_string(q));
            }
        }
}

TEST_CASE("the C matrix has full row rank")
{
    for (int d = 0; d <= 6; ++d)
        for (int g = 0; g <= 2; ++g)
            for (int n = 0; n <= 8; ++n) {
                const auto rows = enumerate(d).size() - enumerate_at_most(d, 2 * g - 2 + n - d).size();
                const auto c = c_matrix(d, g, n);
                CHECK(c.rows() == rows);
                CHECK(c.cols() == enumerate(d).size());
                CHECK(rank_C(d, g, n) == rows);
            }
    CHECK(c_matrix(3, 1, 6).rows() == 0);
}

TEST_CASE("basic genus-one relation")
{
    const auto c = ktrivial_basic(2);
    CHECK(c.terms().size() == 2);
    CHECK(c.terms().at(ThetaMultiset{{0, 4}}) == Rational(1, 24));
    CHECK(c.terms().at(ThetaMultiset{{1, 1}, {0, 3}}) == -1);
    CHECK(pair_cycle(Partition{1}, c) == 0);
    CHECK(verify_ktrivial(c));
    for (int N = 2; N <= 7; ++N) {
        const auto cyc = ktrivial_basic(N);
        CHECK(cyc.terms().size() == static_cast<std::size_t>(N));
        for (int i = 1; i <= N - 1; ++i)
            CHECK(cyc.terms().at(genus1_q(i, Partition{N - i})) == -Rational(binomial(N - 2, i - 1)));
        CHECK(verify_ktrivial(cyc));
        CHECK(verify_ktrivial(ktrivial_basic(N, Partition{2, 1})));
    }
    CHECK_THROWS_AS(ktrivial_basic(1), DomainError);
}

TEST_CASE("two-part genus-one relation")
{
    const auto c = ktrivial_ab(3, 2);
    CHECK(c.terms().size() == 3);
    CHECK(c.terms().at(genus1_q(1, Partition{2, 2})) == 1);
    CHECK(c.terms().at(genus1_q(2, Partition{1, 2})) == 1);
    CHECK(c.terms().at(genus1_q(1, Partition{3, 1})) == -1);
    CHECK(verify_ktrivial(c));
    for (int a = 3; a <= 6; ++a)
        for (int b = 2; b < a; ++b)
            CHECK(verify_ktrivial(ktrivial_ab(a, b, Partition{1})));
    CHECK_THROWS_AS(ktrivial_ab(2, 2), DomainError);
    CHECK_THROWS_AS(ktrivial_ab(3, 1), DomainError);
}

TEST_CASE("closed-form genus-one relation")
{
    for (int l = 1; l <= 4; ++l)
        CHECK(compositions(l).size() == (1u << (l - 1)));
    // l = 1 is the basic relation with N = 2 up to sign.
    for (const auto& n : {Partition{}, Partition{1}, Partition{3, 2}}) {
        const auto a = ktrivial_lemma55(1, n);
        const auto b = ktrivial_basic(2, n);
        REQUIRE(a.terms().size() == b.terms().size());
        for (const auto& [q, c] : a.terms())
            CHECK(b.terms().at(q) == -c);
    }
    // Compositions with the same parts merge into one multiset.
    const auto c3 = ktrivial_lemma55(3, Partition{});
    CHECK(c3.terms().at(genus1_q(0, Partition{3, 2, 1})) == Rational(1, 8));
    CHECK(c3.terms().at(genus1_q(3, Partition{1, 1, 1})) == 1);
    for (int l = 1; l <= 3; ++l)
        for (const auto& n : {Partition{}, Partition{1}, Partition{2}, Partition{2, 1}, Partition{3}})
            CHECK(verify_ktrivial(ktrivial_lemma55(l, n)));
    CHECK_THROWS_AS(ktrivial_lemma55(0, Partition{1}), DomainError);
}

TEST_CASE("closed form agrees with the recursive expansion")
{
    for (int l = 1; l <= 6; ++l)
        for (const auto& n : {Partition{}, Partition{1}, Partition{2, 1}, Partition{4}})
            CHECK_MESSAGE(expand_recursively(l, n) == closed_form(l, n), "l=", l, " n=", to_string(n));
}

TEST_CASE("verify_ktrivial rejects non-trivial cycles")
{
    CHECK(verify_ktrivial(KTrivialCycle{}));
    KTrivialCycle single(CycleAmbient{1, 1, 2});
    single.add(ThetaMultiset{{0, 4}}, 1);
    CHECK_FALSE(verify_ktrivial(single));
    auto broken = ktrivial_basic(4);
    broken.add_genus1(1, Partition{3}, Rational(1, 1000));
    CHECK_FALSE(verify_ktrivial(broken));
}

TEST_CASE("relation families")
{
    const auto f = make_basic(3);
    CHECK(f.kind == RelationKind::genus1_basic);
    CHECK(make_basic(3, Partition{2}).kind == RelationKind::genus1_appended);
    CHECK(f.describe() == "genus1_basic(3)");
    CHECK(make_ab(4, 2, Partition{1}).describe() == "genus1_ab(4,2;[1])");
    CHECK(make_lemma55(2, Partition{}).describe() == "lemma55(2;[])");
    const auto j = make_jlead(Partition{1, 1}, 0, 4);
    CHECK(std::holds_alternative<FormalExpr>(j.realization));
    const auto& cyc = std::get<KTrivialCycle>(make_ab(5, 3).realization);
    CHECK(cyc.ambient() == CycleAmbient{6, 1, 8});
}
