#include "kappa/error.hpp"
#include "kappa/matrix.hpp"
#include "kappa/rational.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace kappa;

namespace {

LabeledMatrix numbered(std::size_t r, std::size_t c, std::vector<Rational> entries)
{
    std::vector<std::string> rl, cl;
    for (std::size_t i = 0; i < r; ++i)
        rl.push_back("r" + std::to_string(i));
    for (std::size_t j = 0; j < c; ++j)
        cl.push_back("c" + std::to_string(j));
    return LabeledMatrix(rl, cl, std::move(entries));
}

std::vector<std::vector<Rational>> rows_of(const LabeledMatrix& m)
{
    std::vector<std::vector<Rational>> out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.push_back(m.row(r));
    return out;
}

LabeledMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int sparsity)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7), zero(0, 9);
    std::vector<Rational> e;
    for (std::size_t i = 0; i < r * c; ++i) {
        Rational x = zero(rng) < sparsity ? Rational(0) : Rational(num(rng)) / den(rng);
        e.push_back(x);
    }
    return numbered(r, c, e);
}

}  // namespace

TEST_CASE("rationals are canonical and print exactly")
{
    Rational a = Rational(2) / 4;
    CHECK(a == Rational(1, 2));
    CHECK(to_fraction_string(a) == "1/2");
    CHECK(to_fraction_string(Rational(3)) == "3/1");
    CHECK(to_string(Rational(3)) == "3");
    CHECK(to_string(Rational(-1) / 24) == "-1/24");
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK(parse_rational(to_fraction_string(Rational(-35, 12))) == Rational(-35, 12));
}

TEST_CASE("factorial and binomial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    // 30! overflows 64 bits.
    CHECK(factorial(30).get_str() == "265252859812191058636308480000000");
}

TEST_CASE("labeled matrix bookkeeping")
{
    LabeledMatrix m({"a", "b"}, {"x", "y", "z"}, {1, 2, 3, 4, 5, 6});
    CHECK(m.at("b", "y") == 5);
    CHECK(m.row_index("b") == 1u);
    CHECK_FALSE(m.col_index("w").has_value());
    CHECK_THROWS_AS(m.at("c", "x"), DomainError);
    const auto t = m.transpose();
    CHECK(t.rows() == 3);
    CHECK(t.at("z", "a") == 3);
    CHECK_THROWS_AS(LabeledMatrix({"a", "a"}, {"x"}), DomainError);
    CHECK_THROWS_AS(LabeledMatrix({"a"}, {"x"}, {1, 2}), DomainError);
}

TEST_CASE("rank of small matrices")
{
    CHECK(rank(numbered(2, 2, {1, 2, 2, 4})) == 1);
    CHECK(rank(numbered(2, 2, {1, 2, 3, 4})) == 2);
    CHECK(rank(numbered(3, 3, {0, 0, 0, 0, 0, 0, 0, 0, 0})) == 0);
    CHECK(rank(numbered(0, 0, {})) == 0);
    CHECK(rank(numbered(2, 3, {Rational(1, 2), Rational(1, 3), 1, 3, 2, 6})) == 1);
    // Needs a column skip: first column is zero.
    CHECK(rank(numbered(3, 3, {0, 1, 2, 0, 2, 4, 0, 0, 1})) == 2);
}

TEST_CASE("fraction-free rank agrees with naive elimination")
{
    std::mt19937 rng(20240917);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> dim(1, 7), sp(0, 8);
        const auto r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
        auto m = random_matrix(rng, r, c, sp(rng));
        // Make some rows dependent.
        if (r >= 3) {
            for (std::size_t j = 0; j < c; ++j)
                m.at(r - 1, j) = m.at(0, j) * Rational(3, 2) - m.at(1, j);
        }
        const auto expected = oracle::naive_rank(rows_of(m));
        CHECK(rank(m) == expected);
        CHECK(rank(m.transpose()) == expected);
    }
}

TEST_CASE("inverse")
{
    auto m = numbered(3, 3, {2, 0, 1, 1, 1, 0, 0, 3, 1});
    auto inv = inverse(m);
    CHECK(inv.row_labels() == m.col_labels());
    auto oracle_inv = oracle::naive_inverse(rows_of(m));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(inv.at(i, j) == oracle_inv[i][j]);
    CHECK_THROWS_AS(inverse(numbered(2, 2, {1, 2, 2, 4})), DomainError);
    CHECK_THROWS_AS(inverse(numbered(2, 3, {1, 2, 3, 4, 5, 6})), DomainError);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_matrix(rng, 4, 4, 2);
        if (oracle::naive_rank(rows_of(a)) < 4)
            continue;
        auto b = inverse(a);
        for (std::size_t j = 0; j < 4; ++j) {
            auto col = b.column(j);
            auto prod = multiply(a, col);
            for (std::size_t i = 0; i < 4; ++i)
                CHECK(prod[i] == (i == j ? 1 : 0));
        }
    }
}

TEST_CASE("triangularity report")
{
    auto m = numbered(3, 3, {1, 5, 6, 0, 2, 7, 0, 0, 3});
    std::vector<std::string> rows{"r0", "r1", "r2"}, cols{"c0", "c1", "c2"};
    auto up = is_triangular(m, rows, cols, Triangle::upper);
    CHECK(up.triangular);
    CHECK(up.diagonal_nonzero);
    CHECK_FALSE(is_triangular(m, rows, cols, Triangle::lower).triangular);
    std::vector<std::string> rrows{"r2", "r1", "r0"}, rcols{"c2", "c1", "c0"};
    CHECK(is_triangular(m, rrows, rcols, Triangle::lower).triangular);
    m.at(1, 1) = 0;
    auto z = is_triangular(m, rows, cols, Triangle::upper);
    CHECK(z.triangular);
    CHECK_FALSE(z.diagonal_nonzero);
    std::vector<std::string> two{"c0", "c1"};
    CHECK_THROWS_AS(is_triangular(m, rows, two, Triangle::upper), DomainError);
    std::vector<std::string> bad{"r0", "r1", "nope"};
    CHECK_THROWS_AS(is_triangular(m, bad, cols, Triangle::upper), DomainError);
}

TEST_CASE("span membership")
{
    std::vector<std::string> labels{"a", "b", "c"};
    std::vector<LabeledVector> basis{{labels, {1, 0, 1}}, {labels, {0, 1, 1}}};
    CHECK(in_span({labels, {2, 3, 5}}, basis));
    CHECK_FALSE(in_span({labels, {0, 0, 1}}, basis));
    CHECK(in_span({labels, {0, 0, 0}}, {}));
    CHECK_FALSE(in_span({labels, {1, 0, 0}}, {}));
    CHECK_THROWS_AS(in_span({{"a", "b", "d"}, {1, 1, 1}}, basis), DomainError);
}
