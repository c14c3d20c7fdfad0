#include "kappa/rational.hpp"

#include <stdexcept>

namespace kappa {

std::string to_fraction_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Rational& r)
{
    return r.get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto valid = [](const std::string& part) {
        std::size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
        if (i == part.size())
            return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num) || !valid(den) || den[0] == '-')
        throw std::invalid_argument("not a rational: '" + s + "'");
    Integer d(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
}

Integer factorial(unsigned n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

std::size_t RationalHash::operator()(const Rational& r) const
{
    std::size_t h1 = mpz_get_ui(r.get_num().get_mpz_t());
    std::size_t h2 = mpz_get_ui(r.get_den().get_mpz_t());
    return h1 * 1000003u ^ h2 ^ static_cast<std::size_t>(mpz_sgn(r.get_num().get_mpz_t()) + 1);
}

}  // namespace kappa
