#include "kappa/intersect.hpp"

#include "kappa/error.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace kappa::intersect {

namespace {

struct QueryHash {
    std::size_t operator()(const TauQuery& q) const noexcept
    {
        std::size_t h = static_cast<std::size_t>(q.genus) * 0x9e3779b97f4a7c15ull;
        for (int a : q.exponents)
            h = (h ^ static_cast<std::size_t>(a + 1)) * 0x100000001b3ull;
        return h;
    }
};

class Memo {
public:
    bool find(const TauQuery& q, Rational& out) const
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(q);
        if (it == table_.end())
            return false;
        out = it->second;
        return true;
    }

    void insert(const TauQuery& q, const Rational& v)
    {
        std::unique_lock lock(mutex_);
        table_.insert_or_assign(q, v);
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

    void clear()
    {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

    std::vector<std::pair<TauQuery, Rational>> snapshot() const
    {
        std::shared_lock lock(mutex_);
        return {table_.begin(), table_.end()};
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<TauQuery, Rational, QueryHash> table_;
};

Memo& memo()
{
    static Memo m;
    return m;
}

// (2k-1)!! with (-1)!! = 1.
Integer double_factorial_odd(int k)
{
    Integer out = 1;
    for (int i = 2 * k - 1; i > 1; i -= 2)
        out *= i;
    return out;
}

Rational compute(const TauQuery& q);

// tau() for queries that may be unstable; unstable correlators vanish.
Rational tau_or_zero(int genus, std::vector<int> exps)
{
    TauQuery q(genus, std::move(exps));
    if (!q.stable())
        return 0;
    return tau(q);
}

Rational compute(const TauQuery& q)
{
    const int g = q.genus;
    const auto& e = q.exponents;  // decreasing
    const int n = static_cast<int>(e.size());

    if (g == 0 && n == 3)
        return 1;  // <tau_0^3>_0, the only dimension-matched 3-point genus-0 query
    if (g == 1 && n == 1)
        return Rational(1, 24);  // <tau_1>_1

    // String equation: remove a tau_0.
    if (e.back() == 0) {
        std::vector<int> rest(e.begin(), e.end() - 1);
        Rational sum = 0;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (rest[i] == 0 || (i > 0 && rest[i] == rest[i - 1]))
                continue;
            const auto mult = std::count(rest.begin(), rest.end(), rest[i]);
            std::vector<int> lowered = rest;
            lowered[i] -= 1;
            sum += Rational(static_cast<long>(mult)) * tau(TauQuery(g, std::move(lowered)));
        }
        return sum;
    }

    // Dilaton equation: remove a tau_1.
    if (e.back() == 1) {
        std::vector<int> rest(e.begin(), e.end() - 1);
        return Rational(2 * g - 2 + n - 1) * tau(TauQuery(g, std::move(rest)));
    }

    // All exponents >= 2. Genus 0 cannot be dimension matched here.
    if (g == 0)
        return 0;

    // DVV recursion on the largest exponent k+1.
    const int k = e.front() - 1;
    const std::vector<int> others(e.begin() + 1, e.end());
    const int m = static_cast<int>(others.size());

    Rational total = 0;
    for (int j = 0; j < m; ++j) {
        std::vector<int> next = others;
        next[static_cast<std::size_t>(j)] += k;
        Rational coeff(double_factorial_odd(k + others[static_cast<std::size_t>(j)] + 1),
                       double_factorial_odd(others[static_cast<std::size_t>(j)]));
        coeff.canonicalize();
        total += coeff * tau_or_zero(g, std::move(next));
    }

    Rational splits = 0;
    for (int r = 0; r <= k - 1; ++r) {
        const int s = k - 1 - r;
        const Rational weight(double_factorial_odd(r + 1) * double_factorial_odd(s + 1));

        std::vector<int> loop = others;
        loop.push_back(r);
        loop.push_back(s);
        splits += weight * tau_or_zero(g - 1, std::move(loop));

        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            std::vector<int> left{r}, right{s};
            for (int i = 0; i < m; ++i)
                (mask & (1u << i) ? left : right).push_back(others[static_cast<std::size_t>(i)]);
            for (int g1 = 0; g1 <= g; ++g1) {
                Rational a = tau_or_zero(g1, left);
                if (a == 0)
                    continue;
                splits += weight * a * tau_or_zero(g - g1, right);
            }
        }
    }
    total += splits / 2;
    return total / Rational(double_factorial_odd(k + 2));
}

}  // namespace

TauQuery::TauQuery(int g, std::vector<int> exps) : genus(g), exponents(std::move(exps))
{
    std::sort(exponents.begin(), exponents.end(), std::greater<>());
}

bool TauQuery::dimension_matched() const
{
    const int total = std::accumulate(exponents.begin(), exponents.end(), 0);
    return total == 3 * genus - 3 + static_cast<int>(points());
}

Rational tau(const TauQuery& q)
{
    if (q.genus < 0)
        throw DomainError("negative genus");
    for (int a : q.exponents)
        if (a < 0)
            throw DomainError("negative psi exponent");
    if (!q.stable())
        throw DomainError("unstable intersection query: genus " + std::to_string(q.genus) + " with " +
                          std::to_string(q.points()) + " points");
    if (!q.dimension_matched())
        return 0;
    Rational value;
    if (memo().find(q, value))
        return value;
    value = compute(q);
    memo().insert(q, value);
    return value;
}

Rational tau(int genus, std::vector<int> exponents)
{
    return tau(TauQuery(genus, std::move(exponents)));
}

Rational genus0_closed(const std::vector<int>& exponents)
{
    const int n = static_cast<int>(exponents.size());
    if (n < 3)
        throw DomainError("genus-0 closed form needs at least three points");
    int total = 0;
    for (int a : exponents) {
        if (a < 0)
            throw DomainError("negative psi exponent");
        total += a;
    }
    if (total != n - 3)
        return 0;
    Integer den = 1;
    for (int a : exponents)
        den *= factorial(static_cast<unsigned>(a));
    Rational out(factorial(static_cast<unsigned>(n - 3)), den);
    out.canonicalize();
    return out;
}

std::size_t cache_size()
{
    return memo().size();
}

void clear_cache()
{
    memo().clear();
}

std::string format_record(const TauQuery& q, const Rational& value)
{
    std::string out = std::to_string(q.genus) + "|";
    for (std::size_t i = 0; i < q.exponents.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(q.exponents[i]);
    }
    return out + "|" + to_fraction_string(value);
}

std::size_t load_cache(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        return 0;
    std::size_t loaded = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        auto bar1 = line.find('|');
        auto bar2 = line.find('|', bar1 + 1);
        if (bar1 == std::string::npos || bar2 == std::string::npos)
            throw DomainError("malformed cache record: " + line);
        TauQuery q;
        Rational value;
        try {
            q.genus = std::stoi(line.substr(0, bar1));
            std::stringstream exps(line.substr(bar1 + 1, bar2 - bar1 - 1));
            std::string tok;
            while (std::getline(exps, tok, ','))
                q.exponents.push_back(std::stoi(tok));
            value = parse_rational(line.substr(bar2 + 1));
        } catch (const std::invalid_argument&) {
            throw DomainError("malformed cache record: " + line);
        } catch (const std::out_of_range&) {
            throw DomainError("malformed cache record: " + line);
        }
        q = TauQuery(q.genus, std::move(q.exponents));
        memo().insert(q, value);
        ++loaded;
    }
    return loaded;
}

void save_cache(const std::filesystem::path& file)
{
    std::vector<std::string> lines;
    for (const auto& [q, v] : memo().snapshot())
        lines.push_back(format_record(q, v));
    std::sort(lines.begin(), lines.end());
    if (file.has_parent_path())
        std::filesystem::create_directories(file.parent_path());
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw DomainError("cannot write cache file " + tmp.string());
        for (const auto& l : lines)
            out << l << '\n';
    }
    std::filesystem::rename(tmp, file);
}

std::filesystem::path cache_file(const std::filesystem::path& dir)
{
    return dir / "tau.cache";
}

}  // namespace kappa::intersect
