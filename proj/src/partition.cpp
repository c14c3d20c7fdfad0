#include "kappa/partition.hpp"

#include "kappa/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace kappa {

namespace {

void canonicalize(std::vector<int>& parts)
{
    for (int x : parts)
        if (x <= 0)
            throw DomainError("partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        current.push_back(k);
        partitions_rec(remaining - k, k, current, out);
        current.pop_back();
    }
}

bool refine_rec(const std::vector<int>& a, std::size_t idx, std::vector<int>& capacity)
{
    if (idx == a.size())
        return true;
    for (std::size_t j = 0; j < capacity.size(); ++j) {
        if (capacity[j] < a[idx])
            continue;
        // Slots with equal remaining capacity are interchangeable.
        bool seen = false;
        for (std::size_t k = 0; k < j; ++k)
            if (capacity[k] == capacity[j]) {
                seen = true;
                break;
            }
        if (seen)
            continue;
        capacity[j] -= a[idx];
        bool ok = refine_rec(a, idx + 1, capacity);
        capacity[j] += a[idx];
        if (ok)
            return true;
    }
    return false;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts)
{
    canonicalize(parts_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    canonicalize(parts_);
}

int Partition::sum() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::size_t Partition::count_greater(int i) const
{
    return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [i](int x) { return x > i; }));
}

Partition Partition::operator|(const Partition& other) const
{
    std::vector<int> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(all));
}

int Composition::sum() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

OrderKey order_key(const Partition& p)
{
    return OrderKey{-static_cast<long>(p.length()), p.parts()};
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const
{
    if (a.length() != b.length())
        return a.length() > b.length();
    return a.parts() < b.parts();
}

std::vector<Partition> enumerate(int d)
{
    std::vector<Partition> out;
    if (d < 0)
        return out;
    std::vector<int> current;
    partitions_rec(d, d, current, out);
    std::sort(out.begin(), out.end(), PartitionOrder{});
    return out;
}

std::vector<Partition> enumerate_bounded(int d, int i, int k)
{
    std::vector<Partition> out;
    if (k < 0)
        return out;
    for (auto& p : enumerate(d))
        if (p.count_greater(i) <= static_cast<std::size_t>(k))
            out.push_back(std::move(p));
    return out;
}

std::vector<Partition> enumerate_at_most(int d, int k)
{
    return enumerate_bounded(d, 0, k);
}

std::vector<Partition> enumerate_exact_len(int d, int k)
{
    std::vector<Partition> out;
    if (k < 0)
        return out;
    for (auto& p : enumerate(d))
        if (p.length() == static_cast<std::size_t>(k))
            out.push_back(std::move(p));
    return out;
}

bool refines(const Partition& a, const Partition& b)
{
    if (a.sum() != b.sum() || a.length() < b.length())
        return false;
    std::vector<int> capacity = b.parts();
    return refine_rec(a.parts(), 0, capacity);
}

Integer aut(const Partition& p)
{
    Integer out = 1;
    const auto& v = p.parts();
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i])
            ++j;
        out *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return out;
}

Partition minus(const Partition& p)
{
    std::vector<int> out;
    for (int x : p)
        if (x > 1)
            out.push_back(x - 1);
    return Partition(std::move(out));
}

Partition pad(const Partition& p, int l)
{
    if (l < 0)
        throw DomainError("pad: negative count");
    std::vector<int> out = p.parts();
    out.insert(out.end(), static_cast<std::size_t>(l), 1);
    return Partition(std::move(out));
}

Partition hat(const Partition& p)
{
    std::vector<int> out;
    for (int x : p)
        out.push_back(x + 1);
    out.insert(out.end(), static_cast<std::size_t>(p.sum() - static_cast<int>(p.length())), 1);
    return Partition(std::move(out));
}

Partition hat(const Composition& c)
{
    return hat(Partition(c.parts));
}

std::vector<Composition> compositions(int l)
{
    if (l < 1)
        throw DomainError("compositions: l must be positive");
    std::vector<Composition> out;
    // Bit i of mask set => a cut after position i+1.
    for (unsigned mask = 0; mask < (1u << (l - 1)); ++mask) {
        Composition c;
        int run = 1;
        for (int i = 0; i < l - 1; ++i) {
            if (mask & (1u << i)) {
                c.parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        c.parts.push_back(run);
        out.push_back(std::move(c));
    }
    std::stable_sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
        if (a.parts.size() != b.parts.size())
            return a.parts.size() < b.parts.size();
        return a.parts > b.parts;
    });
    return out;
}

Integer multinomial(const Composition& m)
{
    Integer out = factorial(static_cast<unsigned>(m.sum()));
    for (int x : m.parts)
        out /= factorial(static_cast<unsigned>(x));
    return out;
}

std::string to_string(const Partition& p)
{
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

std::string to_string(const Composition& c)
{
    std::string out;
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(c.parts[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text)
{
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            throw std::invalid_argument("empty part in partition '" + std::string(text) + "'");
        for (char ch : token)
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("bad part '" + token + "' in partition");
        int v = std::stoi(token);
        if (v <= 0)
            throw std::invalid_argument("partition parts must be positive");
        parts.push_back(v);
        token.clear();
    };
    std::string trimmed;
    for (char ch : text)
        if (ch != ' ' && ch != '(' && ch != ')')
            trimmed += ch;
    if (trimmed.empty())
        return {};
    for (char ch : trimmed) {
        if (ch == ',')
            flush();
        else
            token += ch;
    }
    flush();
    return Partition(std::move(parts));
}

}  // namespace kappa

std::size_t std::hash<kappa::Partition>::operator()(const kappa::Partition& p) const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : p)
        h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
}
