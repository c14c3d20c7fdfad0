#include "kappa/strata.hpp"

#include "kappa/error.hpp"
#include "kappa/intersect.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kappa {

namespace {

std::string ambient_name(int d, int g, int n)
{
    return "Q(" + std::to_string(d) + ";" + std::to_string(g) + "," + std::to_string(n) + ")";
}

}  // namespace

ThetaMultiset::ThetaMultiset(std::vector<ThetaEntry> entries) : entries_(std::move(entries))
{
    for (const auto& e : entries_)
        if (e.genus < 0 || e.legs < 0 || !e.stable())
            throw DomainError("unstable vertex datum (" + std::to_string(e.genus) + "," + std::to_string(e.legs) +
                              ")");
    std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

ThetaMultiset::ThetaMultiset(std::initializer_list<ThetaEntry> entries)
    : ThetaMultiset(std::vector<ThetaEntry>(entries))
{
}

int ThetaMultiset::total_legs() const
{
    int s = 0;
    for (const auto& e : entries_)
        s += e.legs;
    return s;
}

int ThetaMultiset::total_genus() const
{
    int s = 0;
    for (const auto& e : entries_)
        s += e.genus;
    return s;
}

int ThetaMultiset::dimension() const
{
    int s = 0;
    for (const auto& e : entries_)
        s += e.dimension();
    return s;
}

int ThetaMultiset::edges(int n) const
{
    const int twice = total_legs() - n;
    if (twice < 0 || twice % 2 != 0)
        return -1;
    return twice / 2;
}

bool ThetaMultiset::realizable(int g, int n) const
{
    const int k = static_cast<int>(entries_.size());
    const int e = edges(n);
    if (k == 0 || n < 0 || e < 0)
        return false;
    // First Betti number of the graph.
    const int loops = e - k + 1;
    if (loops < 0 || total_genus() + loops != g)
        return false;
    if (k >= 2)
        for (const auto& entry : entries_)
            if (entry.legs < 1)
                return false;
    return true;
}

std::string to_string(const ThetaMultiset& q)
{
    std::string out;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (i)
            out += '|';
        out += "(" + std::to_string(q.entries()[i].genus) + "," + std::to_string(q.entries()[i].legs) + ")";
    }
    return out;
}

ThetaMultiset parse_multiset(std::string_view text)
{
    std::vector<ThetaEntry> entries;
    std::string s;
    for (char ch : text)
        if (ch != ' ')
            s += ch;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != '(')
            throw std::invalid_argument("expected '(' in multiset '" + s + "'");
        auto close = s.find(')', pos);
        if (close == std::string::npos)
            throw std::invalid_argument("unterminated entry in multiset '" + s + "'");
        auto body = s.substr(pos + 1, close - pos - 1);
        auto comma = body.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("entry needs two integers: '(" + body + ")'");
        std::size_t used1 = 0, used2 = 0;
        const std::string g_text = body.substr(0, comma), m_text = body.substr(comma + 1);
        int g = std::stoi(g_text, &used1);
        int m = std::stoi(m_text, &used2);
        if (used1 != g_text.size() || used2 != m_text.size())
            throw std::invalid_argument("entry needs two integers: '(" + body + ")'");
        entries.push_back({g, m});
        pos = close + 1;
        if (pos < s.size()) {
            if (s[pos] != '|')
                throw std::invalid_argument("expected '|' between entries in '" + s + "'");
            ++pos;
            if (pos == s.size())
                throw std::invalid_argument("trailing '|' in multiset '" + s + "'");
        }
    }
    if (entries.empty())
        throw std::invalid_argument("empty multiset");
    return ThetaMultiset(std::move(entries));
}

bool ThetaOrder::operator()(const ThetaMultiset& a, const ThetaMultiset& b) const
{
    const Partition pa = p_map(a), pb = p_map(b);
    if (pa != pb)
        return PartitionOrder{}(pa, pb);
    return a.entries() < b.entries();
}

int StableWeightedGraph::markings() const
{
    int n = 0;
    for (const auto& v : vertices)
        n += static_cast<int>(v.markings.size());
    return n;
}

int StableWeightedGraph::degree(std::size_t v) const
{
    int deg = 0;
    for (const auto& [a, b] : edges) {
        if (static_cast<std::size_t>(a) == v)
            ++deg;
        if (static_cast<std::size_t>(b) == v)
            ++deg;
    }
    return deg;
}

int StableWeightedGraph::genus() const
{
    int g = 0;
    for (const auto& v : vertices)
        g += v.genus;
    return g + static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1;
}

bool StableWeightedGraph::connected() const
{
    if (vertices.empty())
        return false;
    std::vector<int> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& [a, b] : edges)
        parent[find(a)] = find(b);
    for (std::size_t v = 1; v < vertices.size(); ++v)
        if (find(static_cast<int>(v)) != find(0))
            return false;
    return true;
}

void StableWeightedGraph::validate() const
{
    if (vertices.empty())
        throw DomainError("graph has no vertices");
    const int nv = static_cast<int>(vertices.size());
    for (const auto& [a, b] : edges)
        if (a < 0 || b < 0 || a >= nv || b >= nv)
            throw DomainError("edge refers to a missing vertex");
    if (!connected())
        throw DomainError("graph is not connected");
    const int n = markings();
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& v : vertices) {
        if (v.genus < 0)
            throw DomainError("negative vertex genus");
        for (int label : v.markings) {
            if (label < 1 || label > n || seen[static_cast<std::size_t>(label)]++)
                throw DomainError("markings do not partition {1..n}");
        }
    }
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (2 * vertices[v].genus + static_cast<int>(vertices[v].markings.size()) + degree(v) <= 2)
            throw DomainError("vertex " + std::to_string(v) + " is unstable");
}

ThetaMultiset theta(const StableWeightedGraph& graph)
{
    graph.validate();
    std::vector<ThetaEntry> entries;
    for (std::size_t v = 0; v < graph.vertices.size(); ++v)
        entries.push_back(
            {graph.vertices[v].genus, static_cast<int>(graph.vertices[v].markings.size()) + graph.degree(v)});
    return ThetaMultiset(std::move(entries));
}

std::vector<ThetaMultiset> enum_Q(int d, int g, int n)
{
    if (g < 0 || g > 2)
        throw DomainError("Q(d;g,n) enumeration is supported for g <= 2 only");
    if (n < 0 || 2 * g - 2 + n <= 0)
        throw DomainError("unstable moduli space M_{" + std::to_string(g) + "," + std::to_string(n) + "}");
    const int e = 3 * g - 3 + n - d;
    if (d < 0 || e < 0)
        throw DomainError("degree " + std::to_string(d) + " out of range for " + ambient_name(d, g, n));

    std::vector<ThetaMultiset> out;
    std::vector<ThetaEntry> current;
    // Entries are generated in decreasing order so each multiset appears once.
    std::function<void(ThetaEntry, int, int)> rec = [&](ThetaEntry bound, int legs_left, int genus_left) {
        if (legs_left == 0 && !current.empty()) {
            ThetaMultiset q(current);
            if (q.realizable(g, n))
                out.push_back(std::move(q));
        }
        for (int gi = std::min(bound.genus, genus_left); gi >= 0; --gi) {
            const int max_legs = gi == bound.genus ? std::min(bound.legs, legs_left) : legs_left;
            for (int mi = max_legs; mi >= 0; --mi) {
                ThetaEntry entry{gi, mi};
                if (!entry.stable())
                    continue;
                current.push_back(entry);
                rec(entry, legs_left - mi, genus_left - gi);
                current.pop_back();
            }
        }
    };
    rec(ThetaEntry{g, n + 2 * e}, n + 2 * e, g);
    std::sort(out.begin(), out.end(), ThetaOrder{});
    return out;
}

ThetaMultiset genus1_q(int l, const Partition& n)
{
    if (l < 0)
        throw DomainError("genus1_q: negative l");
    if (l == 0 && n.empty())
        throw DomainError("genus1_q: q_0 needs a non-empty partition");
    std::vector<ThetaEntry> entries;
    if (l >= 1)
        entries.push_back({1, l});
    for (int x : n)
        entries.push_back({0, x + 2});
    return ThetaMultiset(std::move(entries));
}

CycleAmbient genus1_ambient(int l, const Partition& n)
{
    const int s = n.sum();
    return CycleAmbient{s + l - static_cast<int>(n.length()), 1, s + l};
}

Partition p_map(const ThetaMultiset& q)
{
    std::vector<int> parts;
    for (const auto& e : q.entries())
        if (e.dimension() > 0)
            parts.push_back(e.dimension());
    return Partition(std::move(parts));
}

namespace {

struct Assignment {
    const std::vector<int>* parts;
    const std::vector<ThetaEntry>* entries;
    std::vector<int> budget;
    std::vector<std::vector<int>> assigned;
    Rational total = 0;

    void run(std::size_t j)
    {
        if (j == parts->size()) {
            for (int b : budget)
                if (b != 0)
                    return;
            Rational product = 1;
            for (std::size_t i = 0; i < entries->size() && product != 0; ++i) {
                std::vector<int> exps;
                for (int part : assigned[i])
                    exps.push_back(part + 1);
                exps.insert(exps.end(), static_cast<std::size_t>((*entries)[i].legs), 0);
                product *= intersect::tau((*entries)[i].genus, std::move(exps));
            }
            total += product;
            return;
        }
        const int part = (*parts)[j];
        for (std::size_t i = 0; i < entries->size(); ++i) {
            if (budget[i] < part)
                continue;
            budget[i] -= part;
            assigned[i].push_back(part);
            run(j + 1);
            assigned[i].pop_back();
            budget[i] += part;
        }
    }
};

}  // namespace

Rational pair_psi(const Partition& p, const ThetaMultiset& q)
{
    if (p.sum() != q.dimension())
        throw DomainError("dimension mismatch: d(p) = " + std::to_string(p.sum()) + " but dim(q) = " +
                          std::to_string(q.dimension()));
    Assignment a;
    a.parts = &p.parts();
    a.entries = &q.entries();
    for (const auto& e : q.entries())
        a.budget.push_back(e.dimension());
    a.assigned.resize(q.size());
    a.run(0);
    return a.total;
}

Rational pair_psi(const Partition& p, const ThetaMultiset& q, int g, int n)
{
    if (!q.realizable(g, n))
        throw DomainError(to_string(q) + " is not in " + ambient_name(q.dimension(), g, n));
    return pair_psi(p, q);
}

Rational pair_psi_expr(const FormalExpr& psi_coords, const ThetaMultiset& q)
{
    Rational total = 0;
    for (const auto& [p, c] : psi_coords.coeffs)
        total += c * pair_psi(p, q);
    return total;
}

Rational pair_formal(const FormalExpr& phi, Basis basis, const ThetaMultiset& q, int g, int n)
{
    if (!q.realizable(g, n))
        throw DomainError(to_string(q) + " is not in " + ambient_name(q.dimension(), g, n));
    if (phi.degree != q.dimension())
        throw DomainError("dimension mismatch: degree " + std::to_string(phi.degree) + " against dim(q) = " +
                          std::to_string(q.dimension()));
    if (basis == Basis::psi)
        return pair_psi_expr(phi, q);
    PsiCoordinates coords(phi.degree, 2 * g - 2 + n);
    return pair_psi_expr(coords.to_psi(phi, basis), q);
}

bool is_compact_type(const ThetaMultiset& q, int g, int n)
{
    return q.total_genus() == g && q.edges(n) == static_cast<int>(q.size()) - 1;
}

ThetaMultiset lift_multiset(const ThetaMultiset& q0, int g, int n)
{
    if (!q0.realizable(0, n + 2 * g))
        throw DomainError(to_string(q0) + " is not a genus-0 multiset with " + std::to_string(n + 2 * g) +
                          " markings");
    if (!q0.realizable(g, n))
        throw DomainError(to_string(q0) + " does not lift to genus " + std::to_string(g));
    return q0;
}

void KTrivialCycle::add(const ThetaMultiset& q, const Rational& c)
{
    if (!has_ambient_)
        throw DomainError("cycle ambient not set");
    if (q.dimension() != ambient_.d || !q.realizable(ambient_.g, ambient_.n))
        throw DomainError(to_string(q) + " is not in " + ambient_name(ambient_.d, ambient_.g, ambient_.n));
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(q, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void KTrivialCycle::add_genus1(int l, const Partition& n, const Rational& c)
{
    const auto amb = genus1_ambient(l, n);
    if (!has_ambient_) {
        ambient_ = amb;
        has_ambient_ = true;
    } else if (!(amb == ambient_)) {
        throw DomainError("mixed ambients in a cycle");
    }
    add(genus1_q(l, n), c);
}

}  // namespace kappa
