#include "kappa/cli.hpp"

#include "kappa/error.hpp"
#include "kappa/intersect.hpp"
#include "kappa/kappa_poly.hpp"
#include "kappa/kappa_ring.hpp"
#include "kappa/parallel.hpp"
#include "kappa/partition.hpp"
#include "kappa/strata.hpp"
#include "kappa/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

namespace kappa::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, json, csv };

class UsageError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + '"';
}

std::vector<int> parse_ints(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError("not an integer list: '" + text + "'");
        }
        if (used != item.size())
            throw UsageError("not an integer list: '" + text + "'");
        out.push_back(v);
    }
    return out;
}

Partition partition_arg(const std::string& text)
{
    try {
        return parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

ThetaMultiset multiset_arg(const std::string& text)
{
    try {
        return parse_multiset(text);
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

json poly_json(const KappaPoly& p)
{
    json terms = json::array();
    for (const auto& [mono, c] : p.terms())
        terms.push_back({{"kappa", to_string(mono)}, {"coeff", to_fraction_string(c)}});
    return terms;
}

json verify_value(const std::string& s)
{
    if (s == "true" || s == "false")
        return s == "true";
    if (s.find('/') == std::string::npos && s.find_first_not_of("-0123456789") == std::string::npos && !s.empty())
        return std::stol(s);
    return s;
}

struct Context {
    Format format = Format::text;
    std::ostream& out;
};

void print_list(Context& ctx, const std::string& header, const std::vector<std::string>& items)
{
    if (ctx.format == Format::json) {
        ctx.out << json(items).dump() << '\n';
    } else if (ctx.format == Format::csv) {
        ctx.out << header << '\n';
        for (const auto& s : items)
            ctx.out << csv_field(s) << '\n';
    } else {
        for (const auto& s : items)
            ctx.out << (s.empty() ? "()" : s) << '\n';
    }
}

void print_rank(Context& ctx, const std::vector<RankReport>& reports)
{
    if (ctx.format == Format::csv)
        ctx.out << "d,g,n,rank,formula,agrees\n";
    for (const auto& r : reports) {
        const auto agrees = r.agrees();
        if (ctx.format == Format::json) {
            ctx.out << to_json(r) << '\n';
        } else if (ctx.format == Format::csv) {
            ctx.out << r.d << ',' << r.g << ',' << r.n << ',' << r.matrix_rank << ','
                    << (r.formula_value ? std::to_string(*r.formula_value) : "") << ','
                    << (agrees ? (*agrees ? "true" : "false") : "") << '\n';
        } else {
            ctx.out << "d=" << r.d << " g=" << r.g << " n=" << r.n << " rank=" << r.matrix_rank;
            if (r.formula_value)
                ctx.out << " formula=" << *r.formula_value << (*agrees ? " (agrees)" : " (DISAGREES)");
            ctx.out << '\n';
        }
    }
    if (ctx.format == Format::text)
        ctx.out << "note: rank of the combinatorial kappa ring (psi pairing matrix); it equals the rank of the "
                   "kappa ring for g <= 2 by theorem, not by this computation\n";
}

}  // namespace

std::filesystem::path resolve_cache_dir(const std::string& flag)
{
    if (!flag.empty())
        return flag;
    if (const char* env = std::getenv("KAPPA_CACHE_DIR"); env && *env)
        return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "kappa";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "kappa";
    return std::filesystem::temp_directory_path() / "kappa-cache";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations in the kappa ring of moduli spaces of pointed curves", "kappa"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string cache_dir;
    unsigned threads = 0;
    bool as_json = false, as_csv = false;
    app.add_option("--cache-dir", cache_dir, "Directory of the intersection number cache");
    app.add_option("--threads", threads, "Worker thread cap")->check(CLI::PositiveNumber);
    auto* json_flag = app.add_flag("--json", as_json, "JSON output");
    app.add_flag("--csv", as_csv, "CSV output")->excludes(json_flag);

    int g = 0, n = 0, d = 0, e = 0;
    std::optional<int> d_opt, i_opt, k_opt;
    std::string psi_text, q_text, exps_text, basis_text = "psi", suite, what;
    bool use_bracket = false;
    VerifyLimits limits;

    auto* rank_cmd = app.add_subcommand("rank", "Rank of the kappa ring in degree d on M_{g,n}");
    rank_cmd->add_option("--g", g)->required();
    rank_cmd->add_option("--n", n)->required();
    rank_cmd->add_option("--d", d_opt, "Degree; all degrees when omitted");

    auto* pair_cmd = app.add_subcommand("pair", "Pair a class with a modified weight multiset");
    pair_cmd->add_option("--g", g)->required();
    pair_cmd->add_option("--n", n)->required();
    pair_cmd->add_option("--psi", psi_text, "Partition p, e.g. 2,1")->required();
    pair_cmd->add_option("--q", q_text, "Multiset, e.g. (1,1)|(0,3)")->required();
    pair_cmd->add_option("--basis", basis_text, "Read p as psi(p), kappa(p) or <p>")
        ->check(CLI::IsMember({"psi", "kappa", "bracket"}));

    auto* intersect_cmd = app.add_subcommand("intersect", "psi intersection number <tau_a1 ... tau_an>_g");
    intersect_cmd->add_option("--g", g)->required();
    intersect_cmd->add_option("--exps", exps_text, "Comma separated exponents")->required();

    auto* expand_cmd = app.add_subcommand("expand", "Expand psi(p) or a bracket class in kappa monomials");
    expand_cmd->add_option("--g", g)->required();
    expand_cmd->add_option("--n", n)->required();
    expand_cmd->add_option("--psi", psi_text, "Partition p")->required();
    expand_cmd->add_flag("--bracket", use_bracket, "Expand <p> instead of psi(p)");
    expand_cmd->add_option("--d", d_opt, "Degree of the bracket part (default d(p))");

    auto* enum_cmd = app.add_subcommand("enumerate", "List partitions, multisets or generators");
    enum_cmd->add_option("what", what, "partitions | q | P1 | A")
        ->required()
        ->check(CLI::IsMember({"partitions", "q", "P1", "A"}));
    enum_cmd->add_option("--d", d)->required();
    enum_cmd->add_option("--g", g);
    enum_cmd->add_option("--n", n);
    enum_cmd->add_option("--i", i_opt, "With --k: P_i(d,k)");
    enum_cmd->add_option("--k", k_opt, "At most k parts (greater than i)");

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--max-d", limits.max_d)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--max-n", limits.max_n)->check(CLI::NonNegativeNumber);

    auto* asym_cmd = app.add_subcommand("asymptotic", "C(n+e,e) C(g+e,e) / (e+1)!");
    asym_cmd->add_option("--g", g)->required();
    asym_cmd->add_option("--e", e)->required();
    asym_cmd->add_option("--n", n)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? 0 : 2;
    }

    if (threads > 0)
        set_thread_count(threads);

    const auto cache_path = intersect::cache_file(resolve_cache_dir(cache_dir));
    std::size_t loaded = 0;
    try {
        if (std::filesystem::exists(cache_path))
            loaded = intersect::load_cache(cache_path);
    } catch (const std::exception& ex) {
        err << "warning: ignoring cache " << cache_path.string() << ": " << ex.what() << '\n';
    }

    Context ctx{as_json ? Format::json : as_csv ? Format::csv : Format::text, out};
    int status = 0;
    try {
        if (rank_cmd->parsed()) {
            std::vector<RankReport> reports;
            if (d_opt) {
                reports.push_back(rank_kappa_c(*d_opt, g, n));
            } else {
                for (int dd = 0; dd <= 3 * g - 3 + n; ++dd)
                    reports.push_back(rank_kappa_c(dd, g, n));
            }
            print_rank(ctx, reports);
        } else if (pair_cmd->parsed()) {
            const Partition p = partition_arg(psi_text);
            const ThetaMultiset q = multiset_arg(q_text);
            const Basis basis = parse_basis(basis_text);
            const Rational v = pair_formal(FormalExpr::unit(p), basis, q, g, n);
            if (ctx.format == Format::json)
                out << json{{"p", to_string(p)}, {"q", to_string(q)}, {"basis", basis_text},
                             {"value", to_fraction_string(v)}}
                           .dump()
                    << '\n';
            else if (ctx.format == Format::csv)
                out << "p,q,basis,value\n"
                    << csv_field(to_string(p)) << ',' << csv_field(to_string(q)) << ',' << basis_text << ','
                    << to_fraction_string(v) << '\n';
            else
                out << to_string(v) << '\n';
        } else if (intersect_cmd->parsed()) {
            const auto exps = parse_ints(exps_text);
            const Rational v = intersect::tau(g, exps);
            if (ctx.format == Format::json)
                out << json{{"g", g}, {"exps", exps}, {"value", to_fraction_string(v)}}.dump() << '\n';
            else if (ctx.format == Format::csv)
                out << "g,exps,value\n" << g << ',' << csv_field(exps_text) << ',' << to_fraction_string(v) << '\n';
            else
                out << to_string(v) << '\n';
        } else if (expand_cmd->parsed()) {
            const Partition p = partition_arg(psi_text);
            const KappaPoly poly = use_bracket ? bracket(p, d_opt.value_or(p.sum()), g, n) : psi_class(p, g, n);
            if (ctx.format == Format::json) {
                out << json{{"class", (use_bracket ? "bracket(" : "psi(") + to_string(p) + ")"},
                            {"terms", poly_json(poly)}}
                           .dump()
                    << '\n';
            } else if (ctx.format == Format::csv) {
                out << "kappa,coeff\n";
                for (const auto& [mono, c] : poly.terms())
                    out << csv_field(to_string(mono)) << ',' << to_fraction_string(c) << '\n';
            } else {
                out << to_string(poly) << '\n';
            }
        } else if (enum_cmd->parsed()) {
            std::vector<std::string> items;
            if (what == "partitions") {
                const auto ps = k_opt ? enumerate_bounded(d, i_opt.value_or(0), *k_opt) : enumerate(d);
                for (const auto& p : ps)
                    items.push_back(to_string(p));
                print_list(ctx, "partition", items);
            } else if (what == "q") {
                for (const auto& q : enum_Q(d, g, n))
                    items.push_back(to_string(q));
                print_list(ctx, "multiset", items);
            } else if (what == "P1") {
                for (const auto& p : enumerate_bounded(d, 1, n - d))
                    items.push_back(to_string(p));
                print_list(ctx, "partition", items);
            } else {
                const auto sets = generators_A(d, n);
                std::vector<std::string> a1, a2;
                for (const auto& gen : sets.a1)
                    a1.push_back(to_string(gen.q));
                for (const auto& gen : sets.a2)
                    a2.push_back(to_string(gen.q));
                if (ctx.format == Format::json) {
                    out << json{{"A1", a1}, {"A2", a2}}.dump() << '\n';
                } else {
                    if (ctx.format == Format::csv)
                        out << "set,multiset\n";
                    const bool csv = ctx.format == Format::csv;
                    for (const auto& s : a1)
                        out << "A1" << (csv ? "," + csv_field(s) : " " + s) << '\n';
                    for (const auto& s : a2)
                        out << "A2" << (csv ? "," + csv_field(s) : " " + s) << '\n';
                }
            }
        } else if (verify_cmd->parsed()) {
            const auto cases = run_suite(suite, limits);
            bool all = true;
            if (ctx.format == Format::csv) {
                out << "case,expected,got,pass\n";
                for (const auto& c : cases)
                    out << csv_field(c.name) << ',' << csv_field(c.expected) << ',' << csv_field(c.got) << ','
                        << (c.pass ? "true" : "false") << '\n';
            } else {
                json arr = json::array();
                for (const auto& c : cases)
                    arr.push_back({{"case", c.name},
                                   {"expected", verify_value(c.expected)},
                                   {"got", verify_value(c.got)},
                                   {"pass", c.pass}});
                out << arr.dump() << '\n';
            }
            for (const auto& c : cases)
                all = all && c.pass;
            if (!all) {
                err << "verify: " << suite << " has failing cases\n";
                status = 1;
            }
        } else if (asym_cmd->parsed()) {
            const Rational v = asymptotic_formula(g, e, n);
            if (ctx.format == Format::json)
                out << json{{"g", g}, {"e", e}, {"n", n}, {"value", to_fraction_string(v)}}.dump() << '\n';
            else if (ctx.format == Format::csv)
                out << "g,e,n,value\n" << g << ',' << e << ',' << n << ',' << to_fraction_string(v) << '\n';
            else
                out << to_string(v) << '\n';
        }
    } catch (const DomainError& ex) {
        err << "error: " << ex.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& ex) {
        err << "usage error: " << ex.what() << '\n';
        return 2;
    }

    if (intersect::cache_size() > loaded) {
        try {
            std::filesystem::create_directories(cache_path.parent_path());
            intersect::save_cache(cache_path);
        } catch (const std::exception& ex) {
            err << "warning: could not write cache " << cache_path.string() << ": " << ex.what() << '\n';
        }
    }
    return status;
}

}  // namespace kappa::cli
