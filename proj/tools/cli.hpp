#pragma once

// Subcommands of cfgcoh. run_cli returns the process exit code:
// 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <cfgcoh/cfgcoh.hpp>

namespace cfgcoh::cli {

using json = nlohmann::ordered_json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "a..b" or a single integer.
inline std::pair<int, int> parse_m_range(const std::string& text)
{
    static const std::regex range(R"(\s*(\d+)\s*\.\.\s*(\d+)\s*)"), single(R"(\s*(\d+)\s*)");
    std::smatch mt;
    int lo = 0, hi = 0;
    if (std::regex_match(text, mt, range)) {
        lo = std::stoi(mt[1]);
        hi = std::stoi(mt[2]);
    } else if (std::regex_match(text, mt, single)) {
        lo = hi = std::stoi(mt[1]);
    } else {
        throw UsageError("bad m-range '" + text + "', expected a..b");
    }
    if (lo < 1 || hi < lo)
        throw UsageError("bad m-range '" + text + "': need 1 <= a <= b");
    return {lo, hi};
}

/// Z, <k> (rank-k elementary abelian 2-group) and {k} = <k> + Z4.
inline std::string group_text(const GroupRow& r)
{
    std::vector<std::string> parts;
    for (int k = 0; k < r.free; ++k)
        parts.push_back("Z");
    if (r.z4 > 0 && r.z2 == 0) {
        std::string s = "Z4";
        for (int k = 1; k < r.z4; ++k)
            s += " + Z4";
        parts.push_back(s);
    } else if (r.z4 > 0) {
        std::string s = "{" + std::to_string(r.z2) + "}";
        for (int k = 1; k < r.z4; ++k)
            s += " + Z4";
        parts.push_back(s);
    } else if (r.z2 > 0) {
        parts.push_back("<" + std::to_string(r.z2) + ">");
    }
    if (parts.empty())
        return "0";
    std::string out;
    for (const auto& p : parts)
        out += (out.empty() ? "" : " + ") + p;
    return out;
}

inline json groups_json(const GroupTable& g)
{
    json j;
    j["space"] = std::string(1, g.space);
    j["m"] = g.m;
    if (g.space == 'B' && g.m == 5)
        j["eta_m5"] = 2;
    j["groups"] = json::array();
    for (std::size_t n = 0; n < g.rows.size(); ++n)
        j["groups"].push_back({{"dim", n}, {"free", g.rows[n].free}, {"z2", g.rows[n].z2}, {"z4", g.rows[n].z4}});
    return j;
}

template <class Ring>
json class_json(const Mod2Class<Ring>& c)
{
    json terms = json::array();
    for (const auto& t : c.terms())
        terms.push_back({{"monomial", c.ring().name(t)}, {"coeff", 1}, {"modulus", 2}});
    return {{"text", c.to_string()}, {"terms", terms}};
}

template <class Ring>
json class_json(const IntClass<Ring>& c)
{
    json terms = json::array();
    if (c.unit_coeff() != 0)
        terms.push_back({{"monomial", "1"}, {"coeff", c.unit_coeff()}, {"modulus", nullptr}});
    for (const auto& [mon, k] : c.torsion())
        terms.push_back({{"monomial", c.ring().name(mon)}, {"coeff", k}, {"modulus", c.ring().modulus(mon)}});
    if constexpr (Ring::has_free_generator)
        if (c.free_coeff() != 0)
            terms.push_back({{"monomial", c.ring().free_name()}, {"coeff", c.free_coeff()}, {"modulus", nullptr}});
    return {{"text", c.to_string()}, {"terms", terms}};
}

inline json certificate_json(const TcsCertificate& cert, int eta)
{
    json j{{"m", cert.m},
           {"cup_length", cert.cup_length},
           {"witness", class_json(cert.witness)},
           {"lower_bound", cert.lower_bound},
           {"eta_dependent", cert.eta_dependent}};
    if (cert.m == 5)
        j["eta_m5"] = eta;
    if (auto v = known_tcs_value(cert.m))
        j["known_value"] = *v;
    if (auto dv = known_tc_difference(cert.m))
        j["tc_difference"] = *dv;
    return j;
}

struct Options {
    std::string space;
    int m = 0;
    std::string format = "text";
    std::string coeffs = "mod2";
    bool integral = false;
    int eta = 2;
    int degree = 0;
    std::string m_range;
    std::string suite = "all";
    int jobs = 0;
    bool verbose = false;
    std::vector<std::string> operands;
};

namespace detail {

inline Coefficients coefficients(const Options& o)
{
    return (o.integral || o.coeffs == "int") ? Coefficients::integral : Coefficients::mod2;
}

inline void need_m(const Options& o)
{
    if (o.m < 1)
        throw UsageError("--m must be given and at least 1 for space " + o.space);
}

template <class Class>
void print_class(std::ostream& out, const Options& o, const Class& c, json extra)
{
    if (o.format == "json") {
        extra["product"] = class_json(c);
        out << extra.dump(2) << "\n";
    } else {
        out << c.to_string() << "\n";
    }
}

template <class Ring>
int multiply_mod2(std::ostream& out, const Options& o, const Ring& ring, json meta)
{
    const auto names = alphabet(o.space, Coefficients::mod2);
    const auto a = eval_mod2(parse_expr(o.operands[0], names), ring);
    const auto b = eval_mod2(parse_expr(o.operands[1], names), ring);
    print_class(out, o, a * b, std::move(meta));
    return exit_ok;
}

template <class Ring>
int multiply_int(std::ostream& out, std::ostream& err, const Options& o, const Ring& ring, json meta)
{
    const auto names = alphabet(o.space, Coefficients::integral);
    ReductionContext ctx;
    const auto a = eval_int(parse_expr(o.operands[0], names), ring, &ctx);
    const auto b = eval_int(parse_expr(o.operands[1], names), ring, &ctx);
    const auto p = a.times(b, &ctx);
    if (ctx.consulted_eta) {
        meta["eta_m5"] = o.eta;
        meta["eta_dependent"] = true;
        err << "note: result uses eta_m5=" << o.eta << " in c3*e\n";
    }
    print_class(out, o, p, std::move(meta));
    return exit_ok;
}

template <class Mon, class Name, class Mod>
void print_basis(std::ostream& out, const Options& o, const std::vector<Mon>& basis, Name name, Mod modulus)
{
    if (o.format == "json") {
        json j{{"space", o.space}, {"degree", o.degree}, {"coefficients", o.integral ? "int" : "mod2"}};
        if (o.space == "F" || o.space == "B")
            j["m"] = o.m;
        j["basis"] = json::array();
        for (const auto& mon : basis)
            j["basis"].push_back({{"monomial", name(mon)}, {"modulus", modulus(mon)}});
        out << j.dump(2) << "\n";
        return;
    }
    for (const auto& mon : basis)
        out << name(mon) << (o.integral ? " (mod " + std::to_string(modulus(mon)) + ")" : "") << "\n";
}

} // namespace detail

inline int cmd_groups(std::ostream& out, const Options& o)
{
    detail::need_m(o);
    const auto g = o.space == "F" ? derive_groups_F(o.m) : derive_groups_B(o.m);
    if (o.format == "json") {
        out << groups_json(g).dump(2) << "\n";
    } else if (o.format == "csv") {
        out << "dim,free,z2,z4\n";
        for (std::size_t n = 0; n < g.rows.size(); ++n)
            out << n << "," << g.rows[n].free << "," << g.rows[n].z2 << "," << g.rows[n].z4 << "\n";
    } else {
        out << "H^*(" << (o.space == "F" ? "F" : "B") << "(P^" << o.m << ",2)) integral groups\n";
        out << "dim  free  z2  z4  group\n";
        for (std::size_t n = 0; n < g.rows.size(); ++n) {
            std::ostringstream line;
            line << std::right << std::setw(3) << n << "  " << std::setw(4) << g.rows[n].free << "  " << std::setw(2)
                 << g.rows[n].z2 << "  " << std::setw(2) << g.rows[n].z4 << "  " << group_text(g.rows[n]);
            out << line.str() << "\n";
        }
    }
    return exit_ok;
}

inline int cmd_basis(std::ostream& out, const Options& o)
{
    const int d = o.degree;
    if (o.space == "F" || o.space == "B")
        detail::need_m(o);
    if (!o.integral) {
        auto two = [](const auto&) { return 2; };
        if (o.space == "F")
            detail::print_basis(out, o, OrderedConfMod2{o.m}.basis(d), [&](auto q) { return OrderedConfMod2{o.m}.name(q); }, two);
        else if (o.space == "B")
            detail::print_basis(out, o, UnorderedConfMod2{o.m}.basis(d), [&](auto q) { return UnorderedConfMod2{o.m}.name(q); }, two);
        else if (o.space == "D8")
            detail::print_basis(out, o, DihedralMod2{}.basis(d), [](auto q) { return DihedralMod2{}.name(q); }, two);
        else
            detail::print_basis(out, o, ProjSquareMod2{}.basis(d), [](auto q) { return ProjSquareMod2{}.name(q); }, two);
        return exit_ok;
    }
    if (o.space == "F") {
        const OrderedConfInt r{o.m};
        detail::print_basis(out, o, torsion_basis_F(o.m, d), [&](auto q) { return r.name(q); }, [&](auto q) { return r.modulus(q); });
    } else if (o.space == "B") {
        const UnorderedConfInt r{o.m};
        detail::print_basis(out, o, torsion_basis_B(o.m, d), [&](auto q) { return r.name(q); }, [&](auto q) { return r.modulus(q); });
    } else if (o.space == "D8") {
        const DihedralInt r;
        detail::print_basis(out, o, d8_torsion_basis(d), [&](auto q) { return r.name(q); }, [&](auto q) { return r.modulus(q); });
    } else {
        const ProjSquareInt r;
        detail::print_basis(out, o, ambient_torsion_basis(d), [&](auto q) { return r.name(q); }, [&](auto q) { return r.modulus(q); });
    }
    return exit_ok;
}

inline int cmd_multiply(std::ostream& out, std::ostream& err, const Options& o)
{
    if (o.operands.size() != 2)
        throw UsageError("multiply needs exactly two expressions");
    const bool integral = detail::coefficients(o) == Coefficients::integral;
    json meta{{"space", o.space}, {"coefficients", integral ? "int" : "mod2"}, {"a", o.operands[0]}, {"b", o.operands[1]}};
    if (o.space == "F" || o.space == "B") {
        detail::need_m(o);
        meta["m"] = o.m;
    }
    if (!integral) {
        if (o.space == "F")
            return detail::multiply_mod2(out, o, OrderedConfMod2{o.m}, meta);
        if (o.space == "B")
            return detail::multiply_mod2(out, o, UnorderedConfMod2{o.m}, meta);
        if (o.space == "D8")
            return detail::multiply_mod2(out, o, DihedralMod2{}, meta);
        return detail::multiply_mod2(out, o, ProjSquareMod2{}, meta);
    }
    if (o.space == "F")
        return detail::multiply_int(out, err, o, OrderedConfInt{o.m}, meta);
    if (o.space == "B")
        return detail::multiply_int(out, err, o, UnorderedConfInt{o.m, o.eta}, meta);
    if (o.space == "D8")
        return detail::multiply_int(out, err, o, DihedralInt{}, meta);
    return detail::multiply_int(out, err, o, ProjSquareInt{}, meta);
}

inline Suite parse_suite(const std::string& s)
{
    if (s == "rings")
        return Suite::rings;
    if (s == "bss")
        return Suite::bss;
    if (s == "tcs")
        return Suite::tcs;
    if (s == "strategy")
        return Suite::strategy;
    return Suite::all;
}

inline int cmd_verify(std::ostream& out, const Options& o)
{
    const auto [lo, hi] = parse_m_range(o.m_range);
    const int jobs = o.jobs > 0 ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
    const auto t0 = std::chrono::steady_clock::now();
    const auto results = run_verification(lo, hi, parse_suite(o.suite), jobs);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto failed = std::count_if(results.begin(), results.end(), [](auto& r) { return !r.passed; });
    if (o.format == "json") {
        json j{{"m_range", {lo, hi}}, {"suite", o.suite}, {"checks", results.size()}, {"failed", failed}, {"results", json::array()}};
        for (const auto& r : results)
            if (o.verbose || !r.passed)
                j["results"].push_back({{"suite", r.suite}, {"m", r.m}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            if (!o.verbose && r.passed)
                continue;
            out << (r.passed ? "PASS " : "FAIL ") << r.suite;
            if (r.m > 0)
                out << " m=" << r.m;
            out << "  " << r.name;
            if (!r.detail.empty())
                out << ": " << r.detail;
            out << "\n";
        }
        std::ostringstream t;
        t << std::fixed << std::setprecision(2) << secs;
        out << "verify " << o.suite << " m=" << lo << ".." << hi << ": " << results.size() << " checks, " << failed
            << " failed (" << t.str() << " s)\n";
    }
    return failed == 0 ? exit_ok : exit_failure;
}

inline int cmd_tcs(std::ostream& out, const Options& o)
{
    int lo = o.m, hi = o.m;
    if (!o.m_range.empty())
        std::tie(lo, hi) = parse_m_range(o.m_range);
    else if (o.m < 1)
        throw UsageError("tcs needs --m or --m-range");
    json all = json::array();
    for (int m = lo; m <= hi; ++m) {
        const auto cert = cup_length_b2(m, o.eta);
        if (o.format == "json") {
            all.push_back(certificate_json(cert, o.eta));
            continue;
        }
        out << "m=" << m << "  cup_length=" << cert.cup_length << "  witness=" << cert.witness.to_string()
            << "  lower_bound=" << cert.lower_bound;
        if (auto v = known_tcs_value(m))
            out << "  known=" << *v;
        if (auto dv = known_tc_difference(m))
            out << "  TC^S-TC=" << *dv;
        out << "\n";
    }
    if (o.format == "json")
        out << (lo == hi ? all[0] : all).dump(2) << "\n";
    return exit_ok;
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Integral and mod-2 cohomology of configuration spaces of two points in P^m", "cfgcoh"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> spaces_FB{"F", "B"}, spaces_all{"F", "B", "D8", "PxP"};

    auto* groups = app.add_subcommand("groups", "integral cohomology groups H^i, i = 0..2m-1");
    groups->add_option("--space", o.space, "F (ordered) or B (unordered)")->required()->check(CLI::IsMember(spaces_FB));
    groups->add_option("--m", o.m, "dimension of the projective space")->required()->check(CLI::PositiveNumber);
    groups->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* basis = app.add_subcommand("basis", "additive basis in one degree (torsion basis with --int)");
    basis->add_option("--space", o.space)->required()->check(CLI::IsMember(spaces_all));
    basis->add_option("--m", o.m)->check(CLI::PositiveNumber);
    basis->add_option("--degree", o.degree)->required()->check(CLI::NonNegativeNumber);
    basis->add_flag("--int", o.integral, "integral torsion basis instead of the mod-2 basis");
    basis->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* multiply = app.add_subcommand("multiply", "normal form of a product of two expressions");
    multiply->add_option("--space", o.space)->required()->check(CLI::IsMember(spaces_all));
    multiply->add_option("--m", o.m)->check(CLI::PositiveNumber);
    multiply->add_option("--coeffs", o.coeffs)->check(CLI::IsMember({"mod2", "int"}));
    multiply->add_flag("--int", o.integral, "same as --coeffs int");
    multiply->add_option("--eta", o.eta, "value of eta in c3*e for m=5")->check(CLI::IsMember({0, 2}));
    multiply->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    multiply->add_option("operands", o.operands, "two expressions")->expected(2)->required();

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--m-range", o.m_range, "a..b")->required();
    verify->add_option("--suite", o.suite)->check(CLI::IsMember({"rings", "bss", "tcs", "strategy", "all"}));
    verify->add_option("--jobs", o.jobs, "worker threads (default: hardware concurrency)")->check(CLI::PositiveNumber);
    verify->add_flag("--verbose", o.verbose, "list passing checks too");
    verify->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* tcs = app.add_subcommand("tcs", "cup-length certificate for b2 and the resulting lower bound");
    auto* tcs_m = tcs->add_option("--m", o.m)->check(CLI::PositiveNumber);
    tcs->add_option("--m-range", o.m_range, "a..b")->excludes(tcs_m);
    tcs->add_option("--eta", o.eta)->check(CLI::IsMember({0, 2}));
    tcs->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (groups->parsed())
            return cmd_groups(out, o);
        if (basis->parsed())
            return cmd_basis(out, o);
        if (multiply->parsed())
            return cmd_multiply(out, err, o);
        if (verify->parsed())
            return cmd_verify(out, o);
        return cmd_tcs(out, o);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace cfgcoh::cli
