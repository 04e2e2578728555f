#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include <cfgcoh/expr.hpp>
#include <cfgcoh/intrings.hpp>

#include "cli.hpp"

using namespace cfgcoh;
using cfgcoh::cli::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

Expr random_expr(std::mt19937_64& rng, const std::vector<std::string>& names)
{
    auto u = [&](int hi) { return static_cast<int>(rng() % static_cast<unsigned>(hi + 1)); };
    Expr e;
    for (int k = u(3); k >= 0; --k) {
        Term t;
        if (u(1))
            t.coeff = static_cast<std::int64_t>(rng() % 1000);
        const int nf = t.coeff ? u(3) : 1 + u(2);
        for (int f = 0; f < nf; ++f) {
            Factor fac{names[rng() % names.size()], std::nullopt};
            if (u(1))
                fac.exponent = static_cast<std::uint32_t>(rng() % 20);
            t.factors.push_back(fac);
        }
        e.terms.push_back(t);
    }
    return e;
}

} // namespace

TEST(Parser, Examples)
{
    const auto e = parse_expr("b2^2 + 2*d4", "B", Coefficients::integral);
    ASSERT_EQ(e.terms.size(), 2u);
    EXPECT_EQ(e.terms[0].factors, (std::vector<Factor>{{"b2", 2u}}));
    EXPECT_EQ(e.terms[1].coeff, 2);
    const auto f = parse_expr("x1^3*y1", "F", Coefficients::mod2);
    ASSERT_EQ(f.terms.size(), 1u);
    EXPECT_EQ(f.terms[0].factors.size(), 2u);
    EXPECT_EQ(parse_expr("  7 ", "F", Coefficients::mod2).terms[0].coeff, 7);
    EXPECT_EQ(parse_expr("x1 *y1^ 2", "F", Coefficients::mod2), parse_expr("x1*y1^2", "F", Coefficients::mod2));
}

TEST(Parser, Errors)
{
    try {
        parse_expr("q7", "B", Coefficients::integral);
        FAIL() << "accepted an unknown generator";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position, 0u);
        EXPECT_NE(std::string(e.what()).find("unknown generator 'q7'"), std::string::npos);
    }
    try {
        parse_expr("a2 + * b2", "B", Coefficients::integral);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position, 5u);
    }
    EXPECT_THROW(parse_expr("x1^", "F", Coefficients::mod2), ParseError);
    EXPECT_THROW(parse_expr("x1 y1", "F", Coefficients::mod2), ParseError);
    EXPECT_THROW(parse_expr("", "F", Coefficients::mod2), ParseError);
    EXPECT_THROW(parse_expr("X1", "F", Coefficients::mod2), ParseError); // case-sensitive
    EXPECT_THROW(parse_expr("e", "B", Coefficients::mod2), ParseError);
    EXPECT_THROW(parse_expr("x1", "Q", Coefficients::mod2), std::invalid_argument);
}

TEST(Parser, RoundTrip)
{
    std::mt19937_64 rng(51);
    const auto names = alphabet("B", Coefficients::integral);
    for (int k = 0; k < 1000; ++k) {
        const auto e = random_expr(rng, names);
        ASSERT_EQ(parse_expr(print_expr(e), names), e) << print_expr(e);
    }
}

TEST(Evaluation, MatchesDirectProducts)
{
    const UnorderedConfInt b3{3};
    EXPECT_EQ(eval_int(parse_expr("b2^2", "B", Coefficients::integral), b3),
              IntClassB::monomial(b3, {0, 0, 0, 1}, 2));
    EXPECT_EQ(eval_int(parse_expr("b2^2 + 2*d4", "B", Coefficients::integral), b3).to_string(), "0");
    EXPECT_EQ(eval_int(parse_expr("3 + e", "B", Coefficients::integral), b3),
              IntClassB(b3, 3, 1, {}));
    const OrderedConfMod2 f2{2};
    EXPECT_EQ(eval_mod2(parse_expr("y1^2", "F", Coefficients::mod2), f2).to_string(), "x1*y1 + x1^2");
    EXPECT_EQ(eval_mod2(parse_expr("y1^2", "F", Coefficients::mod2), f2),
              eval_mod2(parse_expr("x1^2 + x1*y1", "F", Coefficients::mod2), f2));
    EXPECT_TRUE(eval_mod2(parse_expr("2*x1", "F", Coefficients::mod2), f2).is_zero());
    EXPECT_TRUE(eval_mod2(parse_expr("x1^4000000000", "F", Coefficients::mod2), f2).is_zero());
}

TEST(Cli, GroupsJson)
{
    const auto r = run({"groups", "--space", "B", "--m", "5", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["space"], "B");
    EXPECT_EQ(j["m"], 5);
    EXPECT_EQ(j["eta_m5"], 2);
    const auto& row = j["groups"][8];
    EXPECT_EQ(row["dim"], 8);
    EXPECT_EQ(row["free"], 0);
    EXPECT_EQ(row["z2"], 0);
    EXPECT_EQ(row["z4"], 1);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"space", "m", "eta_m5", "groups"}));
    EXPECT_FALSE(json::parse(run({"groups", "--space", "F", "--m", "5", "--format", "json"}).out).contains("eta_m5"));
}

TEST(Cli, GroupsCsvAndText)
{
    const auto csv = run({"groups", "--space", "F", "--m", "2", "--format", "csv"});
    ASSERT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out, "dim,free,z2,z4\n0,1,0,0\n1,0,0,0\n2,0,2,0\n3,1,0,0\n");
    const auto text = run({"groups", "--space", "B", "--m", "5"});
    ASSERT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("Z4"), std::string::npos);
    EXPECT_NE(text.out.find("Z + <2>"), std::string::npos);
}

TEST(Cli, Multiply)
{
    const auto r = run({"multiply", "--space", "B", "--m", "3", "--int", "b2", "b2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "2*d4 (mod 4)\n");
    const auto f = run({"multiply", "--space", "F", "--m", "5", "--coeffs", "int", "w", "y2"});
    EXPECT_EQ(f.out, "x2^2*z3 (mod 2)\n");
    const auto m2 = run({"multiply", "--space", "B", "--m", "3", "u1*v1", "v1*w2"});
    EXPECT_EQ(m2.out, "u1*w2^2\n");
    const auto j = json::parse(run({"multiply", "--space", "B", "--m", "3", "--int", "--format", "json", "b2", "b2"}).out);
    EXPECT_EQ(j["product"]["terms"][0]["modulus"], 4);
    EXPECT_EQ(j["product"]["terms"][0]["coeff"], 2);
}

TEST(Cli, MultiplyFlagsEta)
{
    const auto r = run({"multiply", "--space", "B", "--m", "5", "--int", "--format", "json", "c3", "e"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["eta_m5"], 2);
    EXPECT_TRUE(j["eta_dependent"].get<bool>());
    EXPECT_FALSE(r.err.empty());
    const auto z = run({"multiply", "--space", "B", "--m", "5", "--int", "--eta", "0", "c3", "e"});
    EXPECT_EQ(z.out, "0\n");
}

TEST(Cli, Tcs)
{
    const auto r = run({"tcs", "--m", "5", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["lower_bound"], 9);
    EXPECT_EQ(j["cup_length"], 4);
    EXPECT_FALSE(j["eta_dependent"].get<bool>());
    const auto t = run({"tcs", "--m", "5"});
    EXPECT_NE(t.out.find("lower_bound=9"), std::string::npos);
    const auto range = json::parse(run({"tcs", "--m-range", "3..6", "--format", "json"}).out);
    EXPECT_EQ(range.size(), 4u);
}

TEST(Cli, BasisCommand)
{
    const auto r = run({"basis", "--space", "B", "--m", "5", "--degree", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const char* mon : {"u1*v1^2", "v1^3", "u1*w2", "v1*w2"})
        EXPECT_NE(r.out.find(mon), std::string::npos) << mon;
    const auto i = run({"basis", "--space", "B", "--m", "5", "--degree", "8", "--int"});
    EXPECT_NE(i.out.find("d4^2"), std::string::npos);
}

TEST(Cli, Verify)
{
    const auto ok = run({"verify", "--m-range", "1..6", "--suite", "all"});
    EXPECT_EQ(ok.code, 0) << ok.out;
    EXPECT_NE(ok.out.find("0 failed"), std::string::npos);
    const auto j = json::parse(run({"verify", "--m-range", "3..4", "--suite", "bss", "--format", "json"}).out);
    EXPECT_EQ(j["failed"], 0);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({"multiply", "--space", "B", "--m", "3", "--int", "q7", "b2"}).code, 2);
    EXPECT_EQ(run({"groups", "--space", "Q", "--m", "3"}).code, 2);
    EXPECT_EQ(run({"groups", "--space", "F"}).code, 2);
    EXPECT_EQ(run({"groups", "--space", "F", "--m", "0"}).code, 2);
    EXPECT_EQ(run({"verify", "--m-range", "5..2"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"multiply", "--space", "B", "--int", "b2", "b2"}).code, 2);
    EXPECT_EQ(run({"tcs"}).code, 2);
}
