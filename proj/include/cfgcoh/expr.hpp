#pragma once

// Typed polynomial expressions over a ring's generators:
//   expr   := term ('+' term)*
//   term   := int | [int '*'] factor ('*' factor)*
//   factor := ident ['^' uint]
// Whitespace is ignored, identifiers are case-sensitive.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mod2rings.hpp"
#include "rewriting.hpp"

namespace cfgcoh {

struct Factor {
    std::string name;
    std::optional<std::uint32_t> exponent;
    friend bool operator==(const Factor&, const Factor&) = default;
};

struct Term {
    std::optional<std::int64_t> coeff;
    std::vector<Factor> factors;
    friend bool operator==(const Term&, const Term&) = default;
};

struct Expr {
    std::vector<Term> terms;
    friend bool operator==(const Expr&, const Expr&) = default;
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos)
    {
    }
};

enum class Coefficients { mod2, integral };

/// Generator names of a ring: space is "F", "B", "D8" or "PxP".
inline std::vector<std::string> alphabet(std::string_view space, Coefficients coeffs)
{
    const bool mod2 = coeffs == Coefficients::mod2;
    if (space == "F")
        return mod2 ? std::vector<std::string>{"x1", "y1"} : std::vector<std::string>{"x2", "y2", "z3", "w"};
    if (space == "PxP")
        return mod2 ? std::vector<std::string>{"x1", "y1"} : std::vector<std::string>{"x2", "y2", "z3"};
    if (space == "B")
        return mod2 ? std::vector<std::string>{"u1", "v1", "w2"}
                    : std::vector<std::string>{"a2", "b2", "c3", "d4", "e"};
    if (space == "D8")
        return mod2 ? std::vector<std::string>{"u1", "v1", "w2"} : std::vector<std::string>{"a2", "b2", "c3", "d4"};
    throw std::invalid_argument("unknown space '" + std::string(space) + "'");
}

namespace detail {

class ExprParser {
public:
    ExprParser(std::string_view text, const std::vector<std::string>& names) : s_(text), names_(names) {}

    Expr parse()
    {
        Expr e;
        e.terms.push_back(term());
        while (peek() == '+') {
            ++pos_;
            e.terms.push_back(term());
        }
        if (peek() != '\0')
            throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return e;
    }

private:
    char peek()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    std::uint64_t number()
    {
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > (UINT64_MAX - 9) / 10)
                throw ParseError("number too large", start);
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    Term term()
    {
        Term t;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::size_t start = pos_;
            const auto v = number();
            if (v > static_cast<std::uint64_t>(INT64_MAX))
                throw ParseError("coefficient too large", start);
            t.coeff = static_cast<std::int64_t>(v);
            if (peek() != '*')
                return t;
            ++pos_;
        }
        t.factors.push_back(factor());
        while (peek() == '*') {
            ++pos_;
            t.factors.push_back(factor());
        }
        return t;
    }

    Factor factor()
    {
        const char c = peek();
        const std::size_t start = pos_;
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError(c == '\0' ? "expected a generator, found end of input"
                                       : std::string("expected a generator, found '") + c + "'",
                             start);
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        Factor f{std::string(s_.substr(start, pos_ - start)), std::nullopt};
        if (std::find(names_.begin(), names_.end(), f.name) == names_.end())
            throw ParseError("unknown generator '" + f.name + "'", start);
        if (peek() == '^') {
            ++pos_;
            const bool digit = std::isdigit(static_cast<unsigned char>(peek()));
            const std::size_t at = pos_;
            if (!digit)
                throw ParseError("expected an exponent", at);
            const auto v = number();
            if (v > UINT32_MAX)
                throw ParseError("exponent too large", at);
            f.exponent = static_cast<std::uint32_t>(v);
        }
        return f;
    }

    std::string_view s_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Expr parse_expr(std::string_view text, const std::vector<std::string>& names)
{
    return detail::ExprParser(text, names).parse();
}

inline Expr parse_expr(std::string_view text, std::string_view space, Coefficients coeffs)
{
    return parse_expr(text, alphabet(space, coeffs));
}

inline std::string print_expr(const Expr& e)
{
    std::string s;
    for (const auto& t : e.terms) {
        if (!s.empty())
            s += " + ";
        if (t.coeff)
            s += std::to_string(*t.coeff) + (t.factors.empty() ? "" : "*");
        for (std::size_t i = 0; i < t.factors.size(); ++i) {
            if (i > 0)
                s += "*";
            s += t.factors[i].name;
            if (t.factors[i].exponent)
                s += "^" + std::to_string(*t.factors[i].exponent);
        }
    }
    return s;
}

namespace detail {

template <class Gens>
auto find_generator(const Gens& gens, const std::string& name)
{
    auto it = std::find_if(gens.begin(), gens.end(), [&](const auto& g) { return g.first == name; });
    if (it == gens.end())
        throw std::invalid_argument("generator '" + name + "' does not belong to this ring");
    return it->second;
}

} // namespace detail

template <class Ring>
Mod2Class<Ring> eval_mod2(const Expr& e, const Ring& ring)
{
    using C = Mod2Class<Ring>;
    const auto gens = Ring::generators();
    C sum(ring);
    for (const auto& t : e.terms) {
        if (t.coeff && *t.coeff % 2 == 0)
            continue;
        C prod = C::one(ring);
        for (const auto& f : t.factors) {
            const C g = C::monomial(ring, detail::find_generator(gens, f.name));
            for (std::uint32_t k = 0; k < f.exponent.value_or(1) && !prod.is_zero(); ++k)
                prod = prod * g;
        }
        sum += prod;
    }
    return sum;
}

template <class Ring>
IntClass<Ring> eval_int(const Expr& e, const Ring& ring, ReductionContext* ctx = nullptr)
{
    using C = IntClass<Ring>;
    const auto gens = Ring::generators();
    C sum(ring);
    for (const auto& t : e.terms) {
        C prod = C::one(ring);
        for (const auto& f : t.factors) {
            C g(ring);
            if constexpr (Ring::has_free_generator) {
                if (f.name == ring.free_name())
                    g = C::free_generator(ring);
                else
                    g = C::monomial(ring, detail::find_generator(gens, f.name));
            } else {
                g = C::monomial(ring, detail::find_generator(gens, f.name));
            }
            for (std::uint32_t k = 0; k < f.exponent.value_or(1) && !prod.is_zero(); ++k)
                prod = prod.times(g, ctx);
        }
        sum += t.coeff.value_or(1) * prod;
    }
    return sum;
}

} // namespace cfgcoh
