#pragma once

// Integral cohomology of the dihedral group D8, generated by a2, b2, c3, d4 with
// 2a2 = 2b2 = 2c3 = 4d4 = 0, b2^2 = a2 b2 and c3^2 = a2 d4, together with its
// mod-2 reduction and the connecting map of the coefficient sequence Z -> Z -> F2.

#include <compare>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mod2rings.hpp"
#include "rewriting.hpp"

namespace cfgcoh {

/// Torsion monomial a2^i b2^eb c3^ec d4^j.
struct MonABCD {
    int i = 0;
    int eb = 0;
    int ec = 0;
    int j = 0;
    friend auto operator<=>(const MonABCD&, const MonABCD&) = default;

    bool is_pure_d() const { return i == 0 && eb == 0 && ec == 0 && j >= 1; }
    int degree() const { return 2 * i + 2 * eb + 3 * ec + 4 * j; }
};

using Rewrite = std::vector<std::pair<MonABCD, int>>;

namespace detail {

inline std::string abcd_name(const MonABCD& m)
{
    std::string s;
    append_power(s, "a2", m.i);
    append_power(s, "b2", m.eb);
    append_power(s, "c3", m.ec);
    append_power(s, "d4", m.j);
    return s.empty() ? "1" : s;
}

// b2^2 -> a2 b2, c3^2 -> a2 d4 (signs drop: both sides are 2-torsion)
inline void d8_square_rewrites(const MonABCD& a, std::vector<Rewrite>& alts)
{
    if (a.eb >= 2)
        alts.push_back({{MonABCD{a.i + 1, a.eb - 1, a.ec, a.j}, 1}});
    if (a.ec >= 2)
        alts.push_back({{MonABCD{a.i + 1, a.eb, a.ec - 2, a.j + 1}, 1}});
}

inline std::tuple<int, int, int> abcd_order_key(const MonABCD& a)
{
    return {a.eb + a.ec, a.is_pure_d() ? 0 : 1, a.i + a.j};
}

inline std::vector<std::pair<std::string, MonABCD>> abcd_generators()
{
    return {{"a2", {1, 0, 0, 0}}, {"b2", {0, 1, 0, 0}}, {"c3", {0, 0, 1, 0}}, {"d4", {0, 0, 0, 1}}};
}

} // namespace detail

struct DihedralInt {
    using Mon = MonABCD;
    static constexpr const char* tag = "D8";
    static constexpr bool has_free_generator = false;
    int m = 0; // unused

    int degree(const Mon& a) const { return a.degree(); }
    int modulus(const Mon& a) const { return a.is_pure_d() ? 4 : 2; }
    Mon multiply(const Mon& a, const Mon& b) const { return {a.i + b.i, a.eb + b.eb, a.ec + b.ec, a.j + b.j}; }
    std::vector<Rewrite> rewrites(const Mon& a) const
    {
        std::vector<Rewrite> alts;
        detail::d8_square_rewrites(a, alts);
        return alts;
    }
    std::tuple<int, int, int> order_key(const Mon& a) const { return detail::abcd_order_key(a); }
    std::string name(const Mon& a) const { return detail::abcd_name(a); }
    static std::vector<std::pair<std::string, Mon>> generators() { return detail::abcd_generators(); }
    friend bool operator==(const DihedralInt&, const DihedralInt&) = default;
};

using D8IntClass = IntClass<DihedralInt>;
using D8Mod2Class = Mod2Class<DihedralMod2>;

inline D8IntClass mul_d8(const D8IntClass& a, const D8IntClass& b) { return a * b; }

/// Additive basis of H^n(BD8): a2^i b2^eb c3^ec d4^j with eb, ec <= 1, sorted.
inline std::vector<MonABCD> d8_torsion_basis(int n)
{
    std::vector<MonABCD> out;
    if (n <= 0)
        return out;
    for (int ec = 0; ec <= 1; ++ec)
        for (int eb = 0; eb <= 1; ++eb)
            for (int j = 0; 4 * j <= n; ++j) {
                const int rest = n - 3 * ec - 2 * eb - 4 * j;
                if (rest >= 0 && rest % 2 == 0)
                    out.push_back({rest / 2, eb, ec, j});
            }
    std::sort(out.begin(), out.end());
    return out;
}

/// Image of a torsion monomial under mod-2 reduction, as a raw u1/v1/w2 monomial.
inline MonUVW rho_monomial(const MonABCD& a)
{
    // a2 -> v1^2, b2 -> u1 v1, c3 -> v1 w2, d4 -> w2^2
    return {a.eb, 2 * a.i + a.eb + a.ec, a.ec + 2 * a.j};
}

template <class Ring>
std::vector<MonUVW> rho_torsion_raw(const IntClass<Ring>& c)
{
    std::vector<MonUVW> raw;
    for (const auto& [mon, coeff] : c.torsion())
        if (coeff % 2 == 1)
            raw.push_back(rho_monomial(mon));
    return raw;
}

inline D8Mod2Class rho_d8(const D8IntClass& c)
{
    auto raw = rho_torsion_raw(c);
    if (c.unit_coeff() % 2 != 0)
        raw.push_back(MonUVW{});
    return D8Mod2Class(DihedralMod2{}, raw);
}

/// Connecting map H^(n-1)(BD8; F2) -> H^n(BD8), on u1^eps v1^(2i1+e1) w2^(2i2+e2).
inline RawTerms<MonABCD> partial_monomial(const MonUVW& mon)
{
    const int eps = mon.eps;
    const int i1 = mon.r / 2, e1 = mon.r % 2;
    const int i2 = mon.s / 2, e2 = mon.s % 2;
    if (e1 == 0 && e2 == 0)
        return {{MonABCD{i1, 1, 0, i2}, eps}};
    if (e1 == 1 && e2 == 1)
        return {{MonABCD{i1, 1, 1, i2}, eps}};
    if (e1 == 1)
        return {{MonABCD{i1 + 1, 0, 0, i2}, 1 + eps}};
    return {{MonABCD{i1, 0, 1 - eps, i2 + eps}, 1 + eps}};
}

inline D8IntClass partial(const D8Mod2Class& c)
{
    RawTerms<MonABCD> raw;
    for (const auto& t : c.terms()) {
        if (t == MonUVW{})
            continue; // the unit is the reduction of 1
        for (const auto& term : partial_monomial(t))
            if (term.second != 0)
                raw.push_back(term);
    }
    return D8IntClass(DihedralInt{}, 0, 0, raw);
}

} // namespace cfgcoh
