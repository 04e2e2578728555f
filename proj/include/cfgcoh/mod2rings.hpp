#pragma once

// Mod-2 cohomology rings presented as quotients of polynomial rings, with
// oriented rewriting rules for normal forms and the Sq^1 derivation.
//
//   ProjSquareMod2     H*(P^oo x P^oo; F2) = F2[x1, y1]
//   OrderedConfMod2    H*(F(P^m,2); F2)    = F2[x1, y1] / (x1^(m+1), y1^(m+1), sum_{i+j=m} x1^i y1^j)
//   DihedralMod2       H*(BD8; F2)         = F2[u1, v1, w2] / (u1^2 + u1 v1)
//   UnorderedConfMod2  H*(B(P^m,2); F2)    = DihedralMod2 / (R_{m+s}, 0 <= s <= m)

#include <algorithm>
#include <compare>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "exactalg.hpp"

namespace cfgcoh {

struct MonXY {
    int i = 0; // exponent of x1
    int j = 0; // exponent of y1
    friend auto operator<=>(const MonXY&, const MonXY&) = default;
};

struct MonUVW {
    int eps = 0; // exponent of u1 (at most 1 in normal form)
    int r = 0;   // exponent of v1
    int s = 0;   // exponent of w2
    friend auto operator<=>(const MonUVW&, const MonUVW&) = default;
};

namespace detail {

inline void append_power(std::string& out, const char* name, int e)
{
    if (e == 0)
        return;
    if (!out.empty())
        out += '*';
    out += name;
    if (e != 1)
        out += '^' + std::to_string(e);
}

inline std::string xy_name(MonXY m)
{
    std::string s;
    append_power(s, "x1", m.i);
    append_power(s, "y1", m.j);
    return s.empty() ? "1" : s;
}

inline std::string uvw_name(MonUVW m)
{
    std::string s;
    append_power(s, "u1", m.eps);
    append_power(s, "v1", m.r);
    append_power(s, "w2", m.s);
    return s.empty() ? "1" : s;
}

inline std::vector<MonXY> xy_sq1(MonXY m)
{
    std::vector<MonXY> out;
    if (m.i % 2)
        out.push_back({m.i + 1, m.j});
    if (m.j % 2)
        out.push_back({m.i, m.j + 1});
    return out;
}

// Cartan formula on u1^eps v1^r w2^s with eps <= 1.
inline std::vector<MonUVW> uvw_sq1(MonUVW m)
{
    if ((m.eps + m.r + m.s) % 2 == 0)
        return {};
    return {MonUVW{m.eps, m.r + 1, m.s}};
}

inline std::vector<std::pair<std::string, MonXY>> xy_generators()
{
    return {{"x1", {1, 0}}, {"y1", {0, 1}}};
}

inline std::vector<std::pair<std::string, MonUVW>> uvw_generators()
{
    return {{"u1", {1, 0, 0}}, {"v1", {0, 1, 0}}, {"w2", {0, 0, 1}}};
}

} // namespace detail

// Each ring exposes: `Mon`, `degree`, `multiply` (monomial product before
// reduction), `rewrites` (alternative one-step rewrites of a monomial; empty
// when the monomial is in normal form, an empty alternative means "-> 0"),
// `order_key` (strictly decreases along every rewrite), `sq1_raw`, `basis`.

struct ProjSquareMod2 {
    using Mon = MonXY;
    static constexpr const char* tag = "PxP";
    int m = 0; // unused, kept so every ring carries a parameter

    int degree(Mon a) const { return a.i + a.j; }
    Mon multiply(Mon a, Mon b) const { return {a.i + b.i, a.j + b.j}; }
    std::vector<std::vector<Mon>> rewrites(Mon) const { return {}; }
    std::tuple<int, int> order_key(Mon a) const { return {a.j, a.i}; }
    std::vector<Mon> sq1_raw(Mon a) const { return detail::xy_sq1(a); }
    std::vector<Mon> basis(int d) const
    {
        std::vector<Mon> out;
        for (int i = 0; i <= d; ++i)
            out.push_back({i, d - i});
        return out;
    }
    std::string name(Mon a) const { return detail::xy_name(a); }
    static std::vector<std::pair<std::string, Mon>> generators() { return detail::xy_generators(); }
    friend bool operator==(const ProjSquareMod2&, const ProjSquareMod2&) = default;
};

struct OrderedConfMod2 {
    using Mon = MonXY;
    static constexpr const char* tag = "F";
    int m = 1;

    int degree(Mon a) const { return a.i + a.j; }
    Mon multiply(Mon a, Mon b) const { return {a.i + b.i, a.j + b.j}; }

    // x1^(m+1) -> 0;  y1^m -> sum_{k=1}^{m} x1^k y1^(m-k)
    std::vector<std::vector<Mon>> rewrites(Mon a) const
    {
        std::vector<std::vector<Mon>> alts;
        if (a.i > m)
            alts.emplace_back();
        if (a.j >= m) {
            std::vector<Mon> rhs;
            for (int k = 1; k <= m; ++k)
                rhs.push_back({a.i + k, a.j - k});
            alts.push_back(std::move(rhs));
        }
        return alts;
    }
    std::tuple<int, int> order_key(Mon a) const { return {a.j, a.i}; }
    std::vector<Mon> sq1_raw(Mon a) const { return detail::xy_sq1(a); }
    std::vector<Mon> basis(int d) const
    {
        std::vector<Mon> out;
        for (int i = 0; i <= std::min(d, m); ++i)
            if (d - i <= m - 1)
                out.push_back({i, d - i});
        return out;
    }
    std::string name(Mon a) const { return detail::xy_name(a); }
    static std::vector<std::pair<std::string, Mon>> generators() { return detail::xy_generators(); }
    friend bool operator==(const OrderedConfMod2&, const OrderedConfMod2&) = default;
};

struct DihedralMod2 {
    using Mon = MonUVW;
    static constexpr const char* tag = "D8";
    int m = 0; // unused

    int degree(Mon a) const { return a.eps + a.r + 2 * a.s; }
    Mon multiply(Mon a, Mon b) const { return {a.eps + b.eps, a.r + b.r, a.s + b.s}; }
    // u1^2 -> u1 v1
    std::vector<std::vector<Mon>> rewrites(Mon a) const
    {
        if (a.eps >= 2)
            return {{Mon{1, a.r + a.eps - 1, a.s}}};
        return {};
    }
    std::tuple<int, int> order_key(Mon a) const { return {a.eps, a.r + a.s}; }
    std::vector<Mon> sq1_raw(Mon a) const { return detail::uvw_sq1(a); }
    std::vector<Mon> basis(int d) const
    {
        std::vector<Mon> out;
        for (int eps = 0; eps <= std::min(d, 1); ++eps)
            for (int r = 0; r <= d - eps; ++r)
                if ((d - eps - r) % 2 == 0)
                    out.push_back({eps, r, (d - eps - r) / 2});
        std::sort(out.begin(), out.end());
        return out;
    }
    std::string name(Mon a) const { return detail::uvw_name(a); }
    static std::vector<std::pair<std::string, Mon>> generators() { return detail::uvw_generators(); }
    friend bool operator==(const DihedralMod2&, const DihedralMod2&) = default;
};

struct UnorderedConfMod2 {
    using Mon = MonUVW;
    static constexpr const char* tag = "B";
    int m = 1;

    int degree(Mon a) const { return a.eps + a.r + 2 * a.s; }
    Mon multiply(Mon a, Mon b) const { return {a.eps + b.eps, a.r + b.r, a.s + b.s}; }

    // u1^2 -> u1 v1;  v1^(m-s) w2^s -> sum_{i>=1} C(m-s-i, i) v1^(m-s-2i) w2^(s+i)
    // The second rule may match a monomial through several s; each match is an alternative.
    std::vector<std::vector<Mon>> rewrites(Mon a) const
    {
        std::vector<std::vector<Mon>> alts;
        if (a.eps >= 2)
            alts.push_back({Mon{1, a.r + a.eps - 1, a.s}});
        if (a.r + a.s >= m) {
            for (int sp = std::max(0, m - a.r); sp <= std::min(a.s, m); ++sp) {
                std::vector<Mon> rhs;
                for (int i = 1; m - sp - 2 * i >= 0; ++i)
                    if (binom_mod2(m - sp - i, i))
                        rhs.push_back({a.eps, a.r - 2 * i, a.s + i});
                alts.push_back(std::move(rhs));
            }
        }
        return alts;
    }
    std::tuple<int, int> order_key(Mon a) const { return {a.eps, a.r + a.s}; }
    std::vector<Mon> sq1_raw(Mon a) const { return detail::uvw_sq1(a); }
    std::vector<Mon> basis(int d) const
    {
        std::vector<Mon> out;
        for (auto mon : DihedralMod2{}.basis(d))
            if (mon.r + mon.s < m)
                out.push_back(mon);
        return out;
    }
    std::string name(Mon a) const { return detail::uvw_name(a); }
    static std::vector<std::pair<std::string, Mon>> generators() { return detail::uvw_generators(); }
    friend bool operator==(const UnorderedConfMod2&, const UnorderedConfMod2&) = default;
};

namespace detail {

template <class Ring>
struct KeyOrder {
    const Ring* ring;
    bool operator()(const typename Ring::Mon& a, const typename Ring::Mon& b) const
    {
        const auto ka = ring->order_key(a), kb = ring->order_key(b);
        if (ka != kb)
            return ka < kb;
        return a < b;
    }
};

template <class Set, class Mon>
void toggle(Set& s, const Mon& mon)
{
    auto [it, inserted] = s.insert(mon);
    if (!inserted)
        s.erase(it);
}

} // namespace detail

/// Reduces a sum of monomials (repeats cancel in pairs) to normal form.
/// Always rewrites the largest pending monomial first, so each monomial is
/// visited once and the result is reached without any Groebner machinery.
template <class Ring>
std::set<typename Ring::Mon> normal_form(const Ring& ring, const std::vector<typename Ring::Mon>& raw)
{
    using Mon = typename Ring::Mon;
    std::set<Mon, detail::KeyOrder<Ring>> pending(detail::KeyOrder<Ring>{&ring});
    for (const auto& mon : raw)
        detail::toggle(pending, mon);
    std::set<Mon> result;
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        const Mon mon = *it;
        pending.erase(it);
        auto alts = ring.rewrites(mon);
        if (alts.empty()) {
            detail::toggle(result, mon);
            continue;
        }
        for (const auto& rep : alts.front())
            detail::toggle(pending, rep);
    }
    return result;
}

/// Same reduction, but each step rewrites a randomly chosen reducible monomial
/// with a randomly chosen applicable rule. Used to exercise confluence.
template <class Ring, class Rng>
std::set<typename Ring::Mon> normal_form_randomized(const Ring& ring, const std::vector<typename Ring::Mon>& raw,
                                                    Rng& rng)
{
    using Mon = typename Ring::Mon;
    std::set<Mon> terms;
    for (const auto& mon : raw)
        detail::toggle(terms, mon);
    for (;;) {
        std::vector<Mon> reducible;
        for (const auto& mon : terms)
            if (!ring.rewrites(mon).empty())
                reducible.push_back(mon);
        if (reducible.empty())
            return terms;
        const Mon pick = reducible[std::uniform_int_distribution<std::size_t>(0, reducible.size() - 1)(rng)];
        auto alts = ring.rewrites(pick);
        const auto& rep = alts[std::uniform_int_distribution<std::size_t>(0, alts.size() - 1)(rng)];
        terms.erase(pick);
        for (const auto& r : rep)
            detail::toggle(terms, r);
    }
}

template <class Ring>
bool is_normal(const Ring& ring, const typename Ring::Mon& mon)
{
    return ring.rewrites(mon).empty();
}

/// An element of a presented F2-algebra, always held in normal form.
template <class Ring>
class Mod2Class {
public:
    using Mon = typename Ring::Mon;

    explicit Mod2Class(Ring ring) : ring_(ring) {}
    Mod2Class(Ring ring, const std::vector<Mon>& raw) : ring_(ring), terms_(normal_form(ring, raw)) {}

    static Mod2Class one(Ring ring) { return Mod2Class(ring, {Mon{}}); }
    static Mod2Class monomial(Ring ring, Mon mon) { return Mod2Class(ring, {mon}); }

    const Ring& ring() const { return ring_; }
    const std::set<Mon>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// true when all terms share one degree (the zero class counts as homogeneous)
    bool is_homogeneous() const
    {
        if (terms_.empty())
            return true;
        const int d = ring_.degree(*terms_.begin());
        return std::all_of(terms_.begin(), terms_.end(), [&](const Mon& t) { return ring_.degree(t) == d; });
    }

    Mod2Class& operator+=(const Mod2Class& o)
    {
        check_same_ring(o);
        for (const auto& t : o.terms_)
            detail::toggle(terms_, t);
        return *this;
    }
    friend Mod2Class operator+(Mod2Class a, const Mod2Class& b) { return a += b; }

    friend Mod2Class operator*(const Mod2Class& a, const Mod2Class& b)
    {
        a.check_same_ring(b);
        std::vector<Mon> raw;
        raw.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_)
                raw.push_back(a.ring_.multiply(x, y));
        return Mod2Class(a.ring_, raw);
    }

    Mod2Class pow(int k) const
    {
        Mod2Class acc = one(ring_);
        for (int i = 0; i < k; ++i)
            acc = acc * *this;
        return acc;
    }

    friend bool operator==(const Mod2Class& a, const Mod2Class& b)
    {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& t : terms_) {
            if (!s.empty())
                s += " + ";
            s += ring_.name(t);
        }
        return s;
    }

private:
    void check_same_ring(const Mod2Class& o) const
    {
        if (!(ring_ == o.ring_))
            throw std::invalid_argument(std::string("mod-2 classes from different rings (") + Ring::tag +
                                        " with m=" + std::to_string(ring_.m) + " vs m=" + std::to_string(o.ring_.m) +
                                        ")");
    }

    Ring ring_;
    std::set<Mon> terms_;
};

template <class Ring>
Mod2Class<Ring> mul_mod2(const Mod2Class<Ring>& a, const Mod2Class<Ring>& b)
{
    return a * b;
}

inline Mod2Class<OrderedConfMod2> nf_F_mod2(int m, const std::vector<MonXY>& raw)
{
    return Mod2Class<OrderedConfMod2>(OrderedConfMod2{m}, raw);
}

inline Mod2Class<UnorderedConfMod2> nf_B_mod2(int m, const std::vector<MonUVW>& raw)
{
    return Mod2Class<UnorderedConfMod2>(UnorderedConfMod2{m}, raw);
}

/// First Steenrod square, extended from generators as a derivation.
template <class Ring>
Mod2Class<Ring> sq1(const Mod2Class<Ring>& c)
{
    std::vector<typename Ring::Mon> raw;
    for (const auto& t : c.terms())
        for (const auto& s : c.ring().sq1_raw(t))
            raw.push_back(s);
    return Mod2Class<Ring>(c.ring(), raw);
}

/// Normal-form monomials of degree d, in lexicographic order of exponent tuples.
template <class Ring>
std::vector<typename Ring::Mon> basis_of_degree(const Ring& ring, int d)
{
    if (d < 0)
        return {};
    return ring.basis(d);
}

/// Matrix of Sq^1 from degree d to degree d+1: one row per source basis monomial.
template <class Ring>
F2Matrix sq1_matrix(const Ring& ring, int d)
{
    const auto src = basis_of_degree(ring, d);
    const auto dst = basis_of_degree(ring, d + 1);
    F2Matrix mat(static_cast<int>(src.size()), static_cast<int>(dst.size()));
    for (std::size_t r = 0; r < src.size(); ++r) {
        const auto img = sq1(Mod2Class<Ring>::monomial(ring, src[r]));
        for (const auto& t : img.terms()) {
            auto pos = std::lower_bound(dst.begin(), dst.end(), t);
            if (pos == dst.end() || *pos != t)
                throw std::logic_error("sq1_matrix: image outside the degree basis");
            mat.set(static_cast<int>(r), static_cast<int>(pos - dst.begin()), true);
        }
    }
    return mat;
}

/// Coordinates of a homogeneous class in the degree-d basis.
template <class Ring>
std::vector<int> coordinates(const Mod2Class<Ring>& c, int d)
{
    const auto b = basis_of_degree(c.ring(), d);
    std::vector<int> cols;
    for (const auto& t : c.terms()) {
        auto pos = std::lower_bound(b.begin(), b.end(), t);
        if (pos == b.end() || *pos != t)
            throw std::invalid_argument("coordinates: class has a term outside degree " + std::to_string(d));
        cols.push_back(static_cast<int>(pos - b.begin()));
    }
    return cols;
}

/// Top nonvanishing degree of the finite rings.
inline int top_degree(const OrderedConfMod2& r) { return 2 * r.m - 1; }
inline int top_degree(const UnorderedConfMod2& r) { return 2 * r.m - 1; }

template <class Ring>
std::ostream& operator<<(std::ostream& os, const Mod2Class<Ring>& c)
{
    return os << c.to_string();
}

} // namespace cfgcoh
