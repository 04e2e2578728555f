#pragma once

// Rewriting engine for torsion polynomials with per-monomial moduli (2 or 4),
// and the generic integral class built on top of it: an integer multiple of
// the unit, an integer multiple of an optional torsion-free generator, and a
// torsion part in normal form.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cfgcoh {

template <class Mon>
using TorsionPoly = std::map<Mon, int>;

template <class Mon>
using RawTerms = std::vector<std::pair<Mon, std::int64_t>>;

/// Reduction options. With `rng` set, rewrites are applied in random order
/// (confluence testing); `consulted_eta` records whether the one parameter the
/// relations leave open (c3*e at m = 5) was used.
struct ReductionContext {
    std::mt19937_64* rng = nullptr;
    bool consulted_eta = false;
};

inline int reduce_mod(std::int64_t v, int modulus)
{
    v %= modulus;
    if (v < 0)
        v += modulus;
    return static_cast<int>(v);
}

namespace detail {

template <class Ring>
struct TorsionKeyOrder {
    const Ring* ring;
    bool operator()(const typename Ring::Mon& a, const typename Ring::Mon& b) const
    {
        const auto ka = ring->order_key(a), kb = ring->order_key(b);
        if (ka != kb)
            return ka < kb;
        return a < b;
    }
};

template <class Ring, class Map>
void accumulate(const Ring& ring, Map& poly, const typename Ring::Mon& mon, std::int64_t c)
{
    const int mod = ring.modulus(mon);
    auto it = poly.find(mon);
    const std::int64_t cur = it == poly.end() ? 0 : it->second;
    const int v = reduce_mod(cur + c, mod);
    if (v == 0) {
        if (it != poly.end())
            poly.erase(it);
    } else if (it == poly.end()) {
        poly.emplace(mon, v);
    } else {
        it->second = v;
    }
}

} // namespace detail

/// Normal form of a torsion polynomial. The ring provides `modulus`,
/// `order_key` (strictly decreasing along rewrites) and `rewrites`
/// (alternatives, each a list of (monomial, multiplier) pairs).
template <class Ring>
TorsionPoly<typename Ring::Mon> torsion_normal_form(const Ring& ring, const RawTerms<typename Ring::Mon>& raw,
                                                    ReductionContext* ctx = nullptr)
{
    using Mon = typename Ring::Mon;
    if (ctx && ctx->rng) {
        TorsionPoly<Mon> terms;
        for (const auto& [mon, c] : raw)
            detail::accumulate(ring, terms, mon, c);
        auto& rng = *ctx->rng;
        for (;;) {
            std::vector<Mon> reducible;
            for (const auto& [mon, c] : terms)
                if (!ring.rewrites(mon).empty())
                    reducible.push_back(mon);
            if (reducible.empty())
                return terms;
            const Mon pick = reducible[std::uniform_int_distribution<std::size_t>(0, reducible.size() - 1)(rng)];
            const auto alts = ring.rewrites(pick);
            const auto& rep = alts[std::uniform_int_distribution<std::size_t>(0, alts.size() - 1)(rng)];
            const std::int64_t c = terms.at(pick);
            terms.erase(pick);
            for (const auto& [mon, k] : rep)
                detail::accumulate(ring, terms, mon, c * k);
        }
    }

    std::map<Mon, int, detail::TorsionKeyOrder<Ring>> pending(detail::TorsionKeyOrder<Ring>{&ring});
    for (const auto& [mon, c] : raw)
        detail::accumulate(ring, pending, mon, c);
    TorsionPoly<Mon> result;
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        const auto [mon, c] = *it;
        pending.erase(it);
        const auto alts = ring.rewrites(mon);
        if (alts.empty()) {
            detail::accumulate(ring, result, mon, c);
            continue;
        }
        for (const auto& [rep, k] : alts.front())
            detail::accumulate(ring, pending, rep, static_cast<std::int64_t>(c) * k);
    }
    return result;
}

/// Element of an integral cohomology ring: c1*1 + cfree*g + torsion, where g is
/// the torsion-free generator when the ring has one (g^2 = 0 in every ring here).
template <class Ring>
class IntClass {
public:
    using Mon = typename Ring::Mon;

    explicit IntClass(Ring ring) : ring_(ring) {}
    IntClass(Ring ring, std::int64_t unit, std::int64_t free, const RawTerms<Mon>& torsion,
             ReductionContext* ctx = nullptr)
        : ring_(ring), unit_(unit), free_(free), torsion_(torsion_normal_form(ring, torsion, ctx))
    {
        if (free_ != 0 && !Ring::has_free_generator)
            throw std::invalid_argument("ring has no torsion-free generator");
    }

    static IntClass one(Ring ring) { return IntClass(ring, 1, 0, {}); }
    static IntClass free_generator(Ring ring) { return IntClass(ring, 0, 1, {}); }
    static IntClass monomial(Ring ring, Mon mon, std::int64_t c = 1) { return IntClass(ring, 0, 0, {{mon, c}}); }

    const Ring& ring() const { return ring_; }
    std::int64_t unit_coeff() const { return unit_; }
    std::int64_t free_coeff() const { return free_; }
    const TorsionPoly<Mon>& torsion() const { return torsion_; }
    bool is_zero() const { return unit_ == 0 && free_ == 0 && torsion_.empty(); }
    bool is_torsion() const { return unit_ == 0 && free_ == 0; }

    IntClass& operator+=(const IntClass& o)
    {
        check_same_ring(o);
        unit_ += o.unit_;
        free_ += o.free_;
        for (const auto& [mon, c] : o.torsion_)
            detail::accumulate(ring_, torsion_, mon, c);
        return *this;
    }
    friend IntClass operator+(IntClass a, const IntClass& b) { return a += b; }

    IntClass operator-() const
    {
        IntClass r = *this;
        r.unit_ = -unit_;
        r.free_ = -free_;
        for (auto& [mon, c] : r.torsion_)
            c = reduce_mod(-c, ring_.modulus(mon));
        return r;
    }
    friend IntClass operator-(const IntClass& a, const IntClass& b) { return a + (-b); }

    friend IntClass operator*(std::int64_t n, const IntClass& a)
    {
        IntClass r(a.ring_);
        r.unit_ = n * a.unit_;
        r.free_ = n * a.free_;
        for (const auto& [mon, c] : a.torsion_)
            detail::accumulate(r.ring_, r.torsion_, mon, n * c);
        return r;
    }

    /// Product, reduced through the ring's rewriting rules.
    IntClass times(const IntClass& b, ReductionContext* ctx = nullptr) const
    {
        check_same_ring(b);
        RawTerms<Mon> raw;
        for (const auto& [x, cx] : torsion_) {
            for (const auto& [y, cy] : b.torsion_)
                raw.emplace_back(ring_.multiply(x, y), static_cast<std::int64_t>(cx) * cy);
            if (b.unit_ != 0)
                raw.emplace_back(x, cx * b.unit_);
        }
        if (unit_ != 0)
            for (const auto& [y, cy] : b.torsion_)
                raw.emplace_back(y, cy * unit_);
        if constexpr (Ring::has_free_generator) {
            if (free_ != 0)
                for (const auto& [y, cy] : b.torsion_)
                    for (const auto& [mon, k] : ring_.free_times(y, ctx))
                        raw.emplace_back(mon, free_ * cy * k);
            if (b.free_ != 0)
                for (const auto& [x, cx] : torsion_)
                    for (const auto& [mon, k] : ring_.free_times(x, ctx))
                        raw.emplace_back(mon, b.free_ * cx * k);
        }
        // g^2 = 0
        return IntClass(ring_, unit_ * b.unit_, unit_ * b.free_ + free_ * b.unit_, raw, ctx);
    }
    friend IntClass operator*(const IntClass& a, const IntClass& b) { return a.times(b); }

    IntClass pow(int k) const
    {
        IntClass acc = one(ring_);
        for (int i = 0; i < k; ++i)
            acc = acc * *this;
        return acc;
    }

    /// Additive order of a torsion class (1 for zero); nullopt when not torsion.
    std::optional<int> additive_order() const
    {
        if (!is_torsion())
            return std::nullopt;
        int order = 1;
        for (const auto& [mon, c] : torsion_) {
            const int mod = ring_.modulus(mon);
            const int o = (c % 2 == 1) ? mod : 2; // c in {1,2,3} mod 4 or {1} mod 2
            order = std::max(order, o);
        }
        return order;
    }

    friend bool operator==(const IntClass& a, const IntClass& b)
    {
        return a.ring_ == b.ring_ && a.unit_ == b.unit_ && a.free_ == b.free_ && a.torsion_ == b.torsion_;
    }

    /// Canonical text: terms joined by " + ", torsion terms annotated with their modulus.
    std::string to_string() const
    {
        std::vector<std::string> parts;
        if (unit_ != 0)
            parts.push_back(std::to_string(unit_));
        for (const auto& [mon, c] : torsion_) {
            std::string t = c == 1 ? "" : std::to_string(c) + "*";
            parts.push_back(t + ring_.name(mon) + " (mod " + std::to_string(ring_.modulus(mon)) + ")");
        }
        if (free_ != 0) {
            if constexpr (Ring::has_free_generator) {
                const std::string g = ring_.free_name();
                parts.push_back(free_ == 1 ? g : std::to_string(free_) + "*" + g);
            }
        }
        if (parts.empty())
            return "0";
        std::string s;
        for (const auto& p : parts) {
            if (!s.empty())
                s += " + ";
            s += p;
        }
        return s;
    }

private:
    void check_same_ring(const IntClass& o) const
    {
        if (!(ring_ == o.ring_))
            throw std::invalid_argument(std::string("integral classes from different rings (") + Ring::tag + ")");
    }

    Ring ring_;
    std::int64_t unit_ = 0;
    std::int64_t free_ = 0;
    TorsionPoly<Mon> torsion_;
};

template <class Ring>
std::ostream& operator<<(std::ostream& os, const IntClass<Ring>& c)
{
    return os << c.to_string();
}

} // namespace cfgcoh
