#pragma once

// Integral cohomology rings of the ordered and unordered configuration spaces
// of two points in P^m, written m = 2t + delta with delta in {0,1}.
//
//   OrderedConfInt    H*(F(P^m,2)):  torsion x2^i y2^j z3^ez, free class w (degree 2m-1 or m)
//   UnorderedConfInt  H*(B(P^m,2)):  torsion a2^i b2^eb c3^ec d4^j, free class e (degree 2m-1 or m)
//   ProjSquareInt     H*(P^oo x P^oo): torsion x2^i y2^j z3^ez, z3^2 = x2 y2 (x2 + y2)

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dihedral.hpp"
#include "exactalg.hpp"
#include "mod2rings.hpp"
#include "rewriting.hpp"

namespace cfgcoh {

struct MonXYZ {
    int i = 0;  // exponent of x2
    int j = 0;  // exponent of y2
    int ez = 0; // exponent of z3
    friend auto operator<=>(const MonXYZ&, const MonXYZ&) = default;
    int degree() const { return 2 * i + 2 * j + 3 * ez; }
};

using RewriteXYZ = std::vector<std::pair<MonXYZ, int>>;

namespace detail {

inline std::string xyz_name(const MonXYZ& m)
{
    std::string s;
    append_power(s, "x2", m.i);
    append_power(s, "y2", m.j);
    append_power(s, "z3", m.ez);
    return s.empty() ? "1" : s;
}

// z3^2 -> x2^2 y2 + x2 y2^2
inline void z_square_rewrite(const MonXYZ& a, std::vector<RewriteXYZ>& alts)
{
    if (a.ez >= 2)
        alts.push_back({{MonXYZ{a.i + 2, a.j + 1, a.ez - 2}, 1}, {MonXYZ{a.i + 1, a.j + 2, a.ez - 2}, 1}});
}

inline std::vector<std::pair<std::string, MonXYZ>> xyz_generators()
{
    return {{"x2", {1, 0, 0}}, {"y2", {0, 1, 0}}, {"z3", {0, 0, 1}}};
}

// picks which generator of `present` to peel off first
inline int pick_generator(const std::vector<int>& present, ReductionContext* ctx)
{
    if (ctx && ctx->rng)
        return present[std::uniform_int_distribution<std::size_t>(0, present.size() - 1)(*ctx->rng)];
    return present.front();
}

} // namespace detail

struct ProjSquareInt {
    using Mon = MonXYZ;
    static constexpr const char* tag = "PxP";
    static constexpr bool has_free_generator = false;
    int m = 0; // unused

    int degree(const Mon& a) const { return a.degree(); }
    int modulus(const Mon&) const { return 2; }
    Mon multiply(const Mon& a, const Mon& b) const { return {a.i + b.i, a.j + b.j, a.ez + b.ez}; }
    std::vector<RewriteXYZ> rewrites(const Mon& a) const
    {
        std::vector<RewriteXYZ> alts;
        detail::z_square_rewrite(a, alts);
        return alts;
    }
    std::tuple<int, int, int> order_key(const Mon& a) const { return {a.ez, a.j, a.i}; }
    std::string name(const Mon& a) const { return detail::xyz_name(a); }
    static std::vector<std::pair<std::string, Mon>> generators() { return detail::xyz_generators(); }
    friend bool operator==(const ProjSquareInt&, const ProjSquareInt&) = default;
};

struct OrderedConfInt {
    using Mon = MonXYZ;
    static constexpr const char* tag = "F";
    static constexpr bool has_free_generator = true;
    int m = 1;

    int t() const { return m / 2; }
    int delta() const { return m % 2; }
    int free_degree() const { return delta() ? m : 2 * m - 1; }
    std::string free_name() const { return "w"; }

    int degree(const Mon& a) const { return a.degree(); }
    int modulus(const Mon&) const { return 2; }
    Mon multiply(const Mon& a, const Mon& b) const { return {a.i + b.i, a.j + b.j, a.ez + b.ez}; }

    std::vector<RewriteXYZ> rewrites(const Mon& a) const
    {
        std::vector<RewriteXYZ> alts;
        detail::z_square_rewrite(a, alts);
        const int t = this->t();
        if (a.i > t || a.j > t)
            alts.emplace_back();
        if (a.ez >= 1) {
            // odd m: y2^t z3 -> sum_{k>=1} x2^k y2^(t-k) z3
            // even m: y2^(t-1) z3 -> sum_{k>=1} x2^k y2^(t-1-k) z3, and x2^t z3 -> 0
            const int top = delta() ? t : t - 1;
            if (a.j >= top) {
                RewriteXYZ rhs;
                for (int k = 1; k <= top; ++k)
                    rhs.push_back({MonXYZ{a.i + k, a.j - k, a.ez}, 1});
                alts.push_back(std::move(rhs));
            }
            if (!delta() && a.i >= t)
                alts.emplace_back();
        }
        if (!delta() && a.i >= t && a.j >= t)
            alts.emplace_back();
        return alts;
    }
    std::tuple<int, int, int> order_key(const Mon& a) const { return {a.ez, a.j, a.i}; }

    /// w * a. For odd m: w x2 = w z3 = 0 and w y2 = x2^t z3; for even m the product vanishes.
    RawTerms<Mon> free_times(const Mon& a, ReductionContext* ctx) const
    {
        if (!delta())
            return {};
        std::vector<int> present;
        if (a.i > 0)
            present.push_back(0);
        if (a.j > 0)
            present.push_back(1);
        if (a.ez > 0)
            present.push_back(2);
        if (present.empty() || detail::pick_generator(present, ctx) != 1)
            return {};
        return {{MonXYZ{a.i + t(), a.j - 1, a.ez + 1}, 1}};
    }

    std::string name(const Mon& a) const { return detail::xyz_name(a); }
    static std::vector<std::pair<std::string, Mon>> generators() { return detail::xyz_generators(); }
    friend bool operator==(const OrderedConfInt&, const OrderedConfInt&) = default;
};

struct UnorderedConfInt {
    using Mon = MonABCD;
    static constexpr const char* tag = "B";
    static constexpr bool has_free_generator = true;
    int m = 1;
    int eta_m5 = 2; // c3 e5 = eta d4^2; only eta in {0,2} is known

    int t() const { return m / 2; }
    int delta() const { return m % 2; }
    int free_degree() const { return delta() ? m : 2 * m - 1; }
    std::string free_name() const { return "e"; }

    int degree(const Mon& a) const { return a.degree(); }
    int modulus(const Mon& a) const { return a.is_pure_d() ? 4 : 2; }
    Mon multiply(const Mon& a, const Mon& b) const { return {a.i + b.i, a.eb + b.eb, a.ec + b.ec, a.j + b.j}; }

    // The relations a2 R_{t,s} = 0, b2 R_{t,s} + iota_{2t+2s+2} = 0 (0 <= s <= t) and
    // c3 R_{t-1+delta,s} = 0 (0 <= s <= t-1+delta), each oriented on its leading
    // monomial and applied to every multiple of it; plus d4^(t+delta) = 0.
    std::vector<Rewrite> rewrites(const Mon& a) const
    {
        std::vector<Rewrite> alts;
        detail::d8_square_rewrites(a, alts);
        const int t = this->t();
        if (a.j >= t + delta())
            alts.emplace_back();

        auto tail = [&](int top, int s, Rewrite& rhs) {
            for (int k = 1; top - s - 2 * k >= 0; ++k)
                if (binom_mod2(top - s - k, k))
                    rhs.push_back({Mon{a.i - 2 * k, a.eb, a.ec, a.j + k}, 1});
        };

        // a2^(t-s+1) d4^s
        for (int s = std::max(0, t + 1 - a.i); s <= std::min(a.j, t); ++s) {
            Rewrite rhs;
            tail(t, s, rhs); // the k with 2k = t-s+1 has an even coefficient
            alts.push_back(std::move(rhs));
        }
        // a2^(t-s) b2 d4^s
        if (a.eb >= 1)
            for (int s = std::max(0, t - a.i); s <= std::min(a.j, t); ++s) {
                Rewrite rhs;
                tail(t, s, rhs);
                if ((t + s + 1) % 2 == 0)
                    rhs.push_back({Mon{a.i - (t - s), a.eb - 1, a.ec, a.j - s + (t + s + 1) / 2}, 2});
                alts.push_back(std::move(rhs));
            }
        // a2^(T-s) c3 d4^s with T = t - 1 + delta
        const int T = t - 1 + delta();
        if (a.ec >= 1)
            for (int s = std::max(0, T - a.i); s <= std::min(a.j, T); ++s) {
                Rewrite rhs;
                tail(T, s, rhs);
                alts.push_back(std::move(rhs));
            }
        return alts;
    }
    std::tuple<int, int, int> order_key(const Mon& a) const { return detail::abcd_order_key(a); }

    /// e * (generator), before reduction. Only odd m has nonzero products.
    RawTerms<Mon> free_times_generator(int gen, ReductionContext* ctx) const
    {
        const int t = this->t(), l = t / 2, kappa = t % 2;
        switch (gen) {
        case 0:
        case 1:
            if (kappa)
                return {{Mon{0, 1, 1, l}, 1}};
            return {};
        case 2:
            if (kappa)
                return {{Mon{0, 1, 0, l + 1}, 1}};
            if (m == 5) {
                if (ctx)
                    ctx->consulted_eta = true;
                return {{Mon{0, 0, 0, l + 1}, eta_m5}};
            }
            return {{Mon{0, 0, 0, l + 1}, 2}};
        default: {
            RawTerms<Mon> out;
            for (int i = 1; i <= l; ++i)
                if (binom_mod2(t - i, i - 1))
                    out.push_back({Mon{t - 2 * i, 1, 1, i}, 1});
            return out;
        }
        }
    }

    RawTerms<Mon> free_times(const Mon& a, ReductionContext* ctx) const
    {
        if (!delta())
            return {};
        std::vector<int> present;
        if (a.i > 0)
            present.push_back(0);
        if (a.eb > 0)
            present.push_back(1);
        if (a.ec > 0)
            present.push_back(2);
        if (a.j > 0)
            present.push_back(3);
        if (present.empty())
            return {};
        const int gen = detail::pick_generator(present, ctx);
        Mon rest = a;
        (gen == 0 ? rest.i : gen == 1 ? rest.eb : gen == 2 ? rest.ec : rest.j) -= 1;
        RawTerms<Mon> out;
        for (const auto& [mon, k] : free_times_generator(gen, ctx))
            out.push_back({multiply(mon, rest), k});
        return out;
    }

    std::string name(const Mon& a) const { return detail::abcd_name(a); }
    static std::vector<std::pair<std::string, Mon>> generators() { return detail::abcd_generators(); }
    friend bool operator==(const UnorderedConfInt&, const UnorderedConfInt&) = default;
};

using IntClassF = IntClass<OrderedConfInt>;
using IntClassB = IntClass<UnorderedConfInt>;
using AmbientClass = IntClass<ProjSquareInt>;

inline IntClassF mul_int_F(const IntClassF& a, const IntClassF& b) { return a * b; }
inline IntClassB mul_int_B(const IntClassB& a, const IntClassB& b) { return a * b; }

// ---------------------------------------------------------------------------
// Torsion bases

/// Torsion basis of H^n(F(P^m,2)), sorted.
inline std::vector<MonXYZ> torsion_basis_F(int m, int n)
{
    const int t = m / 2, delta = m % 2;
    std::vector<MonXYZ> out;
    if (n <= 0)
        return out;
    if (n % 2 == 0) {
        for (int i = 0; i <= t; ++i) {
            const int j = n / 2 - i;
            if (j < 0 || j > t || (i == 0 && j == 0) || (delta == 0 && i == t && j == t))
                continue;
            out.push_back({i, j, 0});
        }
    } else if (n >= 3) {
        for (int i = 0; i <= t - 1 + delta; ++i) {
            const int j = (n - 3) / 2 - i;
            if (j >= 0 && j <= t - 2 + delta)
                out.push_back({i, j, 1});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Minimal torsion generators of H^n(B(P^m,2)), sorted.
inline std::vector<MonABCD> torsion_basis_B(int m, int n)
{
    const int t = m / 2, delta = m % 2;
    std::vector<MonABCD> out;
    for (const auto& mon : d8_torsion_basis(n)) {
        if (mon.j > t + delta - 1)
            continue;
        const bool ok = mon.ec == 0 ? (1 <= mon.i + mon.j + mon.eb && mon.i + mon.j + mon.eb <= t)
                                    : (mon.i + mon.j + 1 < t + delta);
        if (ok)
            out.push_back(mon);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Mod-2 reduction

namespace detail {

inline std::vector<MonXY> rho_xyz_raw(const MonXYZ& a)
{
    // x2^i y2^j z3^ez -> x1^(2i) y1^(2j) (x1^2 y1 + x1 y1^2)^ez
    std::set<MonXY> acc{MonXY{2 * a.i, 2 * a.j}};
    for (int k = 0; k < a.ez; ++k) {
        std::set<MonXY> next;
        for (const auto& t : acc) {
            toggle(next, MonXY{t.i + 2, t.j + 1});
            toggle(next, MonXY{t.i + 1, t.j + 2});
        }
        acc = std::move(next);
    }
    return {acc.begin(), acc.end()};
}

} // namespace detail

inline Mod2Class<ProjSquareMod2> rho_ambient(const AmbientClass& c)
{
    std::vector<MonXY> raw;
    if (c.unit_coeff() % 2 != 0)
        raw.push_back(MonXY{});
    for (const auto& [mon, coeff] : c.torsion())
        for (const auto& t : detail::rho_xyz_raw(mon))
            raw.push_back(t);
    return Mod2Class<ProjSquareMod2>(ProjSquareMod2{}, raw);
}

/// Mod-2 reduction of the free generator of H*(F(P^m,2)).
inline std::vector<MonXY> rho_w_raw(int m)
{
    if (m % 2 == 1)
        return {MonXY{m, 0}};
    return {MonXY{m, m - 1}};
}

/// Mod-2 reduction of the free generator of H*(B(P^m,2)).
inline std::vector<MonUVW> rho_e_raw(int m)
{
    if (m % 2 == 0)
        return {MonUVW{1, 0, m - 1}};
    const int t = m / 2;
    std::vector<MonUVW> raw;
    for (int i = 0; 2 * t - 4 * i >= 0; ++i)
        if (binom_mod2(t - i, i))
            raw.push_back({1, 2 * t - 4 * i, 2 * i});
    if (t % 2 == 1)
        raw.push_back({1, 0, t});
    return raw;
}

inline Mod2Class<OrderedConfMod2> rho_F(const IntClassF& c)
{
    const int m = c.ring().m;
    std::vector<MonXY> raw;
    if (c.unit_coeff() % 2 != 0)
        raw.push_back(MonXY{});
    if (c.free_coeff() % 2 != 0)
        for (const auto& t : rho_w_raw(m))
            raw.push_back(t);
    for (const auto& [mon, coeff] : c.torsion())
        for (const auto& t : detail::rho_xyz_raw(mon))
            raw.push_back(t);
    return Mod2Class<OrderedConfMod2>(OrderedConfMod2{m}, raw);
}

inline Mod2Class<UnorderedConfMod2> rho_B(const IntClassB& c)
{
    const int m = c.ring().m;
    auto raw = rho_torsion_raw(c);
    if (c.unit_coeff() % 2 != 0)
        raw.push_back(MonUVW{});
    if (c.free_coeff() % 2 != 0)
        for (const auto& t : rho_e_raw(m))
            raw.push_back(t);
    return Mod2Class<UnorderedConfMod2>(UnorderedConfMod2{m}, raw);
}

// ---------------------------------------------------------------------------
// Distinguished elements

/// sigma_{2r} = sum_{i+2j=r} C(i+j, j) a2^i d4^j
template <class Ring>
IntClass<Ring> sigma(const Ring& ring, int r)
{
    RawTerms<MonABCD> raw;
    std::int64_t unit = 0;
    for (int j = 0; 2 * j <= r; ++j) {
        const int i = r - 2 * j;
        const auto c = binom_mod4(i + j, j).value;
        if (i == 0 && j == 0)
            unit += c;
        else
            raw.push_back({MonABCD{i, 0, 0, j}, c});
    }
    return IntClass<Ring>(ring, unit, 0, raw);
}

/// iota_{2r} = 2 d4^(r/2) for even r, 0 for odd r
template <class Ring>
IntClass<Ring> iota(const Ring& ring, int r)
{
    if (r % 2 != 0)
        return IntClass<Ring>(ring);
    if (r == 0)
        return IntClass<Ring>(ring, 2, 0, {});
    return IntClass<Ring>(ring, 0, 0, {{MonABCD{0, 0, 0, r / 2}, 2}});
}

/// R_{r,s} = sum_{i>=0} C(r-s-i, i) a2^(r-s-2i) d4^(s+i)
template <class Ring>
IntClass<Ring> R_element(const Ring& ring, int r, int s)
{
    RawTerms<MonABCD> raw;
    std::int64_t unit = 0;
    for (int i = 0; r - s - 2 * i >= 0; ++i) {
        const auto c = binom_mod4(r - s - i, i).value;
        const MonABCD mon{r - s - 2 * i, 0, 0, s + i};
        if (mon == MonABCD{})
            unit += c;
        else
            raw.push_back({mon, c});
    }
    return IntClass<Ring>(ring, unit, 0, raw);
}

inline IntClassB sigma(int r, int m) { return sigma(UnorderedConfInt{m}, r); }
inline IntClassB iota(int r, int m) { return iota(UnorderedConfInt{m}, r); }
inline IntClassB R_element(int r, int s, int m) { return R_element(UnorderedConfInt{m}, r, s); }

// ---------------------------------------------------------------------------
// Maps from the ambient rings

inline IntClassF ambient_map_F(const AmbientClass& c, int m)
{
    RawTerms<MonXYZ> raw(c.torsion().begin(), c.torsion().end());
    return IntClassF(OrderedConfInt{m}, c.unit_coeff(), 0, raw);
}

inline IntClassB ambient_map_B(const D8IntClass& c, int m, int eta_m5 = 2)
{
    RawTerms<MonABCD> raw(c.torsion().begin(), c.torsion().end());
    return IntClassB(UnorderedConfInt{m, eta_m5}, c.unit_coeff(), 0, raw);
}

/// Torsion basis of H^n(P^oo x P^oo), sorted.
inline std::vector<MonXYZ> ambient_torsion_basis(int n)
{
    std::vector<MonXYZ> out;
    if (n <= 0)
        return out;
    for (int ez = 0; ez <= 1; ++ez) {
        const int rest = n - 3 * ez;
        if (rest < 0 || rest % 2 != 0)
            continue;
        for (int i = 0; i <= rest / 2; ++i)
            out.push_back({i, rest / 2 - i, ez});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

template <class Mon>
int index_of(const std::vector<Mon>& basis, const Mon& mon)
{
    auto pos = std::lower_bound(basis.begin(), basis.end(), mon);
    if (pos == basis.end() || *pos != mon)
        throw std::logic_error("normal form left the torsion basis");
    return static_cast<int>(pos - basis.begin());
}

} // namespace detail

/// log2 of the order of the kernel of the ambient map on torsion in degree n.
/// For every group here this order is 2^(kernel rank).
inline int ambient_kernel_log2_F(int m, int n)
{
    const auto src = ambient_torsion_basis(n);
    const auto dst = torsion_basis_F(m, n);
    F2Matrix mat(static_cast<int>(src.size()), static_cast<int>(dst.size()));
    for (std::size_t r = 0; r < src.size(); ++r) {
        const auto img = ambient_map_F(AmbientClass::monomial(ProjSquareInt{}, src[r]), m);
        for (const auto& [mon, c] : img.torsion())
            mat.set(static_cast<int>(r), detail::index_of(dst, mon), true);
    }
    return static_cast<int>(src.size()) - f2_rank(mat);
}

inline int ambient_kernel_log2_B(int m, int n)
{
    const auto src = d8_torsion_basis(n);
    const auto dst = torsion_basis_B(m, n);
    const int dim = static_cast<int>(dst.size());
    std::vector<std::vector<int>> gens;
    int z2_slots = 0;
    for (int k = 0; k < dim; ++k)
        if (!dst[k].is_pure_d()) {
            std::vector<int> g(dim, 0);
            g[k] = 2;
            gens.push_back(std::move(g));
            ++z2_slots;
        }
    int src_log2 = 0;
    for (const auto& mon : src) {
        src_log2 += mon.is_pure_d() ? 2 : 1;
        const auto img = ambient_map_B(D8IntClass::monomial(DihedralInt{}, mon), m);
        std::vector<int> g(dim, 0);
        for (const auto& [t, c] : img.torsion())
            g[detail::index_of(dst, t)] = c;
        gens.push_back(std::move(g));
    }
    const int image_log2 = z4_span_log2_order(gens, dim) - z2_slots;
    return src_log2 - image_log2;
}

/// Kernel sizes (as ranks) of the ambient maps in degrees 1..m.
inline std::vector<int> kernel_rank_leq_m(char space, int m)
{
    std::vector<int> out;
    for (int n = 1; n <= m; ++n)
        out.push_back(space == 'F' ? ambient_kernel_log2_F(m, n) : ambient_kernel_log2_B(m, n));
    return out;
}

/// log2 of the order of the kernel of rho restricted to torsion in degree n.
inline int rho_torsion_kernel_log2_F(int m, int n)
{
    const auto src = torsion_basis_F(m, n);
    const auto dst = OrderedConfMod2{m}.basis(n);
    F2Matrix mat(static_cast<int>(src.size()), static_cast<int>(dst.size()));
    for (std::size_t r = 0; r < src.size(); ++r) {
        const auto img = rho_F(IntClassF::monomial(OrderedConfInt{m}, src[r]));
        for (const auto& t : img.terms())
            mat.set(static_cast<int>(r), detail::index_of(dst, t), true);
    }
    return static_cast<int>(src.size()) - f2_rank(mat);
}

inline int rho_torsion_kernel_log2_B(int m, int n)
{
    const auto src = torsion_basis_B(m, n);
    const auto dst = UnorderedConfMod2{m}.basis(n);
    F2Matrix mat(static_cast<int>(src.size()), static_cast<int>(dst.size()));
    int src_log2 = 0;
    for (std::size_t r = 0; r < src.size(); ++r) {
        src_log2 += src[r].is_pure_d() ? 2 : 1;
        const auto img = rho_B(IntClassB::monomial(UnorderedConfInt{m}, src[r]));
        for (const auto& t : img.terms())
            mat.set(static_cast<int>(r), detail::index_of(dst, t), true);
    }
    return src_log2 - f2_rank(mat);
}

// ---------------------------------------------------------------------------

/// For m = 4l + 1, checks the symmetric relations satisfied by
/// w' = w + z3 (x2^(2l-1) + x2^(2l-2) y2 + ... + x2^l y2^(l-1)).
inline bool wprime_check(int m)
{
    if (m % 4 != 1 || m < 5)
        throw std::invalid_argument("wprime_check: needs m = 1 mod 4, m >= 5");
    const int l = (m - 1) / 4;
    const OrderedConfInt ring{m};
    RawTerms<MonXYZ> corr, rx, ry;
    for (int k = 0; k <= l - 1; ++k) {
        corr.push_back({MonXYZ{2 * l - 1 - k, k, 1}, 1});
        rx.push_back({MonXYZ{2 * l - k, k, 1}, 1});
        ry.push_back({MonXYZ{k, 2 * l - k, 1}, 1});
    }
    const IntClassF wp = IntClassF::free_generator(ring) + IntClassF(ring, 0, 0, corr);
    const auto x = IntClassF::monomial(ring, {1, 0, 0});
    const auto y = IntClassF::monomial(ring, {0, 1, 0});
    const auto z = IntClassF::monomial(ring, {0, 0, 1});
    return wp * x == IntClassF(ring, 0, 0, rx) && wp * y == IntClassF(ring, 0, 0, ry) &&
           wp * z == IntClassF::monomial(ring, {l + 1, l + 1, 0}) && (wp * wp).is_zero();
}

} // namespace cfgcoh
