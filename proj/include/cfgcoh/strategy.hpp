#pragma once

// Verification of torsion relations in H*(B(P^m,2)) through BD8: a torsion class
// zeta vanishes once we exhibit xi in H*(BD8) and eta in H*(BD8; F2) with
// rho(xi) = eta modulo the kernel of the restriction to B(P^m,2), and with
// the connecting map sending eta to zeta.

#include <stdexcept>
#include <string>
#include <vector>

#include "dihedral.hpp"
#include "intrings.hpp"
#include "mod2rings.hpp"

namespace cfgcoh {

struct StrategyReport {
    int m = 0;
    int case_id = 0;
    D8Mod2Class eta{DihedralMod2{}};
    D8IntClass xi{DihedralInt{}};
    D8IntClass zeta_d8{DihedralInt{}};
    bool reduction_matches = false; // rho(xi) + eta restricts to 0 in B(P^m,2)
    bool kernel_term_matches = false; // rho(xi) + eta is exactly the expected kernel element over BD8
    bool boundary_matches_d8 = false; // partial(eta) = zeta over BD8
    bool boundary_matches = false; // partial(eta) = zeta in B(P^m,2)
    bool ok() const { return reduction_matches && kernel_term_matches && boundary_matches_d8 && boundary_matches; }
};

/// Parameter ranges: cases 1-2 need m = 2t with t odd >= 3, case 3 needs m = 2t with
/// t even >= 4, case 4 is m = 3 and case 5 is m = 5.
inline bool strategy_case_in_range(int m, int case_id)
{
    const int t = m / 2, delta = m % 2;
    switch (case_id) {
    case 1:
    case 2: return delta == 0 && t % 2 == 1 && t >= 3;
    case 3: return delta == 0 && t % 2 == 0 && t >= 4;
    case 4: return m == 3;
    case 5: return m == 5;
    default: return false;
    }
}

namespace detail {

inline D8Mod2Class d8_mod2(const std::vector<MonUVW>& raw) { return D8Mod2Class(DihedralMod2{}, raw); }

// sum_{i>=0} C(n-i, i) v1^(n-2i) w2^i, times u1^eps v1^extra
inline D8Mod2Class first_sum(int n, int eps, int extra)
{
    std::vector<MonUVW> raw;
    for (int i = 0; n - 2 * i >= 0; ++i)
        if (binom_mod2(n - i, i))
            raw.push_back({eps, n - 2 * i + extra, i});
    return d8_mod2(raw);
}

// u1 R_{m+s} = sum_{i>=0} C(m-s-i, i) u1 v1^(m-s-2i) w2^(s+i)
inline D8Mod2Class u_times_R(int m, int s)
{
    std::vector<MonUVW> raw;
    for (int i = 0; m - s - 2 * i >= 0; ++i)
        if (binom_mod2(m - s - i, i))
            raw.push_back({1, m - s - 2 * i, s + i});
    return d8_mod2(raw);
}

} // namespace detail

inline StrategyReport strategy_report(int m, int case_id)
{
    if (!strategy_case_in_range(m, case_id))
        throw std::invalid_argument("strategy case " + std::to_string(case_id) + " is not defined for m=" +
                                    std::to_string(m));
    const int t = m / 2, l = t / 2;
    const DihedralInt d8;
    const auto a = D8IntClass::monomial(d8, {1, 0, 0, 0});
    const auto b = D8IntClass::monomial(d8, {0, 1, 0, 0});
    const auto d = D8IntClass::monomial(d8, {0, 0, 0, 1});

    StrategyReport rep;
    rep.m = m;
    rep.case_id = case_id;
    std::vector<MonUVW> eta;
    RawTerms<MonABCD> xi;
    D8Mod2Class kernel_term{DihedralMod2{}};

    switch (case_id) {
    case 1: // zeta = a2 sigma_2t
        for (int j = 0; j <= l; ++j) {
            if (binom_mod2(2 * t - 2 * j, 2 * j))
                eta.push_back({0, 2 * t + 1 - 4 * j, 2 * j});
            if (binom_mod2(2 * t - 1 - 2 * j, 2 * j + 1))
                xi.push_back({MonABCD{t - 1 - 2 * j, 0, 1, j}, 1});
        }
        rep.zeta_d8 = a * sigma(d8, t);
        kernel_term = detail::first_sum(m, 0, 1);
        break;
    case 2: // zeta = b2 sigma_2t + iota_{2t+2}
        eta.push_back({1, 0, t});
        for (int j = 0; j <= l; ++j)
            if (binom_mod2(2 * t - 2 * j, 2 * j))
                eta.push_back({1, 2 * t - 4 * j, 2 * j});
        for (int j = 0; j <= l - 1; ++j)
            if (binom_mod2(2 * t - 1 - 2 * j, 2 * j + 1))
                xi.push_back({MonABCD{t - 2 - 2 * j, 1, 1, j}, 1});
        rep.zeta_d8 = b * sigma(d8, t) + iota(d8, t + 1);
        kernel_term = detail::first_sum(m, 1, 0);
        break;
    case 3: // zeta = b2 d4 sigma_{2t-2} + iota_{2t+4}
        eta.push_back({1, 0, t + 1});
        for (int j = 0; j <= l - 1; ++j)
            if (binom_mod2(2 * t - 2 - 2 * j, 2 * j))
                eta.push_back({1, 2 * t - 2 - 4 * j, 2 + 2 * j});
        for (int j = 0; j <= l - 2; ++j)
            if (binom_mod2(2 * t - 3 - 2 * j, 2 * j + 1))
                xi.push_back({MonABCD{t - 3 - 2 * j, 1, 1, j + 1}, 1});
        rep.zeta_d8 = b * d * sigma(d8, t - 1) + iota(d8, t + 2);
        kernel_term = detail::u_times_R(m, 2);
        break;
    case 4: // m = 3, zeta = a2 sigma_2
        eta.push_back({0, 3, 0});
        rep.zeta_d8 = a * sigma(d8, t);
        kernel_term = detail::first_sum(m, 0, 0);
        break;
    default: // m = 5, zeta = b2 d4 sigma_2 + iota_8
        eta = {{1, 2, 2}, {1, 0, 3}};
        xi.push_back({MonABCD{1, 1, 1, 0}, 1});
        rep.zeta_d8 = b * d * sigma(d8, t - 1) + iota(d8, t + 2);
        kernel_term = detail::u_times_R(m, 1);
        break;
    }

    rep.eta = detail::d8_mod2(eta);
    rep.xi = D8IntClass(d8, 0, 0, xi);
    const auto sum = rho_d8(rep.xi) + rep.eta;
    rep.reduction_matches = nf_B_mod2(m, {sum.terms().begin(), sum.terms().end()}).is_zero();
    rep.kernel_term_matches = sum == kernel_term;
    const auto boundary = partial(rep.eta);
    rep.boundary_matches_d8 = boundary == rep.zeta_d8;
    rep.boundary_matches = ambient_map_B(boundary, m) == ambient_map_B(rep.zeta_d8, m);
    return rep;
}

inline bool verify_strategy(int m, int case_id) { return strategy_report(m, case_id).ok(); }

/// Every (m, case) pair with m <= max_m that the construction covers.
inline std::vector<std::pair<int, int>> strategy_cases(int max_m)
{
    std::vector<std::pair<int, int>> out;
    for (int m = 1; m <= max_m; ++m)
        for (int c = 1; c <= 5; ++c)
            if (strategy_case_in_range(m, c))
                out.push_back({m, c});
    return out;
}

/// On BD8 basis elements of degree <= max_degree: partial o rho = 0, rho(2x) = 0,
/// and rho o partial = Sq^1.
inline bool exactness_spot_check(int max_degree)
{
    for (int n = 1; n <= max_degree; ++n)
        for (const auto& mon : d8_torsion_basis(n)) {
            const auto x = D8IntClass::monomial(DihedralInt{}, mon);
            if (!partial(rho_d8(x)).is_zero() || !rho_d8(2 * x).is_zero())
                return false;
        }
    for (int n = 0; n < max_degree; ++n)
        for (const auto& mon : DihedralMod2{}.basis(n)) {
            const auto c = D8Mod2Class::monomial(DihedralMod2{}, mon);
            if (!(rho_d8(partial(c)) == sq1(c)))
                return false;
        }
    return true;
}

/// The mod-2 image of d4 e_m for odd m >= 5, three ways: rho(d4) rho(e_m), rho of
/// the engine's product d4 * e_m, and sum_{i=1}^{l} C(t-i, i-1) u1 v1^(2t-4i+2) w2^(2i+1).
struct D4EReduction {
    Mod2Class<UnorderedConfMod2> product_of_images{UnorderedConfMod2{}};
    Mod2Class<UnorderedConfMod2> image_of_product{UnorderedConfMod2{}};
    Mod2Class<UnorderedConfMod2> closed_form{UnorderedConfMod2{}};
    bool ok() const { return product_of_images == image_of_product && image_of_product == closed_form; }
};

inline D4EReduction d4_e_reduction(int m)
{
    if (m % 2 == 0 || m < 3)
        throw std::invalid_argument("d4_e_reduction: needs odd m >= 3");
    const int t = m / 2, l = t / 2;
    const UnorderedConfInt ring{m};
    const UnorderedConfMod2 mod2{m};
    const auto d = IntClassB::monomial(ring, {0, 0, 0, 1});
    const auto e = IntClassB::free_generator(ring);
    D4EReduction out;
    out.product_of_images = rho_B(d) * rho_B(e);
    out.image_of_product = rho_B(d * e);
    std::vector<MonUVW> raw;
    for (int i = 1; i <= l; ++i)
        if (binom_mod2(t - i, i - 1))
            raw.push_back({1, 2 * t - 4 * i + 2, 2 * i + 1});
    out.closed_form = Mod2Class<UnorderedConfMod2>(mod2, raw);
    return out;
}

} // namespace cfgcoh
