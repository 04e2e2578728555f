#pragma once

// Cup-length of b2 in H*(B(P^m,2)). Since b2 is pulled back from the generator
// of H^2(P^oo) under the map classifying the double cover F -> B, b2^k != 0
// forces TC^S(P^m) >= 2k + 1.

#include <optional>
#include <string>
#include <vector>

#include "intrings.hpp"

namespace cfgcoh {

struct TcsCertificate {
    int m = 1;
    int cup_length = 0;
    IntClassB witness{UnorderedConfInt{}};
    int lower_bound = 1;
    bool eta_dependent = false;
};

inline TcsCertificate cup_length_b2(int m, int eta_m5 = 2)
{
    const UnorderedConfInt ring{m, eta_m5};
    const auto b = IntClassB::monomial(ring, {0, 1, 0, 0});
    ReductionContext ctx;
    TcsCertificate cert;
    cert.m = m;
    cert.witness = IntClassB::one(ring);
    for (;;) {
        auto next = cert.witness.times(b, &ctx);
        if (next.is_zero())
            break;
        cert.witness = std::move(next);
        ++cert.cup_length;
    }
    cert.lower_bound = 2 * cert.cup_length + 1;
    cert.eta_dependent = ctx.consulted_eta;
    return cert;
}

/// Exact values (or ranges) of TC^S(P^m) established in the literature, for the m covered here.
inline std::optional<std::string> known_tcs_value(int m)
{
    switch (m) {
    case 3: return "5";
    case 5:
    case 6: return "9";
    case 7: return "{9,10}";
    default: return std::nullopt;
    }
}

/// Known value of TC^S(P^m) - TC(P^m) on the families m = 2^i, 2^i + 1, 2^i + 2.
inline std::optional<int> known_tc_difference(int m)
{
    if (m < 1)
        return std::nullopt;
    if ((m & (m - 1)) == 0)
        return 1; // 2^i, i >= 0
    const int p = m - 1;
    if (p >= 2 && (p & (p - 1)) == 0)
        return 2; // 2^i + 1, i >= 1
    const int q = m - 2;
    if (q == 4)
        return 2; // the exception at 2^2 + 2
    if (q >= 8 && (q & (q - 1)) == 0)
        return 1; // 2^i + 2, i >= 3
    return std::nullopt;
}

struct TcsGapRow {
    int m = 1;
    int lower_bound = 1;
    std::optional<std::string> known;
    std::optional<int> tc_difference; // TC^S - TC where recorded
};

inline std::vector<TcsGapRow> tcs_gap_table(const std::vector<int>& ms)
{
    std::vector<TcsGapRow> out;
    for (int m : ms)
        out.push_back({m, cup_length_b2(m).lower_bound, known_tcs_value(m), known_tc_difference(m)});
    return out;
}

} // namespace cfgcoh
