#pragma once

// Integral cohomology groups of F(P^m,2) and B(P^m,2) recovered from the mod-2
// rings: Z/2 summands from the rank of Sq^1, Z/4 summands from the second
// Bockstein [u1 w2^(2l-1)] -> [w2^(2l)], free rank from the third page.
// The closed-form tables are kept alongside as an independent reference.

#include <stdexcept>
#include <string>
#include <vector>

#include "exactalg.hpp"
#include "mod2rings.hpp"

namespace cfgcoh {

struct GroupRow {
    int free = 0;
    int z2 = 0;
    int z4 = 0;
    friend bool operator==(const GroupRow&, const GroupRow&) = default;
};

struct GroupTable {
    char space = 'F';
    int m = 1;
    std::vector<GroupRow> rows; // indexed by degree 0 .. 2m-1
    friend bool operator==(const GroupTable&, const GroupTable&) = default;
};

struct BssRow {
    int dim_mod2 = 0;
    int dim_sq1_image = 0; // rank of Sq^1 into this degree
    int dim_e2 = 0;
    int dim_beta2_image = 0; // rank of beta_2 into this degree
    int dim_e3 = 0;
};

struct BssReport {
    char space = 'F';
    int m = 1;
    std::vector<BssRow> rows;
};

/// Thrown when the spectral sequence fails to collapse where it must.
struct CollapseError : std::logic_error {
    using std::logic_error::logic_error;
};

namespace detail {

template <class Ring>
std::vector<int> sq1_ranks(const Ring& ring, int top)
{
    // ranks[n] = rank of Sq^1 : H^n -> H^(n+1), n in [-1, top]; stored shifted by one
    std::vector<int> ranks(top + 2, 0);
    for (int n = 0; n <= top; ++n)
        ranks[n + 1] = f2_rank(sq1_matrix(ring, n));
    return ranks;
}

template <class Ring>
F2Matrix boundaries_into(const Ring& ring, int d)
{
    if (d <= 0)
        return F2Matrix(0, static_cast<int>(basis_of_degree(ring, d).size()));
    return sq1_matrix(ring, d - 1);
}

inline void check_concentration(const BssReport& rep)
{
    const int m = rep.m;
    const int free_degree = m % 2 == 0 ? 2 * m - 1 : m;
    for (int n = 0; n < static_cast<int>(rep.rows.size()); ++n) {
        const int expected = (n == 0 || n == free_degree) ? 1 : 0;
        if (rep.rows[n].dim_e3 != expected)
            throw CollapseError("third page not concentrated as expected: space " + std::string(1, rep.space) +
                                ", m=" + std::to_string(m) + ", degree " + std::to_string(n));
    }
}

} // namespace detail

/// True when the homogeneous class c of degree d is a Sq^1-cycle that is not a boundary.
template <class Ring>
bool is_nonzero_in_e2(const Mod2Class<Ring>& c, int d)
{
    if (c.is_zero() || !sq1(c).is_zero())
        return false;
    F2Matrix bd = detail::boundaries_into(c.ring(), d);
    const int before = f2_rank(bd);
    bd.append_row(coordinates(c, d));
    return f2_rank(bd) > before;
}

inline BssReport bss_report_F(int m)
{
    const OrderedConfMod2 ring{m};
    const int top = 2 * m - 1;
    const auto ranks = detail::sq1_ranks(ring, top);
    BssReport rep{'F', m, {}};
    for (int n = 0; n <= top; ++n) {
        BssRow row;
        row.dim_mod2 = static_cast<int>(basis_of_degree(ring, n).size());
        row.dim_sq1_image = ranks[n];
        row.dim_e2 = row.dim_mod2 - ranks[n] - ranks[n + 1];
        row.dim_e3 = row.dim_e2; // no Z/4 summands: no second differentials
        rep.rows.push_back(row);
    }
    detail::check_concentration(rep);
    return rep;
}

inline BssReport bss_report_B(int m)
{
    const UnorderedConfMod2 ring{m};
    const int top = 2 * m - 1;
    const auto ranks = detail::sq1_ranks(ring, top);
    BssReport rep{'B', m, {}};
    for (int n = 0; n <= top; ++n) {
        BssRow row;
        row.dim_mod2 = static_cast<int>(basis_of_degree(ring, n).size());
        row.dim_sq1_image = ranks[n];
        row.dim_e2 = row.dim_mod2 - ranks[n] - ranks[n + 1];
        rep.rows.push_back(row);
    }
    // beta_2 [u1 w2^(2l-1)] = [w2^(2l)], degree 4l-1 -> 4l
    for (int l = 1; 4 * l <= top; ++l) {
        const auto src = Mod2Class<UnorderedConfMod2>::monomial(ring, MonUVW{1, 0, 2 * l - 1});
        const auto dst = Mod2Class<UnorderedConfMod2>::monomial(ring, MonUVW{0, 0, 2 * l});
        if (is_nonzero_in_e2(src, 4 * l - 1) && is_nonzero_in_e2(dst, 4 * l))
            rep.rows[4 * l].dim_beta2_image = 1;
    }
    for (int n = 0; n <= top; ++n) {
        const int out = n + 1 <= top ? rep.rows[n + 1].dim_beta2_image : 0;
        rep.rows[n].dim_e3 = rep.rows[n].dim_e2 - rep.rows[n].dim_beta2_image - out;
    }
    detail::check_concentration(rep);
    return rep;
}

inline GroupTable groups_from_report(const BssReport& rep)
{
    GroupTable g{rep.space, rep.m, {}};
    for (const auto& row : rep.rows)
        g.rows.push_back({row.dim_e3, row.dim_sq1_image, row.dim_beta2_image});
    return g;
}

inline GroupTable derive_groups_F(int m) { return groups_from_report(bss_report_F(m)); }
inline GroupTable derive_groups_B(int m) { return groups_from_report(bss_report_B(m)); }

/// Transcription of the case table for H^i(F(P^m,2)).
inline GroupTable closed_form_F(int m)
{
    const int t = m / 2;
    GroupTable g{'F', m, std::vector<GroupRow>(2 * m, GroupRow{})};
    for (int i = 0; i <= 2 * m - 1; ++i) {
        GroupRow& r = g.rows[i];
        const bool even = i % 2 == 0;
        if (i == 0) {
            r.free = 1;
        } else if (m % 2 == 0) {
            if (i == 4 * t - 1)
                r.free = 1;
            else if (i <= 2 * t)
                r.z2 = even ? i / 2 + 1 : (i - 1) / 2;
            else
                r.z2 = even ? 2 * t + 1 - i / 2 : 2 * t - (i + 1) / 2;
        } else {
            if (i <= 2 * t)
                r.z2 = even ? i / 2 + 1 : (i - 1) / 2;
            else if (i == 2 * t + 1) {
                r.free = 1;
                r.z2 = t;
            } else
                r.z2 = even ? 2 * t + 1 - i / 2 : 2 * t + 1 - (i - 1) / 2;
        }
    }
    return g;
}

/// Transcription of the case table for H^(4a+b)(B(P^m,2)); {k} means <k> + Z/4.
inline GroupTable closed_form_B(int m)
{
    const int t = m / 2;
    GroupTable g{'B', m, std::vector<GroupRow>(2 * m, GroupRow{})};
    for (int n = 0; n <= 2 * m - 1; ++n) {
        const int a = n / 4, b = n % 4;
        GroupRow& r = g.rows[n];
        if (n == 0) {
            r.free = 1;
            continue;
        }
        if (n <= 2 * t) {
            switch (b) {
            case 0: r = {0, 2 * a, 1}; break;
            case 1: r.z2 = 2 * a; break;
            case 2: r.z2 = 2 * a + 2; break;
            default: r.z2 = 2 * a + 1; break;
            }
            continue;
        }
        if (m % 2 == 0) {
            if (n == 4 * t - 1) {
                r.free = 1;
                continue;
            }
            switch (b) {
            case 0: r = {0, 2 * t - 2 * a, 1}; break;
            case 1: r.z2 = 2 * t - 2 * a - 1; break;
            case 2: r.z2 = 2 * t - 2 * a; break;
            default: r.z2 = 2 * t - 2 * a - 2; break;
            }
        } else {
            if (n == 2 * t + 1) {
                r = {1, t, 0};
                continue;
            }
            switch (b) {
            case 0: r = {0, 2 * t - 2 * a, 1}; break;
            case 1: r.z2 = 2 * t - 2 * a + 1; break;
            default: r.z2 = 2 * t - 2 * a; break;
            }
        }
    }
    return g;
}

/// Representative of the extra second-page class for odd m:
/// u1 v1^(m-1) + sum_{i>=1} C(m-2i, 2i) u1 v1^(m-4i-1) w2^(2i).
inline Mod2Class<UnorderedConfMod2> odd_e2_representative(int m)
{
    std::vector<MonUVW> raw{{1, m - 1, 0}};
    for (int i = 1; m - 4 * i - 1 >= 0; ++i)
        if (binom_mod2(m - 2 * i, 2 * i))
            raw.push_back({1, m - 4 * i - 1, 2 * i});
    return Mod2Class<UnorderedConfMod2>(UnorderedConfMod2{m}, raw);
}

} // namespace cfgcoh
