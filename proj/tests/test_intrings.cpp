#include <gtest/gtest.h>

#include <random>
#include <vector>

#include <cfgcoh/bockstein.hpp>
#include <cfgcoh/intrings.hpp>

using namespace cfgcoh;

namespace {

IntClassF xF(int m) { return IntClassF::monomial(OrderedConfInt{m}, {1, 0, 0}); }
IntClassF yF(int m) { return IntClassF::monomial(OrderedConfInt{m}, {0, 1, 0}); }
IntClassF zF(int m) { return IntClassF::monomial(OrderedConfInt{m}, {0, 0, 1}); }
IntClassF wF(int m) { return IntClassF::free_generator(OrderedConfInt{m}); }

IntClassB gen(int m, int k)
{
    MonABCD mon;
    (k == 0 ? mon.i : k == 1 ? mon.eb : k == 2 ? mon.ec : mon.j) = 1;
    return IntClassB::monomial(UnorderedConfInt{m}, mon);
}
IntClassB eB(int m) { return IntClassB::free_generator(UnorderedConfInt{m}); }

template <class Mon>
Mon& pick(std::mt19937_64& rng, std::vector<Mon>& v)
{
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

// a random torsion class of H^n(B(P^m,2)) with coefficients drawn per generator
IntClassB random_torsion_B(int m, int n, std::mt19937_64& rng)
{
    RawTerms<MonABCD> raw;
    for (const auto& mon : torsion_basis_B(m, n))
        raw.push_back({mon, static_cast<std::int64_t>(rng() % 4)});
    return IntClassB(UnorderedConfInt{m}, 0, 0, raw);
}

IntClassF random_torsion_F(int m, int n, std::mt19937_64& rng)
{
    RawTerms<MonXYZ> raw;
    for (const auto& mon : torsion_basis_F(m, n))
        raw.push_back({mon, static_cast<std::int64_t>(rng() % 2)});
    return IntClassF(OrderedConfInt{m}, 0, 0, raw);
}

} // namespace

TEST(IntProductsF, Examples)
{
    EXPECT_EQ(wF(5) * yF(5), IntClassF::monomial(OrderedConfInt{5}, {2, 0, 1}));
    EXPECT_TRUE((wF(4) * zF(4)).is_zero());
    EXPECT_EQ(zF(5) * zF(5), IntClassF(OrderedConfInt{5}, 0, 0, {{{2, 1, 0}, 1}, {{1, 2, 0}, 1}}));
    EXPECT_TRUE((wF(5) * wF(5)).is_zero());
    EXPECT_TRUE((wF(5) * xF(5)).is_zero());
    EXPECT_TRUE((wF(5) * zF(5)).is_zero());
    EXPECT_TRUE(xF(4).pow(3).is_zero());
    EXPECT_TRUE((xF(4).pow(2) * yF(4).pow(2)).is_zero());
}

TEST(IntProductsB, Examples)
{
    EXPECT_EQ(gen(3, 1) * gen(3, 1), IntClassB::monomial(UnorderedConfInt{3}, {0, 0, 0, 1}, 2));
    EXPECT_TRUE(gen(3, 1).pow(3).is_zero());
    EXPECT_EQ(gen(5, 1).pow(4), IntClassB::monomial(UnorderedConfInt{5}, {0, 0, 0, 2}, 2));
    EXPECT_TRUE(gen(5, 1).pow(5).is_zero());
    EXPECT_EQ(gen(5, 1) * gen(5, 1), IntClassB::monomial(UnorderedConfInt{5}, {1, 1, 0, 0}));
    EXPECT_EQ(gen(5, 2) * gen(5, 2), IntClassB::monomial(UnorderedConfInt{5}, {1, 0, 0, 1}));
    EXPECT_TRUE((eB(5) * eB(5)).is_zero());
    for (int m : {2, 4, 6, 8})
        for (int k = 0; k < 4; ++k)
            EXPECT_TRUE((eB(m) * gen(m, k)).is_zero());
}

TEST(IntProductsB, ZFourSlotsOnlyOnPureD)
{
    const auto d = gen(7, 3);
    EXPECT_EQ(*d.additive_order(), 4);
    EXPECT_EQ(*(2 * d).additive_order(), 2);
    EXPECT_TRUE((4 * d).is_zero());
    EXPECT_TRUE((2 * gen(7, 0)).is_zero());
    EXPECT_EQ(-d, 3 * d);
    EXPECT_FALSE(eB(7).additive_order().has_value());
}

TEST(IntProductsB, ThreadsEtaFlag)
{
    const UnorderedConfInt r0{5, 0};
    const auto c = IntClassB::monomial(r0, {0, 0, 1, 0});
    ReductionContext ctx;
    EXPECT_TRUE(c.times(IntClassB::free_generator(r0), &ctx).is_zero());
    EXPECT_TRUE(ctx.consulted_eta);
    ReductionContext other;
    gen(7, 2).times(eB(7), &other);
    EXPECT_FALSE(other.consulted_eta);
}

TEST(Reduction, Examples)
{
    for (int m = 3; m <= 8; ++m)
        EXPECT_EQ(rho_F(zF(m)).terms(), (std::set<MonXY>{{2, 1}, {1, 2}}));
    EXPECT_TRUE(rho_B(2 * gen(6, 3)).is_zero());
    EXPECT_EQ(rho_B(eB(3)).terms(), (std::set<MonUVW>{{1, 2, 0}, {1, 0, 1}}));
    EXPECT_EQ(rho_F(wF(5)).terms(), (std::set<MonXY>{{5, 0}}));
    EXPECT_EQ(rho_B(eB(4)).terms(), (std::set<MonUVW>{{1, 0, 3}}));
    EXPECT_EQ(rho_B(gen(4, 1)).terms(), (std::set<MonUVW>{{1, 1, 0}}));
}

TEST(Reduction, FreeClassesReduceToNonzero)
{
    for (int m = 1; m <= 20; ++m) {
        EXPECT_FALSE(rho_F(wF(m)).is_zero()) << m;
        EXPECT_FALSE(rho_B(eB(m)).is_zero()) << m;
        EXPECT_TRUE(sq1(rho_B(eB(m))).is_zero()) << m;
        EXPECT_TRUE(sq1(rho_F(wF(m))).is_zero()) << m;
    }
}

TEST(Reduction, IsRingHomomorphism)
{
    std::mt19937_64 rng(31);
    for (int m = 3; m <= 12; ++m) {
        const int top = 2 * m - 1;
        for (int k = 0; k < 300; ++k) {
            const int n1 = 1 + static_cast<int>(rng() % top), n2 = 1 + static_cast<int>(rng() % top);
            const auto a = random_torsion_B(m, n1, rng), b = random_torsion_B(m, n2, rng);
            ASSERT_EQ(rho_B(a * b), rho_B(a) * rho_B(b)) << a.to_string() << " * " << b.to_string();
            const auto p = random_torsion_F(m, n1, rng), q = random_torsion_F(m, n2, rng);
            ASSERT_EQ(rho_F(p * q), rho_F(p) * rho_F(q));
        }
        for (const auto& g : {gen(m, 0), gen(m, 1), gen(m, 2), gen(m, 3)})
            ASSERT_EQ(rho_B(g * eB(m)), rho_B(g) * rho_B(eB(m))) << "m=" << m;
        for (const auto& g : {xF(m), yF(m), zF(m)})
            ASSERT_EQ(rho_F(g * wF(m)), rho_F(g) * rho_F(wF(m))) << "m=" << m;
    }
}

TEST(Reduction, KernelOnTorsion)
{
    for (int m = 1; m <= 20; ++m)
        for (int n = 1; n <= 2 * m - 1; ++n) {
            EXPECT_EQ(rho_torsion_kernel_log2_F(m, n), 0) << "m=" << m << " n=" << n;
            bool has_d = false;
            for (const auto& mon : torsion_basis_B(m, n))
                has_d = has_d || mon.is_pure_d();
            EXPECT_EQ(has_d, n % 4 == 0 && n < 2 * m - 1) << "m=" << m << " n=" << n;
            EXPECT_EQ(rho_torsion_kernel_log2_B(m, n), has_d ? 1 : 0) << "m=" << m << " n=" << n;
        }
}

TEST(TorsionBasis, CountsMatchClosedForms)
{
    for (int m = 1; m <= 25; ++m) {
        const auto f = closed_form_F(m), b = closed_form_B(m);
        for (int n = 1; n <= 2 * m - 1; ++n) {
            EXPECT_EQ(static_cast<int>(torsion_basis_F(m, n).size()), f.rows[n].z2 + f.rows[n].z4);
            const auto tb = torsion_basis_B(m, n);
            EXPECT_EQ(static_cast<int>(tb.size()), b.rows[n].z2 + b.rows[n].z4) << "m=" << m << " n=" << n;
            int pure = 0;
            for (const auto& mon : tb)
                pure += mon.is_pure_d();
            EXPECT_EQ(pure, b.rows[n].z4);
        }
        EXPECT_TRUE(torsion_basis_F(m, 2 * m).empty());
        EXPECT_TRUE(torsion_basis_B(m, 2 * m).empty());
    }
}

TEST(TorsionBasis, MonomialsAreNormal)
{
    for (int m = 1; m <= 15; ++m)
        for (int n = 1; n <= 2 * m - 1; ++n) {
            for (const auto& mon : torsion_basis_F(m, n))
                EXPECT_EQ(IntClassF::monomial(OrderedConfInt{m}, mon).torsion().size(), 1u);
            for (const auto& mon : torsion_basis_B(m, n))
                EXPECT_EQ(IntClassB::monomial(UnorderedConfInt{m}, mon).torsion().size(), 1u);
        }
}

TEST(Relations, PresentationRelationsVanish)
{
    for (int m = 3; m <= 25; ++m) {
        const int t = m / 2, delta = m % 2;
        EXPECT_TRUE(xF(m).pow(t + 1).is_zero());
        EXPECT_TRUE(yF(m).pow(t + 1).is_zero());
        EXPECT_EQ(zF(m) * zF(m), xF(m) * yF(m) * (xF(m) + yF(m)));
        IntClassF diag(OrderedConfInt{m});
        const int top = delta ? t : t - 1;
        for (int i = 0; i <= top; ++i)
            diag += xF(m).pow(i) * yF(m).pow(top - i) * zF(m);
        EXPECT_TRUE(diag.is_zero()) << m;
        if (delta) {
            EXPECT_TRUE((wF(m) * yF(m) + xF(m).pow(t) * zF(m)).is_zero());
        } else {
            EXPECT_TRUE((xF(m).pow(t) * yF(m).pow(t)).is_zero());
            EXPECT_TRUE((xF(m).pow(t) * zF(m)).is_zero());
        }

        const auto a = gen(m, 0), b = gen(m, 1), c = gen(m, 2), d = gen(m, 3), e = eB(m);
        EXPECT_EQ(b * b, a * b);
        EXPECT_EQ(c * c, a * d);
        EXPECT_TRUE((a * sigma(t, m)).is_zero());
        EXPECT_TRUE((b * sigma(t, m) + iota(t + 1, m)).is_zero());
        EXPECT_TRUE((c * sigma(t - 1 + delta, m)).is_zero());
        EXPECT_TRUE(d.pow(t + delta).is_zero());
        EXPECT_TRUE((e * e).is_zero());
        for (int s = 0; s <= t; ++s) {
            EXPECT_TRUE((a * R_element(t, s, m)).is_zero()) << m << " " << s;
            EXPECT_TRUE((b * R_element(t, s, m) + iota(t + s + 1, m)).is_zero()) << m << " " << s;
        }
        for (int s = 0; s <= t - 1 + delta; ++s)
            EXPECT_TRUE((c * R_element(t - 1 + delta, s, m)).is_zero()) << m << " " << s;
    }
}

TEST(Relations, OddFreeGeneratorProducts)
{
    for (int m = 3; m <= 25; m += 2) {
        const int t = m / 2, l = t / 2, kappa = t % 2;
        const auto ring = UnorderedConfInt{m};
        const auto a = gen(m, 0), b = gen(m, 1), c = gen(m, 2), d = gen(m, 3), e = eB(m);
        const auto bcd = IntClassB::monomial(ring, {0, 1, 1, l});
        EXPECT_EQ(a * e, kappa * bcd);
        EXPECT_EQ(b * e, kappa * bcd);
        if (kappa) {
            EXPECT_EQ(c * e, IntClassB::monomial(ring, {0, 1, 0, l + 1}));
        } else if (m != 5) {
            EXPECT_EQ(c * e, 2 * d.pow(l + 1));
        }
        IntClassB de(ring);
        for (int i = 1; i <= l; ++i)
            if (binom_mod2(t - i, i - 1))
                de += a.pow(t - 2 * i) * b * c * d.pow(i);
        EXPECT_EQ(d * e, de) << m;
    }
}

TEST(Identities, SigmaAndR)
{
    for (int m = 3; m <= 12; ++m) {
        EXPECT_EQ(sigma(1, m), gen(m, 0));
        EXPECT_EQ(iota(3, m), IntClassB(UnorderedConfInt{m}));
        for (int r = 0; r <= 8; ++r) {
            EXPECT_EQ(R_element(r, 0, m), sigma(r, m));
            for (int s = 0; s + 2 <= r; ++s)
                EXPECT_EQ(R_element(r, s + 2, m), gen(m, 3) * R_element(r, s, m) - gen(m, 0) * R_element(r, s + 1, m))
                    << "m=" << m << " r=" << r << " s=" << s;
        }
    }
}

TEST(AmbientMaps, Examples)
{
    const auto xy = AmbientClass::monomial(ProjSquareInt{}, {1, 1, 0});
    EXPECT_EQ(ambient_map_F(xy, 4), IntClassF::monomial(OrderedConfInt{4}, {1, 1, 0}));
    EXPECT_TRUE(ambient_map_F(AmbientClass::monomial(ProjSquareInt{}, {0, 0, 1}), 2).is_zero());
    // b2 R_(1,0) + iota_4 = 0 leaves a2 b2 = 2 d4; a2^2 b2 sits above the top degree
    const auto ab = ambient_map_B(D8IntClass::monomial(DihedralInt{}, {1, 1, 0, 0}), 3);
    EXPECT_EQ(ab, IntClassB::monomial(UnorderedConfInt{3}, {0, 0, 0, 1}, 2));
    EXPECT_TRUE((gen(3, 1) * ab).is_zero());
    EXPECT_TRUE(ambient_map_B(D8IntClass::monomial(DihedralInt{}, {2, 1, 0, 0}), 3).is_zero());
}

TEST(AmbientMaps, KernelExamples)
{
    EXPECT_EQ(kernel_rank_leq_m('F', 6)[3], 0);
    EXPECT_EQ(kernel_rank_leq_m('B', 7)[6], 0);
    EXPECT_GT(ambient_kernel_log2_F(2, 3), 0);
}

TEST(AmbientMaps, InjectiveThroughDegreeM)
{
    for (int m = 1; m <= 20; ++m) {
        for (int k : kernel_rank_leq_m('F', m))
            EXPECT_EQ(k, 0) << "F m=" << m;
        for (int k : kernel_rank_leq_m('B', m))
            EXPECT_EQ(k, 0) << "B m=" << m;
    }
}

TEST(AmbientMaps, AreRingMaps)
{
    std::mt19937_64 rng(32);
    for (int m = 3; m <= 10; ++m)
        for (int k = 0; k < 100; ++k) {
            auto s1 = d8_torsion_basis(2 + static_cast<int>(rng() % 8));
            auto s2 = d8_torsion_basis(2 + static_cast<int>(rng() % 8));
            const auto p = D8IntClass::monomial(DihedralInt{}, pick(rng, s1));
            const auto q = D8IntClass::monomial(DihedralInt{}, pick(rng, s2));
            ASSERT_EQ(ambient_map_B(p * q, m), ambient_map_B(p, m) * ambient_map_B(q, m));
        }
}

TEST(WPrime, SymmetricRelations)
{
    for (int m = 5; m <= 29; m += 4)
        EXPECT_TRUE(wprime_check(m)) << m;
    EXPECT_THROW(wprime_check(7), std::invalid_argument);
}

TEST(IntProducts, AssociativeCommutativeConfluent)
{
    std::mt19937_64 rng(33);
    for (int m = 3; m <= 12; ++m) {
        const int top = 2 * m - 1;
        auto rb = [&] {
            auto c = random_torsion_B(m, 1 + static_cast<int>(rng() % top), rng);
            if (rng() % 4 == 0)
                c += static_cast<std::int64_t>(rng() % 3) * eB(m);
            return c;
        };
        auto rf = [&] {
            auto c = random_torsion_F(m, 1 + static_cast<int>(rng() % top), rng);
            if (rng() % 4 == 0)
                c += wF(m);
            return c;
        };
        for (int k = 0; k < 100; ++k) {
            const auto x = rb(), y = rb(), z = rb();
            ASSERT_EQ((x * y) * z, x * (y * z));
            ASSERT_EQ(x * y, y * x);
            const auto p = rf(), q = rf(), r = rf();
            ASSERT_EQ((p * q) * r, p * (q * r));
            ASSERT_EQ(p * q, q * p);
        }
        for (int k = 0; k < 500; ++k) {
            const auto x = rb(), y = rb();
            ReductionContext ctx{&rng};
            ASSERT_EQ(x.times(y, &ctx), x * y);
            const auto p = rf(), q = rf();
            ReductionContext ctx2{&rng};
            ASSERT_EQ(p.times(q, &ctx2), p * q);
        }
    }
}

TEST(IntClass, Text)
{
    EXPECT_EQ((gen(3, 1) * gen(3, 1)).to_string(), "2*d4 (mod 4)");
    EXPECT_EQ(IntClassB(UnorderedConfInt{3}).to_string(), "0");
    EXPECT_THROW(IntClass<DihedralInt>(DihedralInt{}, 0, 1, {}), std::invalid_argument);
}
