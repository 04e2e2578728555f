#include <gtest/gtest.h>

#include <cfgcoh/bockstein.hpp>
#include <cfgcoh/tcs.hpp>

using namespace cfgcoh;

namespace {

IntClassB d4_power(int m, int j, std::int64_t c) { return IntClassB::monomial(UnorderedConfInt{m}, {0, 0, 0, j}, c); }

} // namespace

TEST(Certificate, MThree)
{
    const auto c = cup_length_b2(3);
    EXPECT_EQ(c.cup_length, 2);
    EXPECT_EQ(c.witness, d4_power(3, 1, 2));
    EXPECT_EQ(c.lower_bound, 5);
    EXPECT_FALSE(c.eta_dependent);
}

TEST(Certificate, MFive)
{
    const auto c = cup_length_b2(5);
    EXPECT_EQ(c.cup_length, 4);
    EXPECT_EQ(c.witness, d4_power(5, 2, 2));
    EXPECT_EQ(c.lower_bound, 9);
    // the witness is twice the order-4 generator d4^2
    EXPECT_EQ(*d4_power(5, 2, 1).additive_order(), 4);
    EXPECT_EQ(closed_form_B(5).rows[8].z4, 1);
}

TEST(Certificate, MSix)
{
    const auto c = cup_length_b2(6);
    EXPECT_EQ(c.cup_length, 4);
    EXPECT_EQ(c.lower_bound, 9);
    EXPECT_EQ(c.witness, d4_power(6, 2, 2));
    EXPECT_EQ(*d4_power(6, 2, 1).additive_order(), 4);
    EXPECT_EQ(closed_form_B(6).rows[8], (GroupRow{0, 2, 1}));
}

TEST(Certificate, MSevenWithinKnownRange)
{
    const auto c = cup_length_b2(7);
    EXPECT_GE(c.lower_bound, 9);
    EXPECT_LE(c.lower_bound, 10);
    EXPECT_EQ(known_tcs_value(7), "{9,10}");
}

TEST(Certificate, Invariants)
{
    int prev = 0;
    for (int m = 1; m <= 25; ++m) {
        const auto c = cup_length_b2(m);
        const auto b = IntClassB::monomial(UnorderedConfInt{m}, {0, 1, 0, 0});
        EXPECT_FALSE(c.witness.is_zero()) << m;
        EXPECT_TRUE((c.witness * b).is_zero()) << m;
        EXPECT_EQ(c.witness, b.pow(c.cup_length)) << m;
        EXPECT_EQ(c.lower_bound % 2, 1);
        EXPECT_GE(c.lower_bound, prev) << m;
        EXPECT_FALSE(c.eta_dependent) << m;
        prev = c.lower_bound;
    }
}

TEST(Certificate, IndependentOfEta)
{
    const auto a = cup_length_b2(5, 0), b = cup_length_b2(5, 2);
    EXPECT_EQ(a.cup_length, b.cup_length);
    EXPECT_EQ(a.lower_bound, b.lower_bound);
    EXPECT_EQ(a.witness.to_string(), b.witness.to_string());
}

TEST(KnownValues, Families)
{
    EXPECT_EQ(known_tcs_value(3), "5");
    EXPECT_EQ(known_tcs_value(5), "9");
    EXPECT_EQ(known_tcs_value(6), "9");
    EXPECT_FALSE(known_tcs_value(11).has_value());
    for (int m : {1, 2, 4, 8, 16})
        EXPECT_EQ(known_tc_difference(m), 1) << m;
    for (int m : {3, 5, 9, 17})
        EXPECT_EQ(known_tc_difference(m), 2) << m;
    EXPECT_EQ(known_tc_difference(6), 2);
    for (int m : {10, 18, 34})
        EXPECT_EQ(known_tc_difference(m), 1) << m;
    for (int m : {7, 11, 12})
        EXPECT_FALSE(known_tc_difference(m).has_value()) << m;
}

TEST(GapTable, Rows)
{
    const auto rows = tcs_gap_table({3, 5, 7});
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].lower_bound, 5);
    EXPECT_EQ(rows[0].known, "5");
    EXPECT_EQ(rows[1].lower_bound, 9);
    EXPECT_EQ(rows[1].known, "9");
    EXPECT_EQ(rows[2].known, "{9,10}");
    EXPECT_EQ(rows[2].lower_bound, cup_length_b2(7).lower_bound);
}
