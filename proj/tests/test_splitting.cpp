#include "motreal/splitting.hpp"

#include <gtest/gtest.h>

using namespace motreal;

TEST(DecideSection, Examples) {
    const auto yes = decide_section(24, 4);
    EXPECT_EQ(yes.verdict, SectionVerdict::Yes);
    EXPECT_EQ(yes.quotient, Int(1));
    EXPECT_EQ(yes.citation, SectionCitation::Thm5_1);

    const auto no = decide_section(25, 3);
    EXPECT_EQ(no.verdict, SectionVerdict::No);
    EXPECT_EQ(no.failing_prime, 2u);
    EXPECT_EQ(no.citation, SectionCitation::RaynaudObstruction);

    const auto trivial = decide_section(6, 1);
    EXPECT_EQ(trivial.verdict, SectionVerdict::TriviallyYes);
    EXPECT_TRUE(trivial.has_section());
}

TEST(DecideSection, ListedDecisions) {
    for (auto [n, r] : std::vector<std::pair<int, int>>{{24, 3}, {24, 4}, {48, 3}, {2880, 6}})
        EXPECT_EQ(decide_section(n, r).verdict, SectionVerdict::Yes) << n << "," << r;
    for (int m = 1; m <= 10; ++m) EXPECT_EQ(decide_section(24 * m, 4).verdict, SectionVerdict::Yes);
    EXPECT_EQ(decide_section(25, 3).verdict, SectionVerdict::No);
    EXPECT_EQ(decide_section(24, 5).verdict, SectionVerdict::No);
}

TEST(DecideSection, OutsideTheoremRange) {
    const auto small = decide_section(3, 2);
    EXPECT_EQ(small.verdict, SectionVerdict::OutOfTheoremRange);
    EXPECT_FALSE(small.has_section());
    EXPECT_EQ(decide_section(10, 9).verdict, SectionVerdict::OutOfTheoremRange);
    EXPECT_EQ(decide_section(10, 8).verdict, SectionVerdict::No);
    EXPECT_THROW(decide_section(0, 1), InvalidParameters);
    EXPECT_THROW(decide_section(5, 0), InvalidParameters);
}

TEST(DecideSection, IffDivisibility) {
    for (std::int64_t n = 4; n <= 256; ++n)
        for (std::int64_t r = 2; r <= n - 2; ++r) {
            const bool divides = Int(n) % james_number(static_cast<std::uint64_t>(r)).value == 0;
            ASSERT_EQ(decide_section(n, r).verdict, divides ? SectionVerdict::Yes : SectionVerdict::No) << n << "," << r;
        }
}

TEST(DecideSection, DownwardClosed) {
    for (std::int64_t n = 4; n <= 256; ++n)
        for (std::int64_t r = 2; r <= n - 2; ++r) {
            if (decide_section(n, r).verdict != SectionVerdict::Yes) continue;
            for (std::int64_t s = 2; s <= r; ++s) ASSERT_EQ(decide_section(n, s).verdict, SectionVerdict::Yes);
        }
}

TEST(FreeSummand, Examples) {
    const auto a = free_summand_decision(24, 3);
    EXPECT_EQ(a.verdict, SectionVerdict::Yes);
    EXPECT_EQ(a.r, 4);
    EXPECT_EQ(a.citation, SectionCitation::Cor5_2);
    EXPECT_EQ(free_summand_decision(48, 2).verdict, SectionVerdict::Yes);
    EXPECT_EQ(free_summand_decision(5, 0).verdict, SectionVerdict::TriviallyYes);
    EXPECT_THROW(free_summand_decision(5, -1), InvalidParameters);
}

TEST(FreeSummand, RanksTwoAndThreeForMultiplesOf24) {
    for (std::int64_t m = 1; m <= 10; ++m) {
        EXPECT_EQ(free_summand_decision(24 * m, 2).verdict, SectionVerdict::Yes);
        EXPECT_EQ(free_summand_decision(24 * m, 3).verdict, SectionVerdict::Yes);
    }
}

TEST(MaxFreeRank, Examples) {
    EXPECT_EQ(max_guaranteed_free_rank(24), 3);
    EXPECT_EQ(max_guaranteed_free_rank(2880), 5);
    EXPECT_EQ(max_guaranteed_free_rank(3), 0);
    EXPECT_EQ(max_guaranteed_free_rank(1), 0);
    EXPECT_THROW(max_guaranteed_free_rank(0), InvalidParameters);
}

TEST(ProofTrace, Examples) {
    const auto t = verify_splitting_proof_inequalities(24, 4);
    EXPECT_TRUE(t.passing());
    EXPECT_EQ(t.branch, "n >= 9");
    std::vector<std::string> instantiated;
    for (const auto& c : t.checks)
        if (c.citation == "Thm4.5") instantiated.push_back(c.inequality);
    ASSERT_GE(instantiated.size(), 5u);
    EXPECT_EQ(std::vector<std::string>(instantiated.begin(), instantiated.begin() + 5),
              (std::vector<std::string>{"3 <= 21", "22 <= 37", "24 <= 25", "46 <= 46", "22 <= 24"}));

    EXPECT_TRUE(verify_splitting_proof_inequalities(2880, 6).passing());
    EXPECT_THROW(verify_splitting_proof_inequalities(24, 2), OutOfRange);
    EXPECT_THROW(verify_splitting_proof_inequalities(25, 3), OutOfRange);
    EXPECT_THROW(verify_splitting_proof_inequalities(24, 23), OutOfRange);
}

TEST(ProofTrace, SweepOverYesSet) {
    int traces = 0;
    for (std::int64_t n = 5; n <= 256; ++n)
        for (std::int64_t r = 3; r <= n - 2; ++r) {
            if (decide_section(n, r).verdict != SectionVerdict::Yes) continue;
            ++traces;
            ASSERT_TRUE(verify_splitting_proof_inequalities(n, r).passing()) << n << "," << r;
        }
    EXPECT_EQ(traces, 20);
}
