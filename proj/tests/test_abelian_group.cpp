#include "generators.hpp"
#include "motreal/abelian_group.hpp"
#include "motreal/verify/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace motreal;

namespace {

FinAbGroup Z(std::int64_t n) { return FinAbGroup::cyclic(Int(n)); }
AbGroupFQ fin(FinAbGroup g) { return AbGroupFQ::finite(std::move(g)); }

}  // namespace

TEST(FinAbGroup, CanonicalForm) {
    EXPECT_EQ(FinAbGroup::from_cyclic_orders({2, 3}), Z(6));
    EXPECT_EQ(FinAbGroup::from_cyclic_orders({4, 6}).invariant_factors(), (std::vector<Int>{2, 12}));
    EXPECT_EQ(FinAbGroup::from_cyclic_orders({1, 1}), FinAbGroup());
    EXPECT_EQ(FinAbGroup::from_cyclic_orders({2, 4}).to_string(), "Z/2 + Z/4");
    EXPECT_EQ(FinAbGroup().to_string(), "0");
    EXPECT_THROW(FinAbGroup({Int(4), Int(2)}), std::invalid_argument);
    EXPECT_THROW(FinAbGroup({Int(1)}), std::invalid_argument);
    EXPECT_THROW(FinAbGroup::from_cyclic_orders({0}), std::invalid_argument);
}

TEST(FinAbGroup, CanonicalFormIsOrderIndependent) {
    auto rng = gen::engine(20);
    for (int i = 0; i < 300; ++i) {
        std::vector<Int> orders;
        for (int k = 0; k < 4; ++k) orders.emplace_back(gen::uniform(rng, 1, 60));
        auto shuffled = orders;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const auto g = FinAbGroup::from_cyclic_orders(orders);
        ASSERT_EQ(g, FinAbGroup::from_cyclic_orders(shuffled));
        Int product = 1;
        for (const auto& o : orders) product *= o;
        ASSERT_EQ(g.order(), product);
    }
}

TEST(Presentation, Examples) {
    EXPECT_EQ(group_from_presentation(IntMatrix(1, 1, {Int(2)})), fin(Z(2)));
    EXPECT_EQ(group_from_presentation(IntMatrix::diagonal({2, 3})), fin(Z(6)));
    EXPECT_EQ(group_from_presentation(IntMatrix(1, 1)), (AbGroupFQ{0, 1, {}}));
}

TEST(Presentation, OrderIsDeterminant) {
    auto rng = gen::engine(21);
    for (int i = 0; i < 200; ++i) {
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
        std::vector<Int> entries;
        for (std::size_t k = 0; k < n * n; ++k) entries.emplace_back(gen::uniform(rng, -6, 6));
        const IntMatrix m(n, n, entries);
        const auto det = abs(determinant(m));
        const auto g = group_from_presentation(m);
        if (det == 0) {
            ASSERT_GT(g.free_rank, 0u);
        } else {
            ASSERT_EQ(g.free_rank, 0u);
            ASSERT_EQ(g.torsion.order(), det);
        }
    }
}

TEST(MTorsion, Examples) {
    EXPECT_EQ(m_torsion(fin(Z(6)), 4), fin(Z(2)));
    EXPECT_TRUE(m_torsion(AbGroupFQ{1, 1, {}}, 5).is_trivial());
    EXPECT_EQ(m_torsion(fin(Z(12)), 12), fin(Z(12)));
}

TEST(ModM, Examples) {
    EXPECT_EQ(mod_m(fin(Z(6)), 4), fin(Z(2)));
    EXPECT_EQ(mod_m(AbGroupFQ{0, 1, {}}, 7), fin(Z(7)));
    EXPECT_TRUE(mod_m(AbGroupFQ{2, 0, {}}, 3).is_trivial());
}

TEST(PrimaryPart, Examples) {
    EXPECT_EQ(primary_part(Z(12), 2), Z(4));
    EXPECT_TRUE(primary_part(Z(12), 5).is_trivial());
    const auto g = FinAbGroup::from_cyclic_orders({2, 4});
    EXPECT_EQ(primary_part(g, 2), g);
    EXPECT_THROW(primary_part(Z(12), 4), std::invalid_argument);
}

TEST(PrimaryPart, ProductOverPrimesIsWhole) {
    auto rng = gen::engine(22);
    for (int i = 0; i < 200; ++i) {
        const auto g = gen::random_finite_group(rng, 4, 200);
        FinAbGroup acc;
        for (auto [p, e] : factorize(g.order())) acc = direct_sum(acc, primary_part(g, p));
        ASSERT_EQ(acc, g);
    }
}

TEST(DivisibilityPredicates, Examples) {
    const auto a = divisibility_predicates(AbGroupFQ{1, 0, Z(3)}, PrimeSet::of({2}));
    EXPECT_TRUE(a.is_divisible);
    EXPECT_TRUE(a.is_uniquely_divisible);
    EXPECT_TRUE(a.is_torsion_free);
    EXPECT_FALSE(a.is_bounded_torsion);

    const auto b = divisibility_predicates(AbGroupFQ{0, 1, {}}, PrimeSet::all());
    EXPECT_FALSE(b.is_divisible);
    EXPECT_TRUE(b.is_torsion_free);

    const auto c = divisibility_predicates(fin(Z(8)), PrimeSet::of({2}));
    EXPECT_TRUE(c.is_bounded_torsion);
    EXPECT_FALSE(c.is_divisible);
}

TEST(DivisibilityPredicates, AgreeWithEnumeration) {
    // On finite groups: I-divisible iff multiplication by every p in I is onto,
    // I-torsion-free iff it is injective.
    for (const auto& g : verify::all_groups_up_to(24))
        for (const auto& primes : {PrimeSet::of({2}), PrimeSet::of({3}), PrimeSet::of({2, 5}), PrimeSet::all()}) {
            bool onto = true, injective = true;
            for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
                if (!primes.contains(p)) continue;
                onto = onto && verify::count_mod_m(g, p) == 1;
                injective = injective && verify::count_m_torsion(g, p) == 1;
            }
            const auto pr = divisibility_predicates(fin(g), primes);
            ASSERT_EQ(pr.is_divisible, onto) << g << " " << primes.to_string();
            ASSERT_EQ(pr.is_torsion_free, injective) << g << " " << primes.to_string();
            ASSERT_EQ(pr.is_uniquely_divisible, onto && injective);
        }
}

TEST(DivisibilityPredicates, EmptyPrimeSet) {
    const auto pr = divisibility_predicates(AbGroupFQ{0, 2, Z(6)}, PrimeSet::of({}));
    EXPECT_TRUE(pr.is_divisible);
    EXPECT_TRUE(pr.is_uniquely_divisible);
    EXPECT_TRUE(pr.is_torsion_free);
}

TEST(DivisibilityPredicates, INumberKillsTorsionAndCokernel) {
    // mod_m and m_torsion vanish at I-numbers m on uniquely I-divisible groups;
    // m_torsion vanishes on I-torsion-free groups.
    auto rng = gen::engine(23);
    for (int i = 0; i < 500; ++i) {
        const auto a = gen::random_group(rng);
        const auto primes = gen::random_prime_set(rng);
        if (primes.is_all() || primes.explicit_primes().empty()) continue;
        Int m = 1;
        for (auto p : primes.explicit_primes()) m *= ipow(Int(p), static_cast<unsigned>(gen::uniform(rng, 0, 3)));
        const auto pr = divisibility_predicates(a, primes);
        if (pr.is_uniquely_divisible) {
            ASSERT_TRUE(mod_m(a, m).is_trivial()) << a << " m=" << m;
            ASSERT_TRUE(m_torsion(a, m).is_trivial()) << a << " m=" << m;
        }
        if (pr.is_torsion_free) ASSERT_TRUE(m_torsion(a, m).is_trivial()) << a << " m=" << m;
    }
}

TEST(UniqueDivisibility, TwoOfThree) {
    // 0 -> A -> A + C -> C -> 0: any two uniquely divisible forces the third.
    auto rng = gen::engine(24);
    int exercised = 0;
    for (int i = 0; i < 2000; ++i) {
        AbGroupFQ a = gen::random_group(rng), c = gen::random_group(rng);
        if (gen::uniform(rng, 0, 1)) a = {a.q_rank, 0, {}};
        if (gen::uniform(rng, 0, 1)) c = {c.q_rank, 0, {}};
        const auto b = direct_sum(a, c);
        const int count = a.is_uniquely_divisible() + b.is_uniquely_divisible() + c.is_uniquely_divisible();
        ASSERT_NE(count, 2) << a << " | " << c;
        exercised += count == 3;
    }
    EXPECT_GT(exercised, 100);
}

TEST(PrimeSet, Construction) {
    EXPECT_THROW(PrimeSet::of({2, 4}), std::invalid_argument);
    EXPECT_THROW(PrimeSet::of({3, 3}), std::invalid_argument);
    EXPECT_EQ(PrimeSet::of({5, 2}).to_string(), "{2,5}");
    EXPECT_EQ(PrimeSet::all().to_string(), "all");
    EXPECT_TRUE(PrimeSet::of({2, 3}).is_product_of_members(72));
    EXPECT_FALSE(PrimeSet::of({2, 3}).is_product_of_members(10));
    EXPECT_TRUE(PrimeSet::of({}).is_product_of_members(1));
}

TEST(PrimeSetParts, SplitTorsion) {
    auto rng = gen::engine(25);
    for (int i = 0; i < 300; ++i) {
        const auto g = gen::random_finite_group(rng, 4, 100);
        const auto primes = gen::random_prime_set(rng);
        ASSERT_EQ(direct_sum(prime_set_torsion(g, primes), prime_set_coprimary(g, primes)), g);
        ASSERT_TRUE(primes.is_product_of_members(prime_set_torsion(g, primes).order()));
    }
}
