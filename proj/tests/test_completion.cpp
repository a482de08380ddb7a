#include "generators.hpp"
#include "motreal/completion.hpp"
#include "motreal/verify/oracles.hpp"

#include <gtest/gtest.h>

using namespace motreal;

namespace {

FinAbGroup Z(std::int64_t n) { return FinAbGroup::cyclic(Int(n)); }

}  // namespace

TEST(ExtCompletion, Examples) {
    const auto a = ext_completion(AbGroupFQ{2, 0, Z(12)}, PrimeSet::of({2}));
    EXPECT_EQ(a.padic_rank, 0u);
    ASSERT_EQ(a.finite_parts.size(), 1u);
    EXPECT_EQ(a.finite_parts.at(2), Z(4));

    const auto b = ext_completion(AbGroupFQ{0, 1, {}}, PrimeSet::all());
    EXPECT_EQ(b.padic_rank, 1u);
    EXPECT_TRUE(b.finite_parts.empty());
    EXPECT_EQ(b.to_string(), "Zhat");

    const auto c = ext_completion(AbGroupFQ{}, PrimeSet::all());
    EXPECT_TRUE(c.is_finite());
    EXPECT_EQ(c.order(), 1);
}

TEST(ExtCompletion, FreePartAtExplicitPrimes) {
    const auto c = ext_completion(AbGroupFQ{0, 2, Z(10)}, PrimeSet::of({2, 3}));
    EXPECT_EQ(c.padic_rank, 2u);
    EXPECT_EQ(c.finite_parts.at(2), Z(2));
    EXPECT_FALSE(c.finite_parts.contains(5));
    EXPECT_FALSE(c.is_finite());
}

TEST(ExtCompletion, ProductLaw) {
    // |completion| = prod over p in I of |primary_part(A, p)| for finite completions.
    auto rng = gen::engine(30);
    for (int i = 0; i < 300; ++i) {
        const auto a = gen::random_group(rng, false);
        const auto primes = gen::random_prime_set(rng);
        const auto c = ext_completion(a, primes);
        ASSERT_TRUE(c.is_finite());
        Int product = 1;
        for (auto [p, e] : factorize(a.torsion.order()))
            if (primes.contains(p)) product *= primary_part(a, p).order();
        ASSERT_EQ(c.order(), product) << a << " " << primes.to_string();
    }
}

TEST(ExtCompletion, StabilizationOfModPowers) {
    // mod_m(A, p^s) stops changing once p^s >= exponent(A), and then equals the p-primary part.
    for (const auto& g : verify::all_groups_up_to(48))
        for (std::uint64_t p : {2, 3, 5, 7}) {
            Int ps = p;
            while (ps < g.exponent()) ps *= p;
            const auto stable = mod_m(AbGroupFQ::finite(g), ps);
            ASSERT_EQ(mod_m(AbGroupFQ::finite(g), ps * p), stable) << g << " p=" << p;
            ASSERT_EQ(stable.torsion, primary_part(g, p)) << g << " p=" << p;
            const auto completed = ext_completion(AbGroupFQ::finite(g), PrimeSet::of({p}));
            ASSERT_EQ(completed.finite_value(), stable.torsion);
        }
}

TEST(CompletionDecomposition, Examples) {
    const auto a = completion_decomposition(AbGroupFQ{1, 0, Z(12)}, PrimeSet::of({2}));
    EXPECT_EQ(a.kernel, (AbGroupFQ{1, 0, Z(3)}));
    EXPECT_EQ(a.completion, Z(4));
    EXPECT_EQ(a.section_image, Z(4));

    const auto b = completion_decomposition(AbGroupFQ{1, 0, Z(12)}, PrimeSet::of({2, 3}));
    EXPECT_EQ(b.kernel, (AbGroupFQ{1, 0, {}}));
    EXPECT_EQ(b.completion, Z(12));

    const auto c = completion_decomposition(AbGroupFQ::finite(Z(5)), PrimeSet::of({2}));
    EXPECT_EQ(c.kernel, AbGroupFQ::finite(Z(5)));
    EXPECT_TRUE(c.completion.is_trivial());
}

TEST(CompletionDecomposition, RejectsFreeSummands) {
    EXPECT_THROW(completion_decomposition(AbGroupFQ{0, 1, {}}, PrimeSet::of({2})), HypothesisViolated);
}

TEST(CompletionDecomposition, StructureAgainstSubgroupOracles) {
    auto rng = gen::engine(31);
    for (int i = 0; i < 150; ++i) {
        const auto a = gen::random_group(rng, false);
        const auto primes = gen::random_prime_set(rng);
        const auto d = completion_decomposition(a, primes);
        const std::string where = a.to_string() + " at " + primes.to_string();
        ASSERT_EQ(direct_sum(d.kernel, AbGroupFQ::finite(d.section_image)), a) << where;
        ASSERT_EQ(d.section_image, verify::subgroup_type(a.torsion, verify::prime_set_torsion_indicator(a.torsion, primes)))
            << where;
        ASSERT_EQ(d.kernel.torsion,
                  verify::subgroup_type(a.torsion, verify::prime_set_divisible_indicator(a.torsion, primes)))
            << where;
        ASSERT_TRUE(divisibility_predicates(d.kernel, primes).is_divisible) << where;
        // The complement of the kernel has only I-number orders > 1.
        for (const auto& f : d.section_image.invariant_factors()) ASSERT_TRUE(primes.is_product_of_members(f));
    }
}
