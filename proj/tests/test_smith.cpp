#include "generators.hpp"
#include "motreal/int_matrix.hpp"

#include <gtest/gtest.h>

using namespace motreal;

namespace {

void expect_valid_decomposition(const IntMatrix& m) {
    const auto snf = smith_normal_form(m);
    ASSERT_EQ(snf.left * m * snf.right, snf.diagonal);
    ASSERT_EQ(abs(determinant(snf.left)), 1);
    ASSERT_EQ(abs(determinant(snf.right)), 1);
    ASSERT_TRUE(snf.diagonal.is_diagonal());
    const auto diag = snf.diagonal.diagonal_entries();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        ASSERT_GE(diag[i], 0);
        if (i + 1 < diag.size()) {
            // d_i | d_{i+1}, with zeros only at the end.
            if (diag[i] == 0) ASSERT_EQ(diag[i + 1], 0);
            else ASSERT_EQ(diag[i + 1] % diag[i], 0);
        }
    }
}

}  // namespace

TEST(SmithNormalForm, Identity) {
    EXPECT_EQ(smith_normal_form(IntMatrix::identity(2)).diagonal, IntMatrix::identity(2));
}

TEST(SmithNormalForm, CoprimeDiagonalCombines) {
    EXPECT_EQ(smith_normal_form(IntMatrix::diagonal({2, 3})).diagonal, IntMatrix::diagonal({1, 6}));
}

TEST(SmithNormalForm, UpperTriangular) {
    const IntMatrix m({{2, 4}, {0, 2}});
    EXPECT_EQ(smith_normal_form(m).diagonal, IntMatrix::diagonal({2, 2}));
    expect_valid_decomposition(m);
    const IntMatrix n({{2, 1}, {0, 2}});
    EXPECT_EQ(smith_normal_form(n).diagonal, IntMatrix::diagonal({1, 4}));
    expect_valid_decomposition(n);
}

TEST(SmithNormalForm, RectangularAndZero) {
    expect_valid_decomposition(IntMatrix(3, 2));
    expect_valid_decomposition(IntMatrix({{0, 6, 4}, {3, 0, 9}}));
    const auto snf = smith_normal_form(IntMatrix({{0, 0}, {0, 0}, {0, 5}}));
    EXPECT_EQ(snf.diagonal.diagonal_entries(), (std::vector<Int>{5, 0}));
}

TEST(SmithNormalForm, Deterministic) {
    const IntMatrix m({{6, -4, 10}, {8, 12, -2}, {4, 4, 4}});
    const auto a = smith_normal_form(m);
    const auto b = smith_normal_form(m);
    EXPECT_EQ(a.left, b.left);
    EXPECT_EQ(a.right, b.right);
    EXPECT_EQ(a.diagonal, b.diagonal);
}

TEST(SmithNormalForm, UnimodularOnRandomMatrices) {
    auto rng = gen::engine(10);
    for (int i = 0; i < 400; ++i) {
        const auto m = gen::random_matrix(rng, 5, 20);
        SCOPED_TRACE(::testing::Message() << "trial " << i);
        expect_valid_decomposition(m);
    }
}

TEST(SmithNormalForm, DeterminantPreservedUpToSign) {
    auto rng = gen::engine(11);
    for (int i = 0; i < 200; ++i) {
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
        std::vector<Int> entries;
        for (std::size_t k = 0; k < n * n; ++k) entries.emplace_back(gen::uniform(rng, -9, 9));
        const IntMatrix m(n, n, entries);
        Int product = 1;
        for (const auto& d : smith_normal_form(m).diagonal.diagonal_entries()) product *= d;
        ASSERT_EQ(product, abs(determinant(m)));
    }
}

TEST(SmithNormalForm, LargeEntriesDoNotOverflow) {
    const Int big = ipow(Int(10), 40);
    const IntMatrix m({{big, big + 1}, {big - 1, big}});
    expect_valid_decomposition(m);
    EXPECT_EQ(smith_normal_form(m).diagonal, IntMatrix::identity(2));
}

TEST(IntMatrix, RejectsBadShapes) {
    EXPECT_THROW(IntMatrix(2, 2, {Int(1)}), std::invalid_argument);
    EXPECT_THROW(IntMatrix({{1, 2}, {3}}), std::invalid_argument);
    EXPECT_THROW(IntMatrix(2, 3) * IntMatrix(2, 3), std::invalid_argument);
}
