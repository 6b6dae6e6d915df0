#include <gtest/gtest.h>

#include "cayrec/checks.hpp"
#include "cayrec/group.hpp"
#include "test_support.hpp"

namespace cayrec {
namespace {

TEST(MakeGroup, CyclicThreeTable) {
    const GroupTable g = make_group("c3");
    EXPECT_EQ(g.op_matrix(), Matrix::from_rows({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
    EXPECT_EQ(g.identity(), 0);
}

TEST(MakeGroup, TrivialGroup) {
    const GroupTable g = make_group("c1");
    EXPECT_EQ(g.order(), 1);
    EXPECT_EQ(g.op_matrix(), Matrix(1, {0}));
}

TEST(MakeGroup, KleinFourIsSelfInverse) {
    const GroupTable g = make_group("prod:c2,c2");
    EXPECT_EQ(g.order(), 4);
    for (int x = 0; x < 4; ++x) EXPECT_EQ(g.op(x, x), g.identity());
}

TEST(MakeGroup, CatalogOrdersAndAxioms) {
    const std::vector<std::pair<const char*, int>> catalog = {
        {"c1", 1},  {"c2", 2},  {"c5", 5},        {"c8", 8},
        {"d2", 4},  {"d4", 8},  {"s3", 6},        {"s4", 24},
        {"q8", 8},  {"prod:c2,c4", 8},            {"prod:c2,prod:c2,c2", 8},
        {"prod:prod:c2,c2,c3", 12},
    };
    for (const auto& [spec, order] : catalog) {
        const GroupTable g = make_group(spec);
        EXPECT_EQ(g.order(), order) << spec;
        EXPECT_TRUE(verify_group(g.op_matrix(), g.identity()).pass) << spec;
    }
}

TEST(MakeGroup, QuaternionRelations) {
    const GroupTable q = make_group("q8");
    const int one = 0, minus_one = 1, i = 2, j = 4, k = 6;
    EXPECT_EQ(q.op(i, i), minus_one);
    EXPECT_EQ(q.op(j, j), minus_one);
    EXPECT_EQ(q.op(k, k), minus_one);
    EXPECT_EQ(q.op(i, j), k);
    EXPECT_EQ(q.op(j, i), k + 1);  // -k
    EXPECT_EQ(q.op(minus_one, minus_one), one);
    EXPECT_EQ(q.op(q.op(i, j), k), minus_one);  // ijk = -1
}

TEST(MakeGroup, DihedralRelations) {
    const GroupTable d = make_group("d4");
    const int r = 1, s = 4;  // rotation r^1, reflection s
    EXPECT_EQ(d.op(s, s), d.identity());
    // s r s = r^-1
    EXPECT_EQ(d.op(d.op(s, r), s), d.inverse(r));
}

TEST(MakeGroup, UnsupportedSpecsRejected) {
    for (const char* bad : {"", "x5", "c", "s5", "q4", "prod:c2", "prod:c2;c2", "c3x", "c-3"}) {
        EXPECT_THROW(make_group(bad), std::invalid_argument) << "'" << bad << "'";
    }
}

TEST(VerifyGroup, CatalogTablesPass) {
    const GroupTable g = make_group("c4");
    EXPECT_TRUE(verify_group(g.op_matrix(), 0).pass);
}

TEST(VerifyGroup, InRowSwapBreaksLatinInRowOne) {
    const GroupTable g = make_group("c4");
    std::vector<int> vals = g.op_matrix().values();
    std::swap(vals[1 * 4 + 1], vals[2 * 4 + 1]);  // column swap forces a row duplicate
    const CheckVerdict v = verify_group(Matrix(4, vals), 0);
    ASSERT_FALSE(v.pass);
    const auto& w = std::get<DuplicateWitness>(*v.witness);
    EXPECT_EQ(w.first.row, 1);
    EXPECT_EQ(w.second.row, 1);
}

TEST(VerifyGroup, SkewedCyclicFailsIdentityAxiom) {
    // op[i][j] = (i + 2j) mod 5 is Latin, and 0 is a right identity only.
    std::vector<int> vals(25);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) vals[i * 5 + j] = (i + 2 * j) % 5;
    const Matrix m(5, vals);
    EXPECT_TRUE(is_latin(m).pass);
    const CheckVerdict v = verify_group(m, 0);
    ASSERT_FALSE(v.pass);
    const auto& w = std::get<AxiomViolation>(*v.witness);
    EXPECT_EQ(w.axiom, "identity");
}

// Reduce a Latin square so row 0 and column 0 both read 0..n-1 (a loop table
// with identity 0); only the identity axiom is forced, associativity is not.
Matrix reduced(const Matrix& m) {
    const int n = m.n();
    std::vector<int> col_of(n), row_of(n);
    for (int j = 0; j < n; ++j) col_of[m.at(0, j)] = j;
    std::vector<std::vector<int>> rows(n);
    for (int r = 0; r < n; ++r) {
        std::vector<int> row(n);
        for (int j = 0; j < n; ++j) row[j] = m.at(r, col_of[j]);
        rows[row[0]] = row;
    }
    return Matrix::from_rows(rows);
}

TEST(VerifyGroup, AssociativityFailureNamed) {
    // Reduced random Latin squares of order 5 pass Latin and identity; all
    // but the cyclic table fail associativity.
    std::mt19937_64 rng(31);
    bool seen = false;
    for (int trial = 0; trial < 50 && !seen; ++trial) {
        const Matrix m = reduced(cayrec::testing::random_latin(5, rng));
        const CheckVerdict v = verify_group(m, 0);
        if (v.pass) continue;
        const auto& ax = std::get<AxiomViolation>(*v.witness);
        ASSERT_EQ(ax.axiom, "associativity");
        const auto& e = ax.elements;
        ASSERT_EQ(e.size(), 3u);
        EXPECT_NE(m.at(m.at(e[0], e[1]), e[2]), m.at(e[0], m.at(e[1], e[2])));
        seen = true;
    }
    EXPECT_TRUE(seen);
}

TEST(CayleyMatrixOf, IdentityEnumerationsGiveTheRawTable) {
    const GroupTable g = make_group("c4");
    const Enumeration e = Enumeration::identity(4);
    EXPECT_EQ(cayley_matrix_of(g, e, e),
              Matrix::from_rows({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}));
}

TEST(CayleyMatrixOf, RowEnumerationPermutesRows) {
    const GroupTable g = make_group("c4");
    const Enumeration e = Enumeration::identity(4);
    const Matrix standard = cayley_matrix_of(g, e, e);
    const Matrix permuted = cayley_matrix_of(g, Enumeration({0, 2, 1, 3}), e);
    EXPECT_EQ(permuted.row(1), standard.row(2));
    EXPECT_EQ(permuted.row(2), standard.row(1));
}

TEST(CayleyMatrixOf, ResultIsLatinAndSatisfiesTheCriterion) {
    std::mt19937_64 rng(77);
    for (const char* spec : {"c5", "s3", "prod:c2,c4"}) {
        const GroupTable g = make_group(spec);
        const Enumeration rows(cayrec::random_permutation(g.order(), rng));
        const Enumeration cols(cayrec::random_permutation(g.order(), rng));
        const Matrix m = cayley_matrix_of(g, rows, cols);
        EXPECT_TRUE(is_latin(m).pass) << spec;
        EXPECT_TRUE(check_quadrangle_criterion(m).pass) << spec;
        EXPECT_TRUE(is_cayley(m).pass) << spec;
    }
}

TEST(CayleyMatrixOf, QuadrangleIdentityHoldsExhaustively) {
    // value(r2,c2) = value(r2,c1) * value(r1,c1)^-1 * value(r1,c2)
    std::mt19937_64 rng(78);
    for (const char* spec : {"c6", "d4", "q8", "s3"}) {
        const GroupTable g = make_group(spec);
        const int n = g.order();
        const Enumeration rows(cayrec::random_permutation(n, rng));
        const Enumeration cols(cayrec::random_permutation(n, rng));
        const Matrix m = cayley_matrix_of(g, rows, cols);
        for (int r1 = 0; r1 < n; ++r1)
            for (int r2 = 0; r2 < n; ++r2) {
                if (r1 == r2) continue;
                for (int c1 = 0; c1 < n; ++c1)
                    for (int c2 = 0; c2 < n; ++c2) {
                        if (c1 == c2) continue;
                        const int lhs = m.at(r2, c2);
                        const int rhs =
                            g.op(g.op(m.at(r2, c1), g.inverse(m.at(r1, c1))), m.at(r1, c2));
                        ASSERT_EQ(lhs, rhs) << spec;
                    }
            }
    }
}

TEST(Enumeration, RejectsNonPermutations) {
    EXPECT_THROW(Enumeration({0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(Enumeration({0, 1, 3}), std::invalid_argument);
    const GroupTable g = make_group("c3");
    EXPECT_THROW(cayley_matrix_of(g, Enumeration::identity(4), Enumeration::identity(3)),
                 std::invalid_argument);
}

TEST(GroupTable, RejectsNonGroupTables) {
    // Latin but not associative for identity 0.
    std::vector<int> vals(25);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) vals[i * 5 + j] = (i + 2 * j) % 5;
    EXPECT_THROW(GroupTable("bogus", 5, vals, 0), std::invalid_argument);
}

TEST(GroupTable, ElementNamesDefaultToDecimal) {
    const GroupTable g = make_group("d4");
    EXPECT_EQ(g.element(0).display_name, "0");
    EXPECT_EQ(g.element(7).display_name, "7");
    EXPECT_EQ(g.element(3).index, 3);
}

}  // namespace
}  // namespace cayrec
