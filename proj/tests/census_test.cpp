#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "dsing/census.hpp"
#include "dsing/oracle.hpp"

using namespace dsing;

namespace {

// Every symmetric identity-free subset by brute force over all subsets of G \ {1}.
std::set<std::string> brute_force_subsets(int n, GroupKind kind) {
  std::vector<DihedralElement> nonidentity;
  for (int k = 1; k < n; ++k) nonidentity.push_back(DihedralElement::rotation(n, k));
  if (kind == GroupKind::kDihedral)
    for (int j = 0; j < n; ++j) nonidentity.push_back(DihedralElement::reflection(n, j));
  std::set<std::string> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nonidentity.size()); ++mask) {
    std::vector<DihedralElement> chosen;
    for (std::size_t i = 0; i < nonidentity.size(); ++i)
      if (mask >> i & 1) chosen.push_back(nonidentity[i]);
    const bool symmetric = std::ranges::all_of(
        chosen, [&](const DihedralElement& x) { return std::ranges::find(chosen, inverse(x)) != chosen.end(); });
    if (symmetric) out.insert(validate_connecting_set(chosen, n, kind, false).text());
  }
  return out;
}

std::size_t oracle_singular_count(const std::vector<ConnectingSet>& sets) {
  return static_cast<std::size_t>(std::ranges::count_if(sets, [](const ConnectingSet& s) {
    return exact_determinant(ExactMatrix(build_cayley_graph(s).adjacency().cast<BigInt>())) == 0;
  }));
}

}  // namespace

TEST(Enumeration, ClassCounts) {
  EXPECT_EQ(class_count(4, GroupKind::kCyclic), 2u);
  EXPECT_EQ(class_count(9, GroupKind::kCyclic), 4u);
  EXPECT_EQ(class_count(3, GroupKind::kDihedral), 4u);
  EXPECT_EQ(subset_count(6, GroupKind::kCyclic), 8u);
  EXPECT_EQ(subset_count(5, GroupKind::kDihedral), 128u);
  EXPECT_THROW(subset_count(80, GroupKind::kDihedral), PreconditionError);
}

TEST(Enumeration, MaskOrder) {
  std::vector<std::string> texts;
  for (const auto& s : enumerate_symmetric_subsets(4, GroupKind::kCyclic)) texts.push_back(s.text());
  EXPECT_EQ(texts, (std::vector<std::string>{"", "1,3", "2", "1,2,3"}));
  EXPECT_EQ(subset_from_mask(3, GroupKind::kDihedral, 0b0101).text(), "r:1,2;f:1");
  EXPECT_EQ(subset_from_mask(3, GroupKind::kDihedral, 0b1110).text(), "f:0,1,2");
}

TEST(Enumeration, MatchesBruteForce) {
  for (auto kind : {GroupKind::kCyclic, GroupKind::kDihedral})
    for (int n = 3; n <= (kind == GroupKind::kCyclic ? 12 : 6); ++n) {
      std::set<std::string> texts;
      const auto sets = enumerate_symmetric_subsets(n, kind);
      for (const auto& s : sets) texts.insert(s.text());
      ASSERT_EQ(texts.size(), sets.size()) << "duplicates at n=" << n;
      ASSERT_EQ(texts, brute_force_subsets(n, kind)) << to_string(kind) << " n=" << n;
    }
}

TEST(Census, CyclicCounts) {
  EXPECT_EQ(census(4, GroupKind::kCyclic, 1).singular, 2u);
  EXPECT_EQ(census(6, GroupKind::kCyclic, 1).singular, 4u);

  const auto nine = census(9, GroupKind::kCyclic, 2);
  EXPECT_EQ(nine.total, 16u);
  std::vector<std::string> singular;
  for (const auto& row : nine.rows)
    if (row.verdict == Verdict::kSingular) singular.push_back(row.connecting_set);
  EXPECT_EQ(singular, (std::vector<std::string>{"", "1,2,3,6,7,8", "1,2,4,5,7,8", "1,3,4,5,6,8", "2,3,4,5,6,7"}));
}

TEST(Census, CountsMatchOracle) {
  for (int n = 3; n <= 14; ++n) {
    const auto summary = census(n, GroupKind::kCyclic, 4);
    ASSERT_EQ(summary.singular, oracle_singular_count(enumerate_symmetric_subsets(n, GroupKind::kCyclic))) << n;
  }
  for (int n = 3; n <= 5; ++n) {
    const auto summary = census(n, GroupKind::kDihedral, 4);
    ASSERT_EQ(summary.singular, oracle_singular_count(enumerate_symmetric_subsets(n, GroupKind::kDihedral))) << n;
  }
}

TEST(Census, DeterministicAcrossJobCounts) {
  const auto one = census(6, GroupKind::kDihedral, 1);
  const auto many = census(6, GroupKind::kDihedral, 8);
  EXPECT_EQ(one.rows, many.rows);
  EXPECT_EQ(one.singular, many.singular);
}

TEST(Census, RowFields) {
  const auto row = census_row(parse_connecting_set("r:1,2;f:0,1", 3, GroupKind::kDihedral, true));
  EXPECT_EQ(row.edge_count, 12u);
  EXPECT_TRUE(row.is_generating);
  EXPECT_EQ(row.verdict, Verdict::kSingular);
  EXPECT_EQ(row.dividing, (std::vector<unsigned>{1, 3}));
}

TEST(CycleLaw, SingularExactlyWhenFourDividesN) {
  for (int n = 3; n <= 40; ++n) {
    const auto set = parse_connecting_set("1," + std::to_string(n - 1), n, GroupKind::kCyclic, true);
    const auto r = check(set, n <= 16);
    ASSERT_EQ(r.verdict == Verdict::kSingular, n % 4 == 0) << n;
    if (n % 4 == 0) {
      ASSERT_EQ(r.dividing, (std::vector<unsigned>{4}));
      ASSERT_EQ(r.predicted_nullity, 2u);
    }
    if (r.agreement) ASSERT_TRUE(*r.agreement);
  }
}

TEST(Check, OracleAgreement) {
  const auto r = check(parse_connecting_set("1,3", 4, GroupKind::kCyclic, true), true);
  EXPECT_EQ(r.oracle_determinant, BigInt(0));
  EXPECT_EQ(r.oracle_nullity, 2u);
  EXPECT_EQ(r.agreement, true);

  const auto d = check(parse_connecting_set("f:0,1,2", 3, GroupKind::kDihedral, true), true);
  EXPECT_EQ(d.verdict, Verdict::kSingular);
  EXPECT_EQ(d.oracle_nullity, 4u);  // K_{3,3}
  EXPECT_EQ(d.factor_nullity, 4u);
}

TEST(Verify, CyclicSweep) {
  const auto s = verify(GroupKind::kCyclic, 3, 10, 4);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.checked, 90u);
  EXPECT_EQ(s.singular, 32u);
}

TEST(Verify, DihedralSweep) {
  const auto s = verify(GroupKind::kDihedral, 3, 5, 4);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.checked, 16u + 64u + 128u);
}

TEST(Verify, MutatedTestIsCaught) {
  const auto s = verify(GroupKind::kCyclic, 3, 8, 2, mutated_cyclotomic_test);
  ASSERT_FALSE(s.ok());
  ASSERT_TRUE(s.first_failure);
  // the empty set is still called singular through d = 1, but the nullity sum comes up short
  EXPECT_EQ(s.first_failure->n, 3);
  EXPECT_EQ(s.first_failure->connecting_set, "");
  EXPECT_EQ(s.first_failure->theorem, Verdict::kSingular);
  EXPECT_EQ(s.first_failure->oracle, Verdict::kSingular);

  const auto c4 = verify_one(parse_connecting_set("1,3", 4, GroupKind::kCyclic, true), mutated_cyclotomic_test);
  ASSERT_TRUE(c4);
  EXPECT_EQ(c4->theorem, Verdict::kNonsingular);
  EXPECT_EQ(c4->oracle, Verdict::kSingular);
  EXPECT_EQ(c4->determinant, 0);

  EXPECT_TRUE(verify(GroupKind::kDihedral, 3, 4, 2, mutated_cyclotomic_test).failures > 0);
}

TEST(Verify, SingleSet) {
  const auto c4 = parse_connecting_set("1,3", 4, GroupKind::kCyclic, true);
  EXPECT_FALSE(verify_one(c4));
  EXPECT_TRUE(verify_one(c4, mutated_cyclotomic_test));
}
