#ifndef DSING_CENSUS_HPP
#define DSING_CENSUS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dsing/circulant.hpp"
#include "dsing/group.hpp"
#include "dsing/report.hpp"

namespace dsing {

/// Cay(C_n, H) is singular iff Phi_d | Psi_H for some d | n, where Psi_H is the
/// associated polynomial of the canonically ordered (circulant) adjacency.
CyclotomicCertificate cyclic_singularity(const CayleyGraph& graph);

/// Theorem-based verdict with its certificate; `with_oracle` adds the exact
/// determinant and nullities and the agreement flag.
SingularityReport check(const ConnectingSet& set, bool with_oracle);

// Subset universe. Every symmetric identity-free subset is a union of
// inverse-closed classes: {a^k, a^(n-k)} for k = 1..floor(n/2), then (dihedral)
// each reflection a^j b on its own, j = 0..n-1. Bit i of a mask selects class i,
// and enumeration runs over masks in ascending order.

std::size_t class_count(int n, GroupKind kind);
std::uint64_t subset_count(int n, GroupKind kind);

/// Builds the subset selected by `mask`, validated without the generation requirement.
ConnectingSet subset_from_mask(int n, GroupKind kind, std::uint64_t mask);
std::vector<ConnectingSet> enumerate_symmetric_subsets(int n, GroupKind kind);

CensusRow census_row(const ConnectingSet& set);

struct CensusSummary {
  std::vector<CensusRow> rows;
  std::size_t total = 0;
  std::size_t singular = 0;
};

/// Default census bound: cyclic n <= 24, dihedral n <= 10.
int default_census_bound(GroupKind kind);

CensusSummary census(int n, GroupKind kind, unsigned jobs);

/// Cyclotomic test used by `verify`; replaceable so the harness can be
/// checked against a deliberately broken criterion.
using CyclotomicTest = std::function<CyclotomicCertificate(const IntPolynomial&, std::size_t)>;

/// circulant_singularity with the d = n divisor never tried. Only for
/// exercising the verification harness.
CyclotomicCertificate mutated_cyclotomic_test(const IntPolynomial& psi, std::size_t n);

struct Counterexample {
  int n = 0;
  GroupKind kind = GroupKind::kCyclic;
  std::string connecting_set;
  std::string failed_check;
  Verdict theorem = Verdict::kNonsingular;
  Verdict oracle = Verdict::kNonsingular;
  BigInt determinant;
};

struct VerifySummary {
  std::size_t checked = 0;
  std::size_t singular = 0;
  std::size_t failures = 0;
  std::optional<Counterexample> first_failure;  // earliest in enumeration order

  bool ok() const { return failures == 0; }
};

/// Runs every theorem-versus-oracle check on each subset for n in [min_n, max_n].
/// Cyclic: verdict, nullity formula, circulant structure, translation
/// automorphisms. Dihedral: verdict, block laws, char-poly factorization,
/// determinant identity, three-way walk-polynomial agreement, balanced-split
/// corollary and the prime-order shortcut.
VerifySummary verify(GroupKind kind, int min_n, int max_n, unsigned jobs,
                     const CyclotomicTest& test = circulant_singularity);

/// Checks for a single subset; returns the name of the first failed check.
std::optional<Counterexample> verify_one(const ConnectingSet& set, const CyclotomicTest& test = circulant_singularity);

}  // namespace dsing

#endif  // DSING_CENSUS_HPP
