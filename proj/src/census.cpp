#include "dsing/census.hpp"

#include "dsing/dihedral.hpp"
#include "dsing/oracle.hpp"
#include "dsing/parallel.hpp"

namespace dsing {

CyclotomicCertificate cyclic_singularity(const CayleyGraph& graph) {
  if (graph.connecting_set().kind() != GroupKind::kCyclic)
    throw PreconditionError("cyclic_singularity needs a cyclic graph");
  const ExactMatrix a = graph.adjacency().cast<BigInt>();
  return circulant_singularity(associated_polynomial(a), static_cast<std::size_t>(graph.connecting_set().n()));
}

SingularityReport check(const ConnectingSet& set, bool with_oracle) {
  const CayleyGraph graph = build_cayley_graph(set);
  SingularityReport r;
  r.kind = set.kind();
  r.n = set.n();
  r.connecting_set = set.text();
  r.is_generating = set.is_generating();

  if (set.kind() == GroupKind::kCyclic) {
    const auto cert = cyclic_singularity(graph);
    r.verdict = cert.singular() ? Verdict::kSingular : Verdict::kNonsingular;
    r.dividing = cert.dividing;
    r.tested = cert.tested;
    r.predicted_nullity = cert.nullity;
  } else {
    const auto v = dihedral_singularity(set);
    r.verdict = v.singular() ? Verdict::kSingular : Verdict::kNonsingular;
    r.dividing = v.block.dividing;
    r.tested = v.block.tested;
    r.psi_prime = v.walks.psi_prime;
    r.psi_double_prime = v.walks.psi_double_prime;
    r.block_nullity = v.block.nullity;
  }

  if (with_oracle) {
    const ExactMatrix a = graph.adjacency().cast<BigInt>();
    r.oracle_determinant = exact_determinant(a);
    r.oracle_nullity = static_cast<std::size_t>(nullity(a));
    if (set.kind() == GroupKind::kDihedral) {
      const auto blocks = block_decompose(graph);
      const ExactMatrix m = blocks.m(), nb = blocks.n_block();
      r.factor_nullity = static_cast<std::size_t>(nullity(ExactMatrix(m + nb)) + nullity(ExactMatrix(m - nb)));
    }
    r.agreement = (r.verdict == Verdict::kSingular) == (*r.oracle_determinant == 0);
  }
  return r;
}

std::size_t class_count(int n, GroupKind kind) {
  const auto rot = static_cast<std::size_t>(n / 2);
  return kind == GroupKind::kCyclic ? rot : rot + static_cast<std::size_t>(n);
}

std::uint64_t subset_count(int n, GroupKind kind) {
  const std::size_t classes = class_count(n, kind);
  if (classes >= 63) throw PreconditionError("subset universe too large to enumerate");
  return std::uint64_t{1} << classes;
}

ConnectingSet subset_from_mask(int n, GroupKind kind, std::uint64_t mask) {
  if (mask >= subset_count(n, kind)) throw PreconditionError("subset mask out of range");
  const int rot_classes = n / 2;
  std::vector<DihedralElement> raw;
  for (int k = 1; k <= rot_classes; ++k) {
    if (!(mask >> (k - 1) & 1u)) continue;
    raw.push_back(DihedralElement::rotation(n, k));
    raw.push_back(DihedralElement::rotation(n, n - k));
  }
  if (kind == GroupKind::kDihedral)
    for (int j = 0; j < n; ++j)
      if (mask >> (rot_classes + j) & 1u) raw.push_back(DihedralElement::reflection(n, j));
  return validate_connecting_set(raw, n, kind, false);
}

std::vector<ConnectingSet> enumerate_symmetric_subsets(int n, GroupKind kind) {
  const std::uint64_t count = subset_count(n, kind);
  std::vector<ConnectingSet> out;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(subset_from_mask(n, kind, mask));
  return out;
}

CensusRow census_row(const ConnectingSet& set) {
  CensusRow row;
  row.n = set.n();
  row.kind = set.kind();
  row.connecting_set = set.text();
  row.is_generating = set.is_generating();
  const std::size_t vertices = static_cast<std::size_t>(set.n()) * (set.kind() == GroupKind::kCyclic ? 1 : 2);
  row.edge_count = vertices * set.size() / 2;

  const CyclotomicCertificate cert = set.kind() == GroupKind::kCyclic
                                         ? cyclic_singularity(build_cayley_graph(set))
                                         : dihedral_singularity(set).block;
  row.verdict = cert.singular() ? Verdict::kSingular : Verdict::kNonsingular;
  row.dividing = cert.dividing;
  return row;
}

int default_census_bound(GroupKind kind) { return kind == GroupKind::kCyclic ? 24 : 10; }

CensusSummary census(int n, GroupKind kind, unsigned jobs) {
  const std::uint64_t count = subset_count(n, kind);
  CensusSummary s;
  s.rows = parallel_map(static_cast<std::size_t>(count), jobs,
                        [&](std::size_t mask) { return census_row(subset_from_mask(n, kind, mask)); });
  s.total = s.rows.size();
  for (const auto& row : s.rows)
    if (row.verdict == Verdict::kSingular) ++s.singular;
  return s;
}

CyclotomicCertificate mutated_cyclotomic_test(const IntPolynomial& psi, std::size_t n) {
  CyclotomicCertificate cert = circulant_singularity(psi, n);
  if (!cert.dividing.empty() && cert.dividing.back() == n) {
    cert.nullity -= euler_totient(static_cast<unsigned>(n));
    cert.dividing.pop_back();
  }
  return cert;
}

namespace {

std::optional<Counterexample> verify_case(const ConnectingSet& set, const CyclotomicTest& test,
                                          bool& oracle_singular) {
  const int n = set.n();
  const CayleyGraph graph = build_cayley_graph(set);
  const ExactMatrix a = graph.adjacency().cast<BigInt>();
  const BigInt det = exact_determinant(a);
  oracle_singular = det == 0;

  Counterexample cx;
  cx.n = n;
  cx.kind = set.kind();
  cx.connecting_set = set.text();
  cx.oracle = oracle_singular ? Verdict::kSingular : Verdict::kNonsingular;
  cx.determinant = det;
  auto fail = [&](std::string what) {
    cx.failed_check = std::move(what);
    return std::optional<Counterexample>(cx);
  };

  const auto a_elem = DihedralElement::rotation(n, 1);
  if (!right_translation_is_automorphism(graph, a_elem)) return fail("translation by a is not an automorphism");

  if (set.kind() == GroupKind::kCyclic) {
    const CyclotomicCertificate cert = test(associated_polynomial(a), static_cast<std::size_t>(n));
    cx.theorem = cert.singular() ? Verdict::kSingular : Verdict::kNonsingular;
    if (cert.singular() != oracle_singular) return fail("cyclotomic verdict differs from determinant");
    if (!is_circulant(a)) return fail("adjacency is not circulant");
    if (static_cast<Eigen::Index>(cert.nullity) != nullity(a)) return fail("cyclotomic nullity differs from rank");
    return std::nullopt;
  }

  const WalkPolynomials walks = walk_polynomials(set);
  const CyclotomicCertificate cert = test(walks.difference(), static_cast<std::size_t>(n));
  cx.theorem = cert.singular() ? Verdict::kSingular : Verdict::kNonsingular;
  if (cert.singular() != oracle_singular) return fail("cyclotomic verdict differs from determinant");

  if (!right_translation_is_automorphism(graph, DihedralElement::reflection(n, 0)))
    return fail("translation by b is not an automorphism");

  BlockDecomposition blocks;
  try {
    blocks = block_decompose(graph);
  } catch (const StructureError& e) {
    return fail(std::string("block structure: ") + e.what());
  }

  if (walk_polynomials_via_matrix(blocks) != walks) return fail("pair counts differ from M^2 / N^2 first rows");
  if (walk_polynomials_via_walks(graph) != walks) return fail("pair counts differ from restricted walk counts");

  const auto [plus, minus] = char_poly_factorization(blocks);
  if (plus * minus != exact_char_poly(a)) return fail("char(A) != char(M+N) char(M-N)");
  if (!determinant_identity_check(blocks, a)) return fail("det(A) != det(M^2 - N^2)");

  if (balanced_neighbor_test(set) && !oracle_singular) return fail("balanced split but nonsingular");
  if (is_prime(static_cast<unsigned>(n)) && !balanced_neighbor_test(set) &&
      prime_order_test(set).singular != oracle_singular)
    return fail("prime-order shortcut differs from determinant");
  return std::nullopt;
}

}  // namespace

std::optional<Counterexample> verify_one(const ConnectingSet& set, const CyclotomicTest& test) {
  bool singular = false;
  return verify_case(set, test, singular);
}

VerifySummary verify(GroupKind kind, int min_n, int max_n, unsigned jobs, const CyclotomicTest& test) {
  if (min_n < 3) throw PreconditionError("verify: n must start at 3 or above");
  VerifySummary summary;
  for (int n = min_n; n <= max_n; ++n) {
    const std::uint64_t count = subset_count(n, kind);
    struct Outcome {
      bool singular = false;
      std::optional<Counterexample> failure;
    };
    const auto outcomes = parallel_map(static_cast<std::size_t>(count), jobs, [&](std::size_t mask) {
      const ConnectingSet set = subset_from_mask(n, kind, mask);
      Outcome o;
      o.failure = verify_case(set, test, o.singular);
      return o;
    });
    for (const auto& o : outcomes) {
      ++summary.checked;
      if (o.singular) ++summary.singular;
      if (o.failure) {
        ++summary.failures;
        if (!summary.first_failure) summary.first_failure = o.failure;
      }
    }
  }
  return summary;
}

}  // namespace dsing
