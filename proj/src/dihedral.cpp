#include "dsing/dihedral.hpp"

#include <numeric>

#include "dsing/oracle.hpp"

namespace dsing {

ExactMatrix BlockDecomposition::assemble() const {
  const auto k = static_cast<Eigen::Index>(n);
  ExactMatrix a(2 * k, 2 * k);
  const ExactMatrix mm = m(), nn = n_block();
  a.topLeftCorner(k, k) = mm;
  a.topRightCorner(k, k) = nn;
  a.bottomLeftCorner(k, k) = nn;
  a.bottomRightCorner(k, k) = mm;
  return a;
}

BlockDecomposition block_decompose(const CayleyGraph& graph) {
  const auto& set = graph.connecting_set();
  if (set.kind() != GroupKind::kDihedral) throw StructureError("block decomposition needs a dihedral graph");
  const Eigen::Index k = set.n();
  const ExactMatrix a = graph.adjacency().cast<BigInt>();

  const ExactMatrix m1 = a.topLeftCorner(k, k), n1 = a.topRightCorner(k, k);
  const ExactMatrix n2 = a.bottomLeftCorner(k, k), m2 = a.bottomRightCorner(k, k);

  if (!is_circulant(m1)) throw StructureError("rotation block M is not circulant");
  if (m1 != m1.transpose()) throw StructureError("rotation block M is not symmetric");
  if (!is_anticirculant(n1)) throw StructureError("rotation-reflection block N is not anti-circulant");
  if (n1 != n1.transpose()) throw StructureError("rotation-reflection block N is not symmetric");
  if (m2 != m1) throw StructureError("reflection-reflection block differs from M");
  if (n2 != n1) throw StructureError("reflection-rotation block differs from N");
  if (m1 * n1 != n1 * m1) throw StructureError("blocks do not commute: MN != NM");

  BlockDecomposition d;
  d.n = static_cast<std::size_t>(k);
  std::vector<BigInt> mrow(d.n), nrow(d.n);
  for (Eigen::Index j = 0; j < k; ++j) {
    mrow[static_cast<std::size_t>(j)] = m1(0, j);
    nrow[static_cast<std::size_t>(j)] = n1(0, j);
  }
  d.rotation_block = CirculantMatrix<BigInt>(std::move(mrow));
  d.reflection_block = AntiCirculantMatrix<BigInt>(std::move(nrow));
  return d;
}

namespace {

IntPolynomial pair_count(const std::vector<DihedralElement>& part, int n) {
  std::vector<BigInt> counts(static_cast<std::size_t>(n), BigInt(0));
  for (const auto& h1 : part)
    for (const auto& h2 : part) {
      const DihedralElement p = h2 * h1;
      // h2 h1 is a rotation whenever both factors lie in the same part
      counts[static_cast<std::size_t>(p.exponent())] += 1;
    }
  return IntPolynomial(std::move(counts));
}

}  // namespace

WalkPolynomials walk_polynomials(const ConnectingSet& set) {
  if (set.kind() != GroupKind::kDihedral) throw PreconditionError("walk polynomials need a dihedral connecting set");
  const int n = set.n();
  std::vector<DihedralElement> rot, ref;
  for (int k : set.rotations()) rot.push_back(DihedralElement::rotation(n, k));
  for (int j : set.reflections()) ref.push_back(DihedralElement::reflection(n, j));
  return {pair_count(rot, n), pair_count(ref, n)};
}

WalkPolynomials walk_polynomials_via_matrix(const BlockDecomposition& blocks) {
  const ExactMatrix m = blocks.m(), nb = blocks.n_block();
  return {associated_polynomial(ExactMatrix(m * m)), associated_polynomial(ExactMatrix(nb * nb))};
}

WalkPolynomials walk_polynomials_via_walks(const CayleyGraph& graph) {
  const auto& set = graph.connecting_set();
  if (set.kind() != GroupKind::kDihedral) throw PreconditionError("walk polynomials need a dihedral graph");
  const Eigen::Index n = set.n();
  const ExactMatrix a = graph.adjacency().cast<BigInt>();

  std::vector<Eigen::Index> rotations(static_cast<std::size_t>(n)), reflections(static_cast<std::size_t>(n));
  std::iota(rotations.begin(), rotations.end(), Eigen::Index{0});
  std::iota(reflections.begin(), reflections.end(), n);

  const Eigen::Index start = graph.index_of(DihedralElement::rotation(static_cast<int>(n), 1));
  std::vector<BigInt> u(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  for (Eigen::Index i = 1; i <= n; ++i) {
    const Eigen::Index target = graph.index_of(DihedralElement::rotation(static_cast<int>(n), i));
    u[static_cast<std::size_t>(i - 1)] = walk_count(a, start, target, 2, rotations);
    w[static_cast<std::size_t>(i - 1)] = walk_count(a, start, target, 2, reflections);
  }
  return {IntPolynomial(std::move(u)), IntPolynomial(std::move(w))};
}

DihedralVerdict dihedral_singularity(const ConnectingSet& set) {
  DihedralVerdict v;
  v.walks = walk_polynomials(set);
  v.block = circulant_singularity(v.walks.difference(), static_cast<std::size_t>(set.n()));
  return v;
}

std::pair<IntPolynomial, IntPolynomial> char_poly_factorization(const BlockDecomposition& blocks) {
  const ExactMatrix m = blocks.m(), nb = blocks.n_block();
  return {exact_char_poly(ExactMatrix(m + nb)), exact_char_poly(ExactMatrix(m - nb))};
}

bool determinant_identity_check(const BlockDecomposition& blocks, const ExactMatrix& adjacency) {
  const ExactMatrix m = blocks.m(), nb = blocks.n_block();
  const ExactMatrix diff = m * m - nb * nb;
  return exact_determinant(adjacency) == exact_determinant(diff);
}

bool balanced_neighbor_test(const ConnectingSet& set) {
  if (set.kind() != GroupKind::kDihedral) throw PreconditionError("balanced split needs a dihedral connecting set");
  return set.rotations().size() == set.reflections().size();
}

PrimeOrderResult prime_order_test(const ConnectingSet& set) {
  if (set.kind() != GroupKind::kDihedral) throw PreconditionError("prime-order test needs a dihedral connecting set");
  if (!is_prime(static_cast<unsigned>(set.n())))
    throw PreconditionError("prime-order test needs prime n, got " + std::to_string(set.n()));
  if (balanced_neighbor_test(set)) throw PreconditionError("prime-order test needs an unbalanced split |H'| != |H''|");

  const auto walks = walk_polynomials(set);
  const BigInt c = walks.psi_prime.coeff(0) - walks.psi_double_prime.coeff(0);
  PrimeOrderResult r;
  for (std::size_t i = 1; i < static_cast<std::size_t>(set.n()); ++i)
    if (walks.psi_prime.coeff(i) - walks.psi_double_prime.coeff(i) != c) return r;
  r.constant = c;
  // c = 0 is impossible here: the coefficient sums differ by |H'|^2 - |H''|^2 != 0
  r.singular = true;
  return r;
}

}  // namespace dsing
