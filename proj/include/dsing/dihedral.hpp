#ifndef DSING_DIHEDRAL_HPP
#define DSING_DIHEDRAL_HPP

#include <optional>
#include <utility>

#include "dsing/circulant.hpp"
#include "dsing/group.hpp"
#include "dsing/polynomial.hpp"

namespace dsing {

/// A = [[M, N], [N, M]] for a dihedral Cayley graph in canonical order.
/// M (rotation-rotation block) is symmetric circulant; N (rotation-reflection
/// block) is anti-circulant with N(i, j) = [a^(i+j) b in H] on one-based indices.
struct BlockDecomposition {
  std::size_t n = 0;
  CirculantMatrix<BigInt> rotation_block;        // M
  AntiCirculantMatrix<BigInt> reflection_block;  // N

  ExactMatrix m() const { return expand(rotation_block); }
  ExactMatrix n_block() const { return expand(reflection_block); }
  ExactMatrix assemble() const;
};

/// Extracts M and N and checks every block law: M symmetric circulant, N
/// anti-circulant (hence symmetric), bottom-left = N, bottom-right = M and
/// MN = NM. Throws StructureError naming the failed clause.
BlockDecomposition block_decompose(const CayleyGraph& graph);

/// Psi'(x) = u_1 + u_2 x + ... + u_n x^(n-1), and Psi''(x) likewise with w_i,
/// where u_i (w_i) counts length-2 walks a -> a^i through a rotation
/// (reflection) vertex.
struct WalkPolynomials {
  IntPolynomial psi_prime;
  IntPolynomial psi_double_prime;

  IntPolynomial difference() const { return psi_prime - psi_double_prime; }
  friend bool operator==(const WalkPolynomials&, const WalkPolynomials&) = default;
};

/// Pair counting: u_i = #{(h1, h2) in H' x H' : h2 h1 = a^(i-1)}, w_i the same over H''.
WalkPolynomials walk_polynomials(const ConnectingSet& set);

/// Associated polynomials of M^2 and N^2.
WalkPolynomials walk_polynomials_via_matrix(const BlockDecomposition& blocks);

/// Restricted walk counting on the assembled adjacency matrix.
WalkPolynomials walk_polynomials_via_walks(const CayleyGraph& graph);

struct DihedralVerdict {
  WalkPolynomials walks;
  /// Cyclotomic test applied to Psi' - Psi''. Its nullity is that of M^2 - N^2
  /// (the block nullity), not the nullity of the graph.
  CyclotomicCertificate block;

  bool singular() const { return block.singular(); }
};

/// Cay(D_n, H) is singular iff Phi_d | Psi' - Psi'' for some d | n.
DihedralVerdict dihedral_singularity(const ConnectingSet& set);

/// (char(M + N), char(M - N)); their product is char(A).
std::pair<IntPolynomial, IntPolynomial> char_poly_factorization(const BlockDecomposition& blocks);

/// det(A) == det(M^2 - N^2). Holds for the canonical vertex order only.
bool determinant_identity_check(const BlockDecomposition& blocks, const ExactMatrix& adjacency);

/// |H'| == |H''|. When true the graph is singular.
bool balanced_neighbor_test(const ConnectingSet& set);

/// Prime-order shortcut for an unbalanced split: the only candidate divisor
/// is Phi_n = 1 + x + ... + x^(n-1), so the graph is singular iff u_i - w_i
/// is the same constant c for every i.
struct PrimeOrderResult {
  bool singular = false;
  std::optional<BigInt> constant;  // c when u - w is constant

  /// The narrower rule that only admits c = +1 or c = -1.
  bool unit_constant() const { return constant && (*constant == 1 || *constant == -1); }
};

/// Throws PreconditionError unless n is prime and |H'| != |H''|.
PrimeOrderResult prime_order_test(const ConnectingSet& set);

}  // namespace dsing

#endif  // DSING_DIHEDRAL_HPP
