#ifndef DSING_GROUP_HPP
#define DSING_GROUP_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsing/errors.hpp"
#include "dsing/scalar.hpp"

namespace dsing {

enum class GroupKind { kCyclic, kDihedral };

const char* to_string(GroupKind kind);
GroupKind parse_group_kind(std::string_view text);

/// Element a^i b^e of D_n (or of C_n when e = 0), kept in normal form with
/// 0 <= i < n. The group parameter n travels with the element.
class DihedralElement {
 public:
  static DihedralElement identity(int n) { return {n, 0, false}; }
  static DihedralElement rotation(int n, long long k) { return {n, k, false}; }
  static DihedralElement reflection(int n, long long j) { return {n, j, true}; }

  int order_parameter() const { return n_; }
  int exponent() const { return exponent_; }
  bool reflected() const { return reflected_; }
  bool is_identity() const { return exponent_ == 0 && !reflected_; }

  friend auto operator<=>(const DihedralElement&, const DihedralElement&) = default;

 private:
  DihedralElement(int n, long long exponent, bool reflected);

  int n_;
  int exponent_;
  bool reflected_;
};

/// a^i b^e . a^j b^f = a^(i + (-1)^e j) b^(e + f)
DihedralElement multiply(const DihedralElement& x, const DihedralElement& y);
DihedralElement inverse(const DihedralElement& x);

inline DihedralElement operator*(const DihedralElement& x, const DihedralElement& y) { return multiply(x, y); }

/// "1", "a", "a^3", "b", "ab", "a^2b"
std::string to_string(const DihedralElement& x);

/// Symmetric, identity-free subset H of C_n or D_n, split into its rotation
/// part H' = {a^k} and reflection part H'' = {a^j b}. Both parts are sorted.
class ConnectingSet {
 public:
  int n() const { return n_; }
  GroupKind kind() const { return kind_; }
  const std::vector<int>& rotations() const { return rotations_; }
  const std::vector<int>& reflections() const { return reflections_; }
  bool require_generating() const { return require_generating_; }
  bool is_generating() const { return generating_; }

  std::size_t size() const { return rotations_.size() + reflections_.size(); }
  bool contains(const DihedralElement& x) const;
  std::vector<DihedralElement> elements() const;

  /// Canonical text form accepted by parse_connecting_set:
  /// cyclic "1,3"; dihedral "r:1,2;f:0,1". The empty set renders as "".
  std::string text() const;

  friend bool operator==(const ConnectingSet&, const ConnectingSet&) = default;

 private:
  friend ConnectingSet validate_connecting_set(std::span<const DihedralElement>, int, GroupKind, bool);

  int n_ = 0;
  GroupKind kind_ = GroupKind::kCyclic;
  std::vector<int> rotations_;
  std::vector<int> reflections_;
  bool require_generating_ = true;
  bool generating_ = false;
};

/// Checks conditions (i) H = H^{-1}, (ii) 1 not in H and, when requested,
/// (iii) <H> = G. Duplicates in `raw` are ignored. Throws ConnectingSetError
/// naming the first violated condition.
ConnectingSet validate_connecting_set(std::span<const DihedralElement> raw, int n, GroupKind kind,
                                      bool require_generating);

/// Whether `elements` generate C_n (rotations only) or D_n; breadth-first closure.
bool generates(std::span<const DihedralElement> elements, int n, GroupKind kind);

/// Parses the set grammar: cyclic "k1,k2,..."; dihedral "r:k1,...;f:j1,..."
/// with either part omissible. Whitespace is ignored. Only syntax and range
/// are checked here; the group laws are left to validate_connecting_set.
std::vector<DihedralElement> parse_set_text(std::string_view text, int n, GroupKind kind);

ConnectingSet parse_connecting_set(std::string_view text, int n, GroupKind kind, bool require_generating);

/// Cayley graph on the canonical vertex order: a, a^2, ..., a^n for C_n and
/// a, ..., a^n, ab, ..., a^n b for D_n. Vertex index p holds a^(p+1) (or
/// a^(p-n+1) b), so the identity a^n sits last among the rotations.
class CayleyGraph {
 public:
  explicit CayleyGraph(ConnectingSet set);

  const ConnectingSet& connecting_set() const { return set_; }
  const AdjacencyMatrix& adjacency() const { return adjacency_; }
  Eigen::Index vertex_count() const { return adjacency_.rows(); }

  DihedralElement vertex(Eigen::Index index) const;
  Eigen::Index index_of(const DihedralElement& x) const;

  /// One-based label matching the canonical enumeration: "a^1", "a^4", "a^2 b".
  std::string vertex_label(Eigen::Index index) const;

 private:
  ConnectingSet set_;
  AdjacencyMatrix adjacency_;
};

CayleyGraph build_cayley_graph(const ConnectingSet& set);

/// Whether v -> vg preserves adjacency. Always true for a Cayley graph.
bool right_translation_is_automorphism(const CayleyGraph& graph, const DihedralElement& g);

}  // namespace dsing

#endif  // DSING_GROUP_HPP
