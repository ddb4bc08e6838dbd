#include "dsing/group.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <set>
#include <sstream>

namespace dsing {

const char* to_string(SetCondition c) {
  switch (c) {
    case SetCondition::kSymmetric: return "not-symmetric";
    case SetCondition::kIdentityFree: return "contains-identity";
    case SetCondition::kGenerating: return "not-generating";
    case SetCondition::kMalformed: return "malformed";
  }
  return "unknown";
}

ConnectingSetError::ConnectingSetError(SetCondition condition, const std::string& detail)
    : Error(std::string(to_string(condition)) + ": " + detail), condition_(condition) {}

const char* to_string(GroupKind kind) { return kind == GroupKind::kCyclic ? "cyclic" : "dihedral"; }

GroupKind parse_group_kind(std::string_view text) {
  if (text == "cyclic" || text == "C") return GroupKind::kCyclic;
  if (text == "dihedral" || text == "D") return GroupKind::kDihedral;
  throw PreconditionError("unknown group kind '" + std::string(text) + "' (expected cyclic or dihedral)");
}

DihedralElement::DihedralElement(int n, long long exponent, bool reflected) : n_(n), reflected_(reflected) {
  if (n < 1) throw PreconditionError("group order parameter must be positive");
  long long r = exponent % n;
  if (r < 0) r += n;
  exponent_ = static_cast<int>(r);
}

DihedralElement multiply(const DihedralElement& x, const DihedralElement& y) {
  if (x.order_parameter() != y.order_parameter())
    throw OrderMismatch("cannot multiply elements of order parameters " + std::to_string(x.order_parameter()) +
                        " and " + std::to_string(y.order_parameter()));
  const int n = x.order_parameter();
  // b a^j = a^{-j} b
  const long long exponent = x.reflected() ? x.exponent() - y.exponent() : x.exponent() + y.exponent();
  return x.reflected() != y.reflected() ? DihedralElement::reflection(n, exponent)
                                        : DihedralElement::rotation(n, exponent);
}

DihedralElement inverse(const DihedralElement& x) {
  if (x.reflected()) return x;
  return DihedralElement::rotation(x.order_parameter(), -static_cast<long long>(x.exponent()));
}

std::string to_string(const DihedralElement& x) {
  std::string s;
  if (x.exponent() == 1) s = "a";
  else if (x.exponent() > 1) s = "a^" + std::to_string(x.exponent());
  if (x.reflected()) s += "b";
  return s.empty() ? "1" : s;
}

bool ConnectingSet::contains(const DihedralElement& x) const {
  if (x.order_parameter() != n_) return false;
  const auto& part = x.reflected() ? reflections_ : rotations_;
  return std::binary_search(part.begin(), part.end(), x.exponent());
}

std::vector<DihedralElement> ConnectingSet::elements() const {
  std::vector<DihedralElement> out;
  out.reserve(size());
  for (int k : rotations_) out.push_back(DihedralElement::rotation(n_, k));
  for (int j : reflections_) out.push_back(DihedralElement::reflection(n_, j));
  return out;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

std::string ConnectingSet::text() const {
  if (kind_ == GroupKind::kCyclic) return join(rotations_);
  std::string out;
  if (!rotations_.empty()) out += "r:" + join(rotations_);
  if (!reflections_.empty()) out += (out.empty() ? "" : ";") + std::string("f:") + join(reflections_);
  return out;
}

bool generates(std::span<const DihedralElement> elements, int n, GroupKind kind) {
  const std::size_t order = kind == GroupKind::kCyclic ? static_cast<std::size_t>(n) : 2 * static_cast<std::size_t>(n);
  std::set<DihedralElement> seen{DihedralElement::identity(n)};
  std::queue<DihedralElement> frontier;
  frontier.push(DihedralElement::identity(n));
  while (!frontier.empty()) {
    const DihedralElement g = frontier.front();
    frontier.pop();
    for (const auto& h : elements) {
      const DihedralElement next = h * g;
      if (seen.insert(next).second) frontier.push(next);
    }
  }
  return seen.size() == order;
}

ConnectingSet validate_connecting_set(std::span<const DihedralElement> raw, int n, GroupKind kind,
                                      bool require_generating) {
  if (n < 3) throw PreconditionError("group order parameter n must be >= 3, got " + std::to_string(n));

  std::set<DihedralElement> unique;
  for (const auto& x : raw) {
    if (x.order_parameter() != n)
      throw ConnectingSetError(SetCondition::kMalformed,
                               "element " + to_string(x) + " belongs to a group with n = " +
                                   std::to_string(x.order_parameter()));
    if (kind == GroupKind::kCyclic && x.reflected())
      throw ConnectingSetError(SetCondition::kMalformed, "reflection " + to_string(x) + " is not in C_n");
    unique.insert(x);
  }

  for (const auto& x : unique)
    if (x.is_identity()) throw ConnectingSetError(SetCondition::kIdentityFree, "the identity is in H");
  for (const auto& x : unique)
    if (!unique.contains(inverse(x)))
      throw ConnectingSetError(SetCondition::kSymmetric,
                               to_string(x) + " is in H but its inverse " + to_string(inverse(x)) + " is not");

  ConnectingSet set;
  set.n_ = n;
  set.kind_ = kind;
  set.require_generating_ = require_generating;
  for (const auto& x : unique) (x.reflected() ? set.reflections_ : set.rotations_).push_back(x.exponent());

  const std::vector<DihedralElement> elems(unique.begin(), unique.end());
  set.generating_ = generates(elems, n, kind);
  if (require_generating && !set.generating_)
    throw ConnectingSetError(SetCondition::kGenerating,
                             "H does not generate " + std::string(kind == GroupKind::kCyclic ? "C_" : "D_") +
                                 std::to_string(n));
  return set;
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::vector<int> parse_list(std::string_view list, int lo, int hi, const char* what) {
  std::vector<int> out;
  if (list.empty()) return out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    const std::string_view token = list.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw ConnectingSetError(SetCondition::kMalformed, "cannot parse " + std::string(what) + " exponent '" +
                                                             std::string(token) + "'");
    if (value < lo || value > hi)
      throw ConnectingSetError(SetCondition::kMalformed, std::string(what) + " exponent " + std::to_string(value) +
                                                             " outside [" + std::to_string(lo) + ", " +
                                                             std::to_string(hi) + "]");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<DihedralElement> parse_set_text(std::string_view text, int n, GroupKind kind) {
  if (n < 3) throw PreconditionError("group order parameter n must be >= 3, got " + std::to_string(n));
  const std::string s = strip_spaces(text);
  std::vector<DihedralElement> out;

  // Exponent 0 is accepted syntactically so the identity is reported by
  // validation under its own condition.
  if (kind == GroupKind::kCyclic) {
    std::string_view body = s;
    if (body.starts_with("r:")) body.remove_prefix(2);
    if (body.find(':') != std::string_view::npos || body.find(';') != std::string_view::npos)
      throw ConnectingSetError(SetCondition::kMalformed, "cyclic sets are plain exponent lists, got '" + s + "'");
    for (int k : parse_list(body, 0, n - 1, "rotation")) out.push_back(DihedralElement::rotation(n, k));
    return out;
  }

  bool seen_r = false, seen_f = false;
  std::string_view rest = s;
  while (!rest.empty()) {
    const std::size_t semi = std::min(rest.find(';'), rest.size());
    std::string_view part = rest.substr(0, semi);
    rest = semi < rest.size() ? rest.substr(semi + 1) : std::string_view{};
    if (part.empty()) continue;
    if (part.starts_with("r:") && !seen_r) {
      seen_r = true;
      for (int k : parse_list(part.substr(2), 0, n - 1, "rotation")) out.push_back(DihedralElement::rotation(n, k));
    } else if (part.starts_with("f:") && !seen_f) {
      seen_f = true;
      for (int j : parse_list(part.substr(2), 0, n - 1, "reflection"))
        out.push_back(DihedralElement::reflection(n, j));
    } else {
      throw ConnectingSetError(SetCondition::kMalformed,
                               "expected 'r:<list>' or 'f:<list>' (each at most once), got '" + std::string(part) +
                                   "'");
    }
  }
  return out;
}

ConnectingSet parse_connecting_set(std::string_view text, int n, GroupKind kind, bool require_generating) {
  const auto raw = parse_set_text(text, n, kind);
  return validate_connecting_set(raw, n, kind, require_generating);
}

CayleyGraph::CayleyGraph(ConnectingSet set) : set_(std::move(set)) {
  const Eigen::Index count = set_.kind() == GroupKind::kCyclic ? set_.n() : 2 * set_.n();
  adjacency_ = AdjacencyMatrix::Zero(count, count);
  for (Eigen::Index u = 0; u < count; ++u) {
    const DihedralElement u_inv = inverse(vertex(u));
    for (Eigen::Index v = 0; v < count; ++v)
      if (set_.contains(vertex(v) * u_inv)) adjacency_(u, v) = 1;
  }
}

DihedralElement CayleyGraph::vertex(Eigen::Index index) const {
  const int n = set_.n();
  if (index < n) return DihedralElement::rotation(n, index + 1);
  return DihedralElement::reflection(n, index - n + 1);
}

Eigen::Index CayleyGraph::index_of(const DihedralElement& x) const {
  const int n = set_.n();
  const Eigen::Index base = (x.exponent() + n - 1) % n;
  return x.reflected() ? n + base : base;
}

std::string CayleyGraph::vertex_label(Eigen::Index index) const {
  const int n = set_.n();
  const Eigen::Index power = index < n ? index + 1 : index - n + 1;
  return "a^" + std::to_string(power) + (index < n ? "" : " b");
}

CayleyGraph build_cayley_graph(const ConnectingSet& set) { return CayleyGraph(set); }

bool right_translation_is_automorphism(const CayleyGraph& graph, const DihedralElement& g) {
  const auto& a = graph.adjacency();
  const Eigen::Index count = graph.vertex_count();
  if (g.order_parameter() != graph.connecting_set().n())
    throw OrderMismatch("translation element from a different group");
  if (graph.connecting_set().kind() == GroupKind::kCyclic && g.reflected())
    throw PreconditionError("reflections are not elements of C_n");
  std::vector<Eigen::Index> image(static_cast<std::size_t>(count));
  for (Eigen::Index v = 0; v < count; ++v) image[static_cast<std::size_t>(v)] = graph.index_of(graph.vertex(v) * g);
  for (Eigen::Index u = 0; u < count; ++u)
    for (Eigen::Index v = 0; v < count; ++v)
      if (a(u, v) != a(image[static_cast<std::size_t>(u)], image[static_cast<std::size_t>(v)])) return false;
  return true;
}

}  // namespace dsing
