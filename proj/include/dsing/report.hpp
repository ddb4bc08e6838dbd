#ifndef DSING_REPORT_HPP
#define DSING_REPORT_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dsing/group.hpp"
#include "dsing/polynomial.hpp"

namespace dsing {

enum class Verdict { kNonsingular, kSingular };

const char* to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

struct SingularityReport {
  GroupKind kind = GroupKind::kCyclic;
  int n = 0;
  std::string connecting_set;
  bool is_generating = false;
  Verdict verdict = Verdict::kNonsingular;

  // certificate
  std::vector<unsigned> dividing;  // d | n with Phi_d dividing `tested`
  IntPolynomial tested;            // Psi (cyclic) or Psi' - Psi'' (dihedral)
  std::optional<IntPolynomial> psi_prime;
  std::optional<IntPolynomial> psi_double_prime;
  std::optional<std::size_t> predicted_nullity;  // cyclic: graph nullity from the cyclotomic sum
  std::optional<std::size_t> block_nullity;      // dihedral: nullity of M^2 - N^2, not of A

  // oracle cross-check, present only when requested
  std::optional<BigInt> oracle_determinant;
  std::optional<std::size_t> oracle_nullity;
  std::optional<std::size_t> factor_nullity;  // dihedral: nullity(M + N) + nullity(M - N)
  std::optional<bool> agreement;

  friend bool operator==(const SingularityReport&, const SingularityReport&) = default;
};

struct CensusRow {
  int n = 0;
  GroupKind kind = GroupKind::kCyclic;
  std::string connecting_set;
  bool is_generating = false;
  std::size_t edge_count = 0;
  Verdict verdict = Verdict::kNonsingular;
  std::vector<unsigned> dividing;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

// Polynomials travel as coefficient arrays, index = exponent. Coefficients
// that do not fit in 64 bits are written as decimal strings.
void to_json(nlohmann::json& j, const IntPolynomial& p);
void from_json(const nlohmann::json& j, IntPolynomial& p);
void to_json(nlohmann::json& j, const SingularityReport& r);
void from_json(const nlohmann::json& j, SingularityReport& r);
void to_json(nlohmann::json& j, const CensusRow& r);
void from_json(const nlohmann::json& j, CensusRow& r);

/// Multi-line human-readable rendering of a report.
void write_text(std::ostream& os, const SingularityReport& r);

/// Header: n,groupKind,set,isGenerating,edgeCount,verdict,dividingD
void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const CensusRow& row);

}  // namespace dsing

#endif  // DSING_REPORT_HPP
