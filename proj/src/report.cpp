#include "dsing/report.hpp"

#include <limits>

namespace dsing {

const char* to_string(Verdict v) { return v == Verdict::kSingular ? "singular" : "nonsingular"; }

Verdict parse_verdict(std::string_view text) {
  if (text == "singular") return Verdict::kSingular;
  if (text == "nonsingular") return Verdict::kNonsingular;
  throw Error("unknown verdict '" + std::string(text) + "'");
}

namespace {

nlohmann::json bigint_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  throw Error("expected an integer or a decimal string, got " + j.dump());
}

template <typename T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& value) {
  if (value) j[key] = *value;
}

template <typename T>
void get_optional(const nlohmann::json& j, const char* key, std::optional<T>& value) {
  if (auto it = j.find(key); it != j.end() && !it->is_null()) value = it->get<T>();
  else value.reset();
}

std::string join_divisors(const std::vector<unsigned>& ds, char sep) {
  std::string out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(ds[i]);
  }
  return out;
}

}  // namespace

void to_json(nlohmann::json& j, const IntPolynomial& p) {
  j = nlohmann::json::array();
  for (const auto& c : p.coefficients()) j.push_back(bigint_to_json(c));
}

void from_json(const nlohmann::json& j, IntPolynomial& p) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j) coeffs.push_back(bigint_from_json(c));
  p = IntPolynomial(std::move(coeffs));
}

void to_json(nlohmann::json& j, const SingularityReport& r) {
  j = nlohmann::json{
      {"groupKind", to_string(r.kind)},
      {"n", r.n},
      {"connectingSet", r.connecting_set},
      {"isGenerating", r.is_generating},
      {"verdict", to_string(r.verdict)},
      {"certificate", {{"dividingD", r.dividing}, {"testedPolynomial", r.tested}}},
  };
  auto& cert = j["certificate"];
  put_optional(cert, "psiPrime", r.psi_prime);
  put_optional(cert, "psiDoublePrime", r.psi_double_prime);
  put_optional(cert, "predictedNullity", r.predicted_nullity);
  put_optional(j, "blockNullity", r.block_nullity);
  if (r.oracle_determinant) j["oracleDeterminant"] = bigint_to_json(*r.oracle_determinant);
  put_optional(j, "oracleNullity", r.oracle_nullity);
  put_optional(j, "factorNullity", r.factor_nullity);
  put_optional(j, "agreement", r.agreement);
}

void from_json(const nlohmann::json& j, SingularityReport& r) {
  r.kind = parse_group_kind(j.at("groupKind").get<std::string>());
  r.n = j.at("n").get<int>();
  r.connecting_set = j.at("connectingSet").get<std::string>();
  r.is_generating = j.at("isGenerating").get<bool>();
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  const auto& cert = j.at("certificate");
  r.dividing = cert.at("dividingD").get<std::vector<unsigned>>();
  r.tested = cert.at("testedPolynomial").get<IntPolynomial>();
  get_optional(cert, "psiPrime", r.psi_prime);
  get_optional(cert, "psiDoublePrime", r.psi_double_prime);
  get_optional(cert, "predictedNullity", r.predicted_nullity);
  get_optional(j, "blockNullity", r.block_nullity);
  if (auto it = j.find("oracleDeterminant"); it != j.end()) r.oracle_determinant = bigint_from_json(*it);
  else r.oracle_determinant.reset();
  get_optional(j, "oracleNullity", r.oracle_nullity);
  get_optional(j, "factorNullity", r.factor_nullity);
  get_optional(j, "agreement", r.agreement);
}

void to_json(nlohmann::json& j, const CensusRow& r) {
  j = nlohmann::json{{"n", r.n},
                     {"groupKind", to_string(r.kind)},
                     {"set", r.connecting_set},
                     {"isGenerating", r.is_generating},
                     {"edgeCount", r.edge_count},
                     {"verdict", to_string(r.verdict)},
                     {"dividingD", r.dividing}};
}

void from_json(const nlohmann::json& j, CensusRow& r) {
  r.n = j.at("n").get<int>();
  r.kind = parse_group_kind(j.at("groupKind").get<std::string>());
  r.connecting_set = j.at("set").get<std::string>();
  r.is_generating = j.at("isGenerating").get<bool>();
  r.edge_count = j.at("edgeCount").get<std::size_t>();
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.dividing = j.at("dividingD").get<std::vector<unsigned>>();
}

void write_text(std::ostream& os, const SingularityReport& r) {
  const bool dihedral = r.kind == GroupKind::kDihedral;
  os << "group:          " << (dihedral ? "D_" : "C_") << r.n << " (" << (dihedral ? 2 * r.n : r.n)
     << " vertices)\n";
  os << "connecting set: {" << r.connecting_set << "}" << (r.is_generating ? "" : " (not generating)") << "\n";
  os << "verdict:        " << to_string(r.verdict) << "\n";
  if (dihedral) {
    if (r.psi_prime) os << "Psi'(x):        " << to_string(*r.psi_prime) << "\n";
    if (r.psi_double_prime) os << "Psi''(x):       " << to_string(*r.psi_double_prime) << "\n";
    os << "Psi' - Psi'':   " << to_string(r.tested) << "\n";
  } else {
    os << "Psi(x):         " << to_string(r.tested) << "\n";
  }
  os << "dividing Phi_d: " << (r.dividing.empty() ? "none" : "d = " + join_divisors(r.dividing, ',')) << "\n";
  if (r.predicted_nullity) os << "nullity:        " << *r.predicted_nullity << "\n";
  if (r.block_nullity) os << "block nullity:  " << *r.block_nullity << " (of M^2 - N^2)\n";
  if (r.oracle_determinant) os << "oracle det(A):  " << *r.oracle_determinant << "\n";
  if (r.oracle_nullity) os << "oracle nullity: " << *r.oracle_nullity << "\n";
  if (r.factor_nullity) os << "nullity(M+N) + nullity(M-N): " << *r.factor_nullity << "\n";
  if (r.agreement) os << "oracle agrees:  " << (*r.agreement ? "yes" : "NO") << "\n";
}

void write_csv_header(std::ostream& os) { os << "n,groupKind,set,isGenerating,edgeCount,verdict,dividingD\n"; }

void write_csv_row(std::ostream& os, const CensusRow& row) {
  // set text and divisor list contain commas, so both are quoted
  os << row.n << ',' << to_string(row.kind) << ",\"" << row.connecting_set << "\","
     << (row.is_generating ? "true" : "false") << ',' << row.edge_count << ',' << to_string(row.verdict) << ",\""
     << join_divisors(row.dividing, ' ') << "\"\n";
}

}  // namespace dsing
