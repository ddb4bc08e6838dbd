#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>

#include <Eigen/Eigenvalues>

#include "CLI11.hpp"
#include "dsing/census.hpp"
#include "dsing/dihedral.hpp"
#include "dsing/oracle.hpp"
#include "dsing/parallel.hpp"

namespace dsing::cli {
namespace {

struct Common {
  std::string kind;
  int n = 0;
  std::string set;
  bool json = false;
  bool allow_nongenerating = false;
};

void print_floats(std::ostream& os, std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  os << std::fixed << std::setprecision(6);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = std::abs(values[i]) < 1e-9 ? 0.0 : values[i];
    os << (i ? ", " : "") << v;
  }
  os << std::defaultfloat << "\n";
}

std::vector<double> symmetric_eigenvalues(const ExactMatrix& m) {
  const Eigen::MatrixXd d = m.unaryExpr([](const BigInt& x) { return x.convert_to<double>(); });
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d, Eigen::EigenvaluesOnly);
  return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

int cmd_check(const Common& c, bool oracle, std::ostream& out) {
  const GroupKind kind = parse_group_kind(c.kind);
  const ConnectingSet set = parse_connecting_set(c.set, c.n, kind, !c.allow_nongenerating);
  const SingularityReport report = check(set, oracle);
  if (c.json) {
    out << nlohmann::json(report).dump(2) << "\n";
  } else {
    write_text(out, report);
  }
  return report.verdict == Verdict::kSingular ? kExitSingular : kExitNonsingular;
}

int census_bound(GroupKind kind, int max_n_flag) {
  if (max_n_flag > 0) return max_n_flag;
  if (const char* env = std::getenv("DS_MAX_N"); env && *env) return std::stoi(env);
  return default_census_bound(kind);
}

int cmd_census(const Common& c, const std::string& out_path, const std::string& format, int max_n, unsigned jobs,
               bool oracle, std::ostream& out, std::ostream& err) {
  const GroupKind kind = parse_group_kind(c.kind);
  if (c.n < 3) throw PreconditionError("n must be >= 3");
  const int bound = census_bound(kind, max_n);
  if (c.n > bound) {
    err << "refusing census of " << to_string(kind) << " n = " << c.n << ": it would enumerate 2^"
        << class_count(c.n, kind) << " connecting sets, above the configured bound n <= " << bound
        << ". Raise the bound with --max-n or DS_MAX_N.\n";
    return kExitDataError;
  }

  const CensusSummary summary = census(c.n, kind, jobs);

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "cannot open " << out_path << " for writing\n";
      return kExitCannotCreate;
    }
  }
  std::ostream& table = out_path.empty() ? out : file;
  if (format == "json") {
    table << nlohmann::json(summary.rows).dump(2) << "\n";
  } else {
    write_csv_header(table);
    for (const auto& row : summary.rows) write_csv_row(table, row);
  }

  std::ostream& info = out_path.empty() ? err : out;
  info << "census " << to_string(kind) << " n = " << c.n << ": " << summary.total << " symmetric subsets, "
       << summary.singular << " singular\n";
  if (oracle) {
    const auto dets = parallel_map(summary.rows.size(), jobs, [&](std::size_t mask) {
      const CayleyGraph g = build_cayley_graph(subset_from_mask(c.n, kind, mask));
      return exact_determinant(ExactMatrix(g.adjacency().cast<BigInt>())) == 0;
    });
    std::size_t oracle_singular = 0, mismatches = 0;
    for (std::size_t i = 0; i < dets.size(); ++i) {
      oracle_singular += dets[i];
      mismatches += dets[i] != (summary.rows[i].verdict == Verdict::kSingular);
    }
    info << "oracle: " << oracle_singular << " singular by exact determinant, " << mismatches << " disagreements\n";
    if (mismatches) return kExitDisagreement;
  }
  return 0;
}

int cmd_verify(const std::string& kind_text, int min_n, int max_n, unsigned jobs, bool inject_fault,
               std::ostream& out) {
  const GroupKind kind = parse_group_kind(kind_text);
  const CyclotomicTest test = inject_fault ? CyclotomicTest(mutated_cyclotomic_test)
                                           : CyclotomicTest(circulant_singularity);
  const VerifySummary s = verify(kind, min_n, max_n, jobs, test);
  if (s.ok()) {
    out << "verify " << to_string(kind) << " n = " << min_n << ".." << max_n << ": all " << s.checked
        << " subsets agree (" << s.singular << " singular)\n";
    return 0;
  }
  const auto& cx = *s.first_failure;
  out << "verify " << to_string(kind) << " n = " << min_n << ".." << max_n << ": " << s.failures << " of "
      << s.checked << " subsets FAILED\n"
      << "first counterexample:\n"
      << "  n = " << cx.n << ", H = {" << cx.connecting_set << "}\n"
      << "  check:   " << cx.failed_check << "\n"
      << "  theorem: " << to_string(cx.theorem) << "\n"
      << "  oracle:  " << to_string(cx.oracle) << " (det = " << cx.determinant << ")\n";
  return kExitDisagreement;
}

int cmd_spectrum(const Common& c, std::ostream& out) {
  const GroupKind kind = parse_group_kind(c.kind);
  const ConnectingSet set = parse_connecting_set(c.set, c.n, kind, !c.allow_nongenerating);
  const CayleyGraph graph = build_cayley_graph(set);
  const ExactMatrix a = graph.adjacency().cast<BigInt>();

  if (kind == GroupKind::kCyclic) {
    const IntPolynomial charpoly = exact_char_poly(a);
    const auto psi = associated_polynomial(a);
    std::vector<double> eig;
    for (const auto& z : evaluate_at_unit_roots(psi, static_cast<std::size_t>(c.n))) eig.push_back(z.real());
    if (c.json) {
      out << nlohmann::json{{"groupKind", "cyclic"}, {"n", c.n}, {"connectingSet", set.text()},
                            {"charA", charpoly}, {"eigenvaluesAdvisory", eig}}
                 .dump(2)
          << "\n";
      return 0;
    }
    out << "char(A, x) = " << to_string(charpoly) << "\n";
    out << "eigenvalues (advisory, Psi at n-th roots of unity): ";
    print_floats(out, eig);
    return 0;
  }

  const BlockDecomposition blocks = block_decompose(graph);
  const ExactMatrix m = blocks.m(), nb = blocks.n_block();
  const auto [plus, minus] = char_poly_factorization(blocks);
  const IntPolynomial product = plus * minus;
  std::vector<double> eig_plus = symmetric_eigenvalues(m + nb), eig_minus = symmetric_eigenvalues(m - nb);
  if (c.json) {
    out << nlohmann::json{{"groupKind", "dihedral"}, {"n", c.n}, {"connectingSet", set.text()},
                          {"charMplusN", plus}, {"charMminusN", minus}, {"charA", product},
                          {"eigenvaluesMplusNAdvisory", eig_plus}, {"eigenvaluesMminusNAdvisory", eig_minus}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "char(M+N, x) = " << to_string(plus) << "\n";
  out << "char(M-N, x) = " << to_string(minus) << "\n";
  out << "char(A, x)   = " << to_string(product) << "\n";
  out << "eigenvalues of M+N (advisory): ";
  print_floats(out, eig_plus);
  out << "eigenvalues of M-N (advisory): ";
  print_floats(out, eig_minus);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Singularity of Cayley graphs on cyclic and dihedral groups", "dsing"};
  app.require_subcommand(1);

  Common common;
  bool oracle = false;
  std::string out_path, format = "csv";
  int max_n = 0, min_n = 3;
  unsigned jobs = default_jobs();
  bool inject_fault = false;

  auto add_group = [&](CLI::App* sub, bool with_set) {
    sub->add_option("kind", common.kind, "cyclic or dihedral")->required()->check(CLI::IsMember({"cyclic", "dihedral"}));
    sub->add_option("n", common.n, "group order parameter (n >= 3)")->required();
    if (with_set)
      sub->add_option("set", common.set,
                      "connecting set: cyclic \"k1,k2,...\", dihedral \"r:k1,...;f:j1,...\"")
          ->required();
  };

  auto* check_cmd = app.add_subcommand("check", "decide singularity of one Cayley graph");
  add_group(check_cmd, true);
  check_cmd->add_flag("--json", common.json, "emit the report as JSON");
  check_cmd->add_flag("--oracle", oracle, "cross-check against exact determinant and rank");
  check_cmd->add_flag("--allow-nongenerating", common.allow_nongenerating, "admit sets that do not generate G");

  auto* census_cmd = app.add_subcommand("census", "classify every symmetric identity-free subset");
  add_group(census_cmd, false);
  census_cmd->add_option("--out", out_path, "write the table here instead of stdout");
  census_cmd->add_option("--format", format, "table format")->check(CLI::IsMember({"csv", "json"}));
  census_cmd->add_option("--max-n", max_n, "override the census bound on n (also DS_MAX_N)");
  census_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  census_cmd->add_flag("--oracle", oracle, "confirm the singular count by exact determinants");

  std::string verify_kind;
  auto* verify_cmd = app.add_subcommand("verify", "sweep theorem-versus-oracle checks over all subsets");
  verify_cmd->add_option("kind", verify_kind, "cyclic or dihedral")->required()->check(CLI::IsMember({"cyclic", "dihedral"}));
  verify_cmd->add_option("limit", max_n, "largest n to sweep (same as --max-n)");
  verify_cmd->add_option("--max-n", max_n, "largest n to sweep");
  verify_cmd->add_option("--min-n", min_n, "smallest n to sweep")->check(CLI::Range(3, 1 << 20));
  verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--inject-fault", inject_fault, "use a deliberately broken criterion (harness self-test)");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "exact characteristic polynomials and advisory eigenvalues");
  add_group(spectrum_cmd, true);
  spectrum_cmd->add_flag("--json", common.json, "emit JSON");
  spectrum_cmd->add_flag("--allow-nongenerating", common.allow_nongenerating, "admit sets that do not generate G");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (check_cmd->parsed()) return cmd_check(common, oracle, out);
    if (census_cmd->parsed()) return cmd_census(common, out_path, format, max_n, jobs, oracle, out, err);
    if (verify_cmd->parsed()) {
      if (max_n == 0) max_n = verify_kind == "cyclic" ? 10 : 6;
      return cmd_verify(verify_kind, min_n, max_n, jobs, inject_fault, out);
    }
    if (spectrum_cmd->parsed()) return cmd_spectrum(common, out);
  } catch (const ConnectingSetError& e) {
    err << "invalid connecting set: " << e.what() << "\n";
    return kExitDataError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace dsing::cli
