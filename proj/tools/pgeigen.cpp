#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "pgeigen/json_io.hpp"
#include "pgeigen/qcomb.hpp"
#include "pgeigen/verify.hpp"

namespace {

using namespace pgeigen;

constexpr double kCrosscheckTol = 1e-9;

// "symbolic", "a/b", or a decimal string; nullopt means symbolic.
std::optional<Rat> parse_phi(const std::string& text) {
  if (text == "symbolic") return std::nullopt;
  try {
    Rat r;
    auto dot = text.find('.');
    if (dot != std::string::npos) {
      std::string head = text.substr(0, dot);
      std::string frac = text.substr(dot + 1);
      require(!frac.empty() && frac.find_first_not_of("0123456789") == std::string::npos,
              errc::invalid_parameter, "bad decimal");
      bool negative = !head.empty() && head[0] == '-';
      if (negative) head = head.substr(1);
      if (head.empty()) head = "0";
      Int den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      Int num = Int(head) * den + Int(frac);
      r = Rat(negative ? -num : num, den);
    } else {
      r = Rat(text);
    }
    require(r.get_den() != 0, errc::invalid_parameter, "zero denominator");
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    fail(errc::invalid_parameter, "cannot parse phi value '" + text + "'");
  }
}

struct OutStream {
  std::ofstream file;
  std::ostream* os = &std::cout;
  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    require(file.is_open(), errc::invalid_parameter, "cannot open output file " + path);
    os = &file;
  }
  std::ostream& get() { return *os; }
};

int run_qnum(long q, int n, const std::string& out_path) {
  prime_power(q);
  OutStream out;
  out.open(out_path);
  out.get() << "G_" << q << "(" << n << ") = " << galois(n, q).get_str() << "\n";
  for (int k = 0; k <= n; ++k) out.get() << (k ? " " : "") << qbinom(n, k, q).get_str();
  out.get() << "\n";
  return 0;
}

int run_enum(long q, int n, int k, bool has_k, const std::string& out_path) {
  const Field& f = Field::get_order(q);
  OutStream out;
  out.open(out_path);
  auto emit = [&](const Subspace& x) { out.get() << subspace_json(x).dump() << "\n"; };
  if (has_k)
    for (const auto& x : enumerate(f, n, k)) emit(x);
  else
    for (const auto& x : enumerate_all(f, n)) emit(x);
  return 0;
}

int run_matrix(long q, int n, const std::string& kind, const std::optional<Rat>& phi,
               const std::string& out_path) {
  const Field& f = Field::get_order(q);
  const Lattice& L = Lattice::get(f, n);
  OutStream out;
  out.open(out_path);
  nlohmann::ordered_json header{{"kind", kind},
                                {"q", q},
                                {"n", n},
                                {"size", L.size()},
                                {"phi", phi ? rat_string(*phi) : "symbolic"}};
  out.get() << header.dump() << "\n";
  for (std::size_t i = 0; i < L.size(); ++i) {
    for (std::size_t j = 0; j < L.size(); ++j) {
      PhiPoly entry = kind == "adjacency"
                          ? adjacency_entry(L.at(i), L.at(j))
                          : (i == j ? PhiPoly::from_rational(f.p(), q_power(q, -L.at(i).dim()))
                                    : PhiPoly(f.p()));
      if (entry.is_zero()) continue;
      nlohmann::ordered_json line{{"row", i}, {"col", j}};
      if (phi)
        line["value"] = rat_string(entry.eval_rational(*phi));
      else
        line["scalar"] = scalar_json(entry);
      out.get() << line.dump() << "\n";
    }
  }
  return 0;
}

int run_basis(long q, int n, const std::string& out_path) {
  const Field& f = Field::get_order(q);
  OutStream out;
  out.open(out_path);
  for (const auto& entry : build_basis(f, n))
    out.get() << basis_record_json(entry).dump() << "\n";
  return 0;
}

int emit_reports(const std::vector<SuiteReport>& reports, bool timings,
                 const std::string& out_path) {
  OutStream out;
  out.open(out_path);
  bool all_pass = true;
  for (const auto& r : reports) {
    out.get() << report_json(r, timings).dump() << "\n";
    if (!r.pass()) all_pass = false;
  }
  return all_pass ? 0 : 1;
}

int run_verify(long q, int n, const std::string& suite, const std::optional<Rat>& phi,
               const VerifyOptions& vopts, bool timings, const std::string& out_path) {
  const Field& f = Field::get_order(q);
  std::vector<SuiteReport> reports;
  auto want = [&](const std::string& name) { return suite == name || suite == "all"; };
  if (want("eigen")) reports.push_back(suite_eigen(f, n, vopts));
  if (want("orthogonality")) reports.push_back(suite_orthogonality(f, n, vopts));
  if (want("qpoly")) reports.push_back(suite_qpoly(f, n, vopts));
  if (want("structure") && (suite == "structure" || n >= 1))
    reports.push_back(suite_structure(f, n, vopts));
  if (suite == "crosscheck") {
    require(phi.has_value(), errc::invalid_parameter,
            "the crosscheck suite needs a rational --phi");
    reports.push_back(suite_crosscheck(f, n, *phi, kCrosscheckTol, vopts));
  }
  return emit_reports(reports, timings, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact eigenbasis construction and verification for the weighted "
               "adjacency matrix of the subspace lattice B_q(n)"};
  app.require_subcommand(1);

  long q = 2;
  int n = 0;
  std::string out_path;
  std::string phi_text = "symbolic";
  std::string suite = "all";
  std::string kind = "adjacency";
  int k = 0;
  unsigned long long seed = 0;
  long pair_budget = 0;
  int workers = 1;
  bool timings = false;

  auto add_qn = [&](CLI::App* cmd) {
    cmd->add_option("--q", q, "field order (prime power)")->required();
    cmd->add_option("--n", n, "ambient dimension")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  CLI::App* qnum = app.add_subcommand("qnum", "Galois number and Gaussian binomial row");
  add_qn(qnum);

  CLI::App* enum_cmd = app.add_subcommand("enum", "enumerate subspaces in canonical order");
  add_qn(enum_cmd);
  CLI::Option* k_opt = enum_cmd->add_option("--k", k, "restrict to one dimension");

  CLI::App* matrix = app.add_subcommand("matrix", "stream nonzero matrix entries");
  add_qn(matrix);
  matrix->add_option("--kind", kind, "adjacency or dual")
      ->check(CLI::IsMember({"adjacency", "dual"}));
  matrix->add_option("--phi", phi_text, "symbolic (default), a/b, or a decimal");

  CLI::App* basis = app.add_subcommand("basis", "stream the canonical eigenbasis");
  add_qn(basis);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_qn(verify);
  verify->add_option("--suite", suite,
                     "eigen, orthogonality, qpoly, structure, crosscheck, or all")
      ->check(CLI::IsMember({"eigen", "orthogonality", "qpoly", "structure", "crosscheck", "all"}));
  verify->add_option("--phi", phi_text, "rational phi for the crosscheck suite");
  verify->add_option("--seed", seed, "seed for sampled pair checks");
  verify->add_option("--pair-budget", pair_budget, "cap on pair checks (0 = all pairs)");
  verify->add_option("--workers", workers, "worker threads (affects wall time only)")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--timings", timings, "report real elapsed seconds (not byte-stable)");

  CLI::App* crosscheck = app.add_subcommand("crosscheck", "numeric eigendecomposition check");
  add_qn(crosscheck);
  crosscheck->add_option("--phi", phi_text, "rational phi > 0")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (qnum->parsed()) return run_qnum(q, n, out_path);
    if (enum_cmd->parsed()) return run_enum(q, n, k, k_opt->count() > 0, out_path);
    if (matrix->parsed()) return run_matrix(q, n, kind, parse_phi(phi_text), out_path);
    if (basis->parsed()) return run_basis(q, n, out_path);
    if (verify->parsed()) {
      VerifyOptions vopts;
      vopts.pair_budget = pair_budget;
      vopts.seed = seed;
      vopts.workers = workers;
      return run_verify(q, n, suite, parse_phi(phi_text), vopts, timings, out_path);
    }
    if (crosscheck->parsed()) {
      auto phi = parse_phi(phi_text);
      require(phi.has_value(), errc::invalid_parameter, "crosscheck needs a rational phi");
      const Field& f = Field::get_order(q);
      return emit_reports({suite_crosscheck(f, n, *phi, kCrosscheckTol, {})}, timings, out_path);
    }
  } catch (const pgeigen::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
