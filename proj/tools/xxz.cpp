#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "xxz/asmnum/asm_numbers.hpp"
#include "xxz/conj/conjectures.hpp"
#include "xxz/conj/suites.hpp"
#include "xxz/ed/ed.hpp"
#include "xxz/errors.hpp"
#include "xxz/io/json.hpp"
#include "xxz/numeric/bethe.hpp"
#include "xxz/symfunc/symfunc.hpp"

using namespace xxz;
using io::ordered_json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kNumeric = 3 };

struct Options {
  std::string format = "json";
  std::string boundary;
  std::string kind;
  int n = -1;
  int max_n = 5;
  int L = -1;
  int sector = -1;
  long precision = BigFloat::kDefaultPrecision;
  std::string convention = "falling";
  std::uint32_t seed = 1;
  std::string partition;
  std::string evalues;
  bool components = false;
};

void emit(const Options& o, const ordered_json& j) { std::cout << (o.format == "pretty" ? j.dump(2) : j.dump()) << '\n'; }

int emit_reports(const Options& o, const std::vector<VerificationReport>& reports) {
  if (o.format == "csv") {
    std::cout << io::csv_header() << '\n';
    for (const auto& r : reports) std::cout << io::to_csv(r) << '\n';
  } else {
    for (const auto& r : reports) emit(o, io::to_json(r));
  }
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.equal; }) ? kOk : kFailed;
}

void need_n(const Options& o) {
  if (o.n < 0) throw CLI::ValidationError("--n", "required for this command");
}

exact::BinomialConvention parse_convention(const std::string& s) {
  if (s == "falling") return exact::BinomialConvention::kFallingFactorial;
  return exact::BinomialConvention::kTruncating;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

VerificationReport suite_report(const suites::SuiteResult& s) {
  VerificationReport r;
  r.conjecture = s.name;
  r.n = static_cast<int>(s.checks);
  r.lhs = BigRat(static_cast<long>(s.failures.size()));
  r.rhs = BigRat(0);
  r.equal = s.ok();
  for (std::size_t i = 0; i < std::min<std::size_t>(s.failures.size(), 10); ++i) r.details.emplace_back(s.failures[i], BigRat(1));
  return r;
}

std::vector<VerificationReport> run_verify(const Options& o) {
  const auto conv = parse_convention(o.convention);
  std::vector<VerificationReport> out;
  auto one = [&](const std::string& what, int n) {
    if (what == "conj") {
      out.push_back(conj::verify_periodic_product(n));
    } else if (what == "conj1") {
      out.push_back(conj::verify_twisted_product(n));
    } else if (what == "conj2") {
      out.push_back(conj::verify_reflecting_product(n, o.precision));
    } else if (what == "sums") {
      for (auto& r : conj::verify_component_sums(n, o.precision)) out.push_back(std::move(r));
    } else if (what == "recursion") {
      out.push_back(conj::verify_recursion(n));
    } else if (what == "hyp1") {
      out.push_back(conj::verify_hyp(qfunc::HypIdentity::kHyp1, n, conv));
    } else if (what == "hyp2") {
      out.push_back(conj::verify_hyp(qfunc::HypIdentity::kHyp2, n, conv));
    }
  };
  if (o.kind == "identities") {
    out.push_back(suite_report(suites::symfunc_cross_identities(o.seed)));
    out.push_back(suite_report(suites::lambda_det_suite(o.seed)));
  } else if (o.kind == "all") {
    const int k = o.max_n;
    for (int n = 1; n <= std::min(k, 8); ++n) one("conj", n);
    for (int n = 1; n <= std::min(k, 7); ++n) one("conj1", n);
    for (int n = 1; n <= std::min(k, 5); ++n) one("conj2", n);
    for (int n = 1; n <= std::min(k, 7); ++n) one("sums", n);
    for (int n = 1; n <= k; ++n) one("recursion", n);
    for (int n = 0; n <= k; ++n) one("hyp1", n);
    for (int n = 0; n <= k; ++n) one("hyp2", n);
    out.push_back(suite_report(suites::symfunc_cross_identities(o.seed)));
    out.push_back(suite_report(suites::lambda_det_suite(o.seed)));
  } else {
    need_n(o);
    one(o.kind, o.n);
  }
  return out;
}

int run_qpoly(const Options& o) {
  need_n(o);
  const QPolynomial qp = qfunc::elem_values(parse_boundary(o.boundary), o.n);
  ordered_json e = ordered_json::array();
  for (const auto& x : qp.evalues) e.push_back(io::to_json(x));
  emit(o, {{"e", e}});
  return kOk;
}

int run_asm(const Options& o) {
  need_n(o);
  BigInt v;
  if (o.kind == "count") v = asmnum::asm_count(o.n);
  else if (o.kind == "v") v = asmnum::asm_v(o.n);
  else if (o.kind == "n8") v = asmnum::n8(o.n);
  else v = asmnum::asm_ht(o.n);
  if (o.format == "json" || o.format == "pretty") {
    emit(o, {{"kind", o.kind}, {"n", o.n}, {"value", exact::to_string(v)}});
  } else {
    std::cout << exact::to_string(v) << '\n';
  }
  return kOk;
}

int run_roots(const Options& o) {
  need_n(o);
  const Boundary b = parse_boundary(o.boundary);
  RootSet rs;
  if (o.L >= 0) {
    if (b != Boundary::kReflecting || o.L / 2 != o.n) throw CLI::ValidationError("--L", "only for reflecting chains with n = floor(L/2)");
    rs = numeric::solve_open_chain(o.L, o.precision);
  } else {
    rs = numeric::solve_roots(qfunc::elem_values(b, o.n), o.precision);
  }
  ordered_json j = io::to_json(rs);
  j["energy"] = io::to_json(numeric::energy(rs));
  emit(o, j);
  return kOk;
}

int run_diag(const Options& o) {
  if (o.L < 1) throw CLI::ValidationError("--L", "required");
  const Boundary b = parse_boundary(o.boundary);
  const int sector = o.sector >= 0 ? o.sector : ed::groundstate_sector(o.L);
  const ed::SpinBasis basis(o.L, sector);
  const auto g = ed::groundstate(ed::build_hamiltonian(basis, b));
  const auto obs = ed::rs_observables(g.vector);
  auto cplx = [](std::complex<double> z) { return ordered_json{{"re", z.real()}, {"im", z.imag()}}; };
  ordered_json j{{"L", o.L},
                 {"boundary", std::string(to_string(b))},
                 {"sector", sector},
                 {"dimension", basis.dimension()},
                 {"energy", cplx(g.energy)},
                 {"ratio", obs.ratio},
                 {"sum", cplx(obs.sum)},
                 {"sum_sq", cplx(obs.sum_sq)}};
  if (o.components) {
    ordered_json c = ordered_json::array();
    for (std::size_t i = 0; i < basis.dimension(); ++i)
      c.push_back({{"positions", basis.positions(i)}, {"value", cplx(g.vector[static_cast<Eigen::Index>(i)])}});
    j["components"] = c;
  }
  emit(o, j);
  return kOk;
}

int run_schur(const Options& o) {
  std::vector<int> parts;
  for (const auto& s : split_list(o.partition)) parts.push_back(std::stoi(s));
  const Partition p(parts);
  std::vector<BigRat> e{BigRat(1)};
  if (!o.evalues.empty()) {
    for (const auto& s : split_list(o.evalues)) e.push_back(exact::parse_rat(s));
  } else if (!o.boundary.empty() && o.n >= 0) {
    e = qfunc::elem_values(parse_boundary(o.boundary), o.n).evalues;
  } else {
    throw CLI::ValidationError("--evalues", "give e_1,...,e_m or --boundary with --n");
  }
  const SymTable<BigRat> t(SymKind::kElementary, e.size() - 1, e);
  emit(o, {{"partition", p.to_string()}, {"value", exact::to_string(symfunc::schur_nk(p, t))}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric checks for the XXZ chain at Delta = -1/2"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "pretty", "csv"}));

  auto boundary_opt = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--boundary", o.boundary, "periodic | twisted | reflecting (open)")
                    ->check(CLI::IsMember({"periodic", "twisted", "reflecting", "open"}));
    if (required) opt->required();
  };
  auto precision_opt = [&](CLI::App* c) {
    c->add_option("--precision", o.precision, "Working precision in bits")->envname("XXZ_PRECISION")->check(CLI::Range(64L, 1L << 20));
  };

  auto* qpoly = app.add_subcommand("qpoly", "Elementary symmetric values of the groundstate Q-function");
  boundary_opt(qpoly, true);
  qpoly->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);

  auto* asmc = app.add_subcommand("asm", "ASM counts");
  asmc->add_option("kind", o.kind)->required()->check(CLI::IsMember({"count", "v", "n8", "ht"}));
  asmc->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Run verifications; exit 0 iff all pass");
  verify->add_option("what", o.kind)
      ->required()
      ->check(CLI::IsMember({"conj", "conj1", "conj2", "sums", "recursion", "hyp1", "hyp2", "identities", "all"}));
  verify->add_option("--n", o.n)->check(CLI::NonNegativeNumber);
  verify->add_option("--max-n", o.max_n)->check(CLI::Range(1, 20));
  verify->add_option("--convention", o.convention, "Binomial convention for hyp1/hyp2")
      ->check(CLI::IsMember({"falling", "truncating"}));
  verify->add_option("--seed", o.seed, "Seed for the randomized suites");
  precision_opt(verify);

  auto* roots = app.add_subcommand("roots", "Bethe roots at a given precision");
  boundary_opt(roots, true);
  roots->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  roots->add_option("--L", o.L, "Chain length (reflecting chains of odd length)");
  precision_opt(roots);

  auto* diag = app.add_subcommand("diag", "Exact diagonalization groundstate");
  diag->add_option("--L", o.L)->required()->check(CLI::Range(1, ed::kMaxSites));
  boundary_opt(diag, true);
  diag->add_option("--sector", o.sector, "Number of down spins (default floor(L/2))");
  diag->add_flag("--components", o.components, "Print the groundstate components");

  auto* schur = app.add_subcommand("schur", "Schur function from elementary symmetric values");
  schur->add_option("--partition", o.partition)->required();
  schur->add_option("--evalues", o.evalues, "e_1,...,e_m as rationals");
  boundary_opt(schur, false);
  schur->add_option("--n", o.n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*qpoly) return run_qpoly(o);
    if (*asmc) return run_asm(o);
    if (*verify) return emit_reports(o, run_verify(o));
    if (*roots) return run_roots(o);
    if (*diag) return run_diag(o);
    if (*schur) return run_schur(o);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n' << app.help();
    return kUsage;
  } catch (const NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what();
    if (!e.diagnostics().empty()) std::cerr << " (" << e.diagnostics() << ")";
    std::cerr << '\n';
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
