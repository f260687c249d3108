// Command-line front end: parse polynomial files, wrap them as black boxes,
// run the interpolation drivers, and emit benchmark CSV.
//
// Exit codes: 0 success, 1 usage/parse/input errors, 2 interpolation FAILURE.

#include <spi/benchrun.hpp>
#include <spi/domain.hpp>
#include <spi/errors.hpp>
#include <spi/kronecker.hpp>
#include <spi/multivariate.hpp>
#include <spi/poly.hpp>
#include <spi/poly_io.hpp>
#include <spi/primes.hpp>
#include <spi/univariate.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFailure = 2;

spi::Integer parse_bound(const std::string& text, const std::string& name) {
  try {
    spi::Integer v(text);
    if (v < 1) throw spi::InvalidArgument(name + " must be a positive integer");
    return v;
  } catch (const std::invalid_argument&) {
    throw spi::InvalidArgument(name + ": not an integer: '" + text + "'");
  }
}

void check_coefficients(const spi::MultiPoly& poly, const spi::CoefficientDomain& domain) {
  for (const auto& t : poly.terms()) {
    if (!spi::in_domain(t.coeff, domain))
      throw spi::InvalidArgument("input coefficient " + t.coeff.get_str() +
                                 " outside |c| <= C, denominator <= H");
  }
}

void check_degrees(const spi::MultiPoly& poly, std::int64_t D, std::int64_t T) {
  if (static_cast<std::int64_t>(poly.term_count()) > T)
    throw spi::InvalidArgument("input has more than T terms");
  for (const auto& t : poly.terms()) {
    std::int64_t total = 0;
    for (auto e : t.exponents) {
      if (e > D) throw spi::InvalidArgument("input exponent exceeds D");
      total += e;
    }
    if (total > D) throw spi::InvalidArgument("input total degree exceeds D");
  }
}

std::vector<spi::Integer> parse_qs(const std::string& text, int nvars) {
  if (text.empty()) return spi::default_diversification_primes(nvars);
  std::vector<spi::Integer> qs;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) qs.push_back(parse_bound(tok, "q"));
  if (static_cast<int>(qs.size()) != nvars)
    throw spi::InvalidArgument("--qs needs exactly one prime per variable");
  return qs;
}

struct UniArgs {
  std::string input;
  std::string C, H;
  std::int64_t T = 0;
  bool has_T = false;
};

int run_interp_uni(const UniArgs& args) {
  spi::Integer C = parse_bound(args.C, "--C");
  spi::Integer H = parse_bound(args.H, "--H");
  spi::MultiPoly parsed = spi::load_poly_file(args.input);
  if (parsed.nvars() != 1)
    throw spi::InvalidArgument("interp uni expects a 'vars 1' file");
  check_coefficients(parsed, spi::make_rational_domain(C, H));

  spi::SparsePoly poly = spi::to_univariate(parsed);
  spi::BlackBox bb = spi::wrap_blackbox(poly);
  std::optional<std::int64_t> term_bound;
  if (args.has_T) term_bound = args.T;

  auto result = spi::upoly_si_rat(bb, C, H, term_bound);
  if (!result) {
    std::cout << "FAILURE\n";
    return kExitFailure;
  }
  spi::print_terms(std::cout, *result);
  return kExitOk;
}

struct MultiArgs {
  std::string input;
  std::string C, H;
  std::int64_t D = 1, T = 1;
  std::string mode = "det";
  std::uint64_t seed = 0;
  std::string qs;
};

int run_interp_multi(const MultiArgs& args) {
  spi::Integer C = parse_bound(args.C, "--C");
  spi::Integer H = parse_bound(args.H, "--H");
  spi::MultiPoly poly = spi::load_poly_file(args.input);
  check_coefficients(poly, spi::make_rational_domain(C, H));
  check_degrees(poly, args.D, args.T);
  auto qs = parse_qs(args.qs, poly.nvars());

  spi::BlackBox bb = spi::wrap_blackbox(poly);
  if (args.mode == "det") {
    spi::MultiPoly result =
        (H == 1) ? spi::mpoly_si_mk_int(bb, poly.nvars(), args.D, args.T, C, qs)
                 : spi::mpoly_si_mk(bb, poly.nvars(), args.D, args.T, C, H, qs);
    spi::print_terms(std::cout, result);
    return kExitOk;
  }
  if (args.mode == "prob") {
    auto result = spi::pro_mpoly_si_mk(bb, poly.nvars(), std::max<std::int64_t>(args.D, 2),
                                       args.T, C, H, qs, args.seed);
    if (!result) {
      std::cout << "FAILURE\n";
      return kExitFailure;
    }
    spi::print_terms(std::cout, *result);
    return kExitOk;
  }
  throw spi::InvalidArgument("--mode must be det or prob");
}

struct BenchArgs {
  std::string vary;
  std::string values;
  std::int64_t trials = 3;
  std::uint64_t seed = 0;
  std::string out;
  std::int64_t T = 50, D = 1000, C = 1000000, H = 100, n = 1;
};

int run_bench_cmd(const BenchArgs& args) {
  spi::BenchConfig cfg;
  cfg.vary = args.vary;
  std::string tok;
  std::istringstream in(args.values);
  while (std::getline(in, tok, ','))
    cfg.values.push_back(std::stoll(tok));
  cfg.trials = args.trials;
  cfg.seed = args.seed;
  cfg.T = args.T;
  cfg.D = args.D;
  cfg.C = args.C;
  cfg.H = args.H;
  cfg.n = args.n;

  auto records = spi::run_bench(cfg);
  std::ofstream out(args.out, std::ios::binary);  // LF endings, no BOM
  if (!out) throw spi::InvalidArgument("cannot write '" + args.out + "'");
  spi::write_bench_csv(out, records);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse polynomial interpolation from single-point probes"};
  app.require_subcommand(1);

  auto* interp = app.add_subcommand("interp", "Recover a polynomial from a black box");
  interp->require_subcommand(1);

  UniArgs uni;
  auto* uni_cmd = interp->add_subcommand("uni", "Univariate recovery from one probe");
  uni_cmd->add_option("--input", uni.input, "Polynomial file (vars 1)")->required();
  uni_cmd->add_option("--C", uni.C, "Coefficient magnitude bound")->required();
  uni_cmd->add_option("--H", uni.H, "Coefficient denominator bound")->required();
  auto* t_opt = uni_cmd->add_option("--T", uni.T, "Term bound (enables FAILURE semantics)");

  MultiArgs multi;
  auto* multi_cmd = interp->add_subcommand("multi", "Multivariate recovery");
  multi_cmd->add_option("--input", multi.input, "Polynomial file")->required();
  multi_cmd->add_option("--D", multi.D, "Degree bound")->required();
  multi_cmd->add_option("--T", multi.T, "Term bound")->required();
  multi_cmd->add_option("--C", multi.C, "Coefficient magnitude bound")->required();
  multi_cmd->add_option("--H", multi.H, "Coefficient denominator bound")->required();
  multi_cmd->add_option("--mode", multi.mode, "det or prob")->required();
  multi_cmd->add_option("--seed", multi.seed, "Seed for prob mode");
  multi_cmd->add_option("--qs", multi.qs, "Diversification primes p1,p2,...");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Timing runs over random instances, CSV out");
  bench_cmd->add_option("--vary", bench.vary, "Parameter to vary: T|D|C|H|n")->required();
  bench_cmd->add_option("--values", bench.values, "Comma-separated values")->required();
  bench_cmd->add_option("--trials", bench.trials, "Trials per value");
  bench_cmd->add_option("--seed", bench.seed, "Base seed");
  bench_cmd->add_option("--out", bench.out, "Output CSV path")->required();
  bench_cmd->add_option("--T", bench.T, "Fixed term bound");
  bench_cmd->add_option("--D", bench.D, "Fixed degree bound");
  bench_cmd->add_option("--C", bench.C, "Fixed magnitude bound");
  bench_cmd->add_option("--H", bench.H, "Fixed denominator bound");
  bench_cmd->add_option("--n", bench.n, "Fixed variable count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (uni_cmd->parsed()) {
      uni.has_T = t_opt->count() > 0;
      return run_interp_uni(uni);
    }
    if (multi_cmd->parsed()) return run_interp_multi(multi);
    if (bench_cmd->parsed()) return run_bench_cmd(bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
