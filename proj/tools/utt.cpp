// utt: emit operation matrices and basis polynomials, and run the
// verification suites.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "utt/basis.hpp"
#include "utt/emit.hpp"
#include "utt/ops.hpp"
#include "utt/qcalc.hpp"
#include "utt/verify.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitConfig = 2;

struct CommonFlags {
  std::int64_t p = 3;
  std::optional<std::int64_t> q;
  int precision = 20;
  int window = 12;
  std::uint64_t seed = 0;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--p", f.p, "odd prime");
  cmd->add_option("--q", f.q, "generator of (Z/p^2)^x (default: smallest)");
  cmd->add_option("--N", f.precision, "precision: work modulo p^N");
  cmd->add_option("--W", f.window, "matrix window size");
  cmd->add_option("--seed", f.seed, "seed for randomized checks");
  cmd->add_option("--format", f.format, "json | csv | pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
}

std::int64_t resolve_q(const CommonFlags& f) {
  if (f.q) return *f.q;
  if (f.p < 3 || !utt::is_prime(static_cast<std::uint64_t>(f.p)))
    throw utt::Error(utt::Errc::NotPrime,
                     "p must be an odd prime, got " + std::to_string(f.p));
  return static_cast<std::int64_t>(
      utt::smallest_primitive_root_mod_p_squared(static_cast<std::uint64_t>(f.p)));
}

const utt::PadicContext& context_of(const CommonFlags& f) {
  return utt::make_context(f.p, resolve_q(f), f.precision);
}

int run_verify(const std::vector<std::string>& suites, const CommonFlags& f,
               int kmax, int nmax, int trials) {
  utt::verify::SuiteConfig cfg;
  cfg.p = f.p;
  cfg.q = resolve_q(f);
  cfg.precision = f.precision;
  cfg.window = f.window;
  cfg.seed = f.seed;
  cfg.kmax = kmax;
  cfg.nmax = nmax;
  cfg.trials = trials;
  const auto format = utt::emit::parse_format(f.format);

  if (format == utt::emit::Format::Csv) std::cout << "suite,anchor,check,passed,detail\n";
  int total = 0, failed = 0;
  const bool ok = utt::verify::run_suites(
      suites, cfg, [&](const utt::verify::CheckResult& r) {
        ++total;
        if (!r.passed) ++failed;
        switch (format) {
          case utt::emit::Format::Json:
            std::cout << r.to_json_line() << "\n";
            break;
          case utt::emit::Format::Csv:
            std::cout << r.suite << ",\"" << r.anchor << "\",\"" << r.check
                      << "\"," << (r.passed ? "pass" : "FAIL") << ",\""
                      << r.detail << "\"\n";
            break;
          case utt::emit::Format::Pretty:
            std::cout << (r.passed ? "pass " : "FAIL ") << "[" << r.anchor
                      << "] " << r.suite << ": " << r.check << " "
                      << r.params.dump()
                      << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
            break;
        }
        std::cout.flush();
      });
  if (format == utt::emit::Format::Pretty)
    std::cout << total - failed << "/" << total << " checks passed\n";
  return ok ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper-triangular operation matrices and integral bases"};
  app.require_subcommand(1);

  CommonFlags flags;
  if (const char* env = std::getenv("UTT_DEFAULT_PRIME")) {
    try {
      flags.p = std::stoll(env);
    } catch (const std::exception&) {
      std::cerr << "UTT_DEFAULT_PRIME is not an integer: " << env << "\n";
      return kExitConfig;
    }
  }

  // matrix
  std::string matrix_kind;
  int n = 1;
  auto* matrix = app.add_subcommand("matrix", "emit D, S, R, Rn or Xn");
  matrix->add_option("kind", matrix_kind, "D | S | R | Rn | Xn")
      ->required()
      ->check(CLI::IsMember({"D", "S", "R", "Rn", "Xn"}));
  matrix->add_option("--n", n, "index for Rn and Xn");
  add_common(matrix, flags);

  // qbinom
  int qn = 0, qk = 0;
  bool qeval = false;
  auto* qb = app.add_subcommand("qbinom", "Gaussian polynomial [n, k]_q");
  qb->add_option("--n", qn, "n")->required();
  qb->add_option("--k", qk, "k")->required();
  qb->add_flag("--eval", qeval, "evaluate at q_hat instead");
  add_common(qb, flags);

  // basis
  std::string basis_kind;
  int bi = 0, bj = 0, bk = 0, bm = 0, bl = 0;
  bool raw = false;
  auto* bas = app.add_subcommand("basis", "emit c_k, f_k, F_ijk or g_ml");
  bas->add_option("kind", basis_kind, "c | f | F | g")
      ->required()
      ->check(CLI::IsMember({"c", "f", "F", "g"}));
  bas->add_option("--i", bi, "power of u (F)");
  bas->add_option("--j", bj, "power of u/p (F)");
  bas->add_option("--k", bk, "generator weight (c, f, F)");
  bas->add_option("--m", bm, "weight (g)");
  bas->add_option("--l", bl, "generator index (g)");
  bas->add_flag("--raw", raw, "allow inadmissible F indices");
  add_common(bas, flags);

  // verify / all
  std::vector<std::string> suites;
  int kmax = 8, nmax = 8, trials = 50;
  auto* ver = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suite_choices = utt::verify::suite_names();
  suite_choices.push_back("all");
  ver->add_option("suites", suites, "suite names or 'all'")
      ->required()
      ->check(CLI::IsMember(suite_choices));
  auto* all = app.add_subcommand("all", "run every verification suite");
  for (auto* cmd : {ver, all}) {
    cmd->add_option("--kmax", kmax, "largest generator weight");
    cmd->add_option("--nmax", nmax, "largest matrix index");
    cmd->add_option("--trials", trials, "random conjugation trials");
    add_common(cmd, flags);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*ver || *all) {
      if (*all) suites = {"all"};
      return run_verify(suites, flags, kmax, nmax, trials);
    }

    const utt::PadicContext& ctx = context_of(flags);
    const auto format = utt::emit::parse_format(flags.format);
    if (*matrix) {
      namespace ops = utt::ops;
      std::optional<utt::UTWindow> w;
      if (matrix_kind == "D") w = ops::diagonal_powers(ctx, flags.window);
      else if (matrix_kind == "S") w = ops::shift(ctx, flags.window);
      else if (matrix_kind == "R") w = ops::adams(ctx, flags.window);
      else if (matrix_kind == "Rn") w = ops::shifted_adams(ctx, n, flags.window);
      else w = ops::phi_matrix(ctx, n, flags.window);
      std::cout << utt::emit::emit(*w, format);
    } else if (*qb) {
      if (qeval) {
        const auto v = utt::qbinom_eval(qn, qk, ctx.q_hat());
        std::cout << (format == utt::emit::Format::Json
                          ? utt::emit::to_json(v).dump()
                          : v.to_string())
                  << "\n";
      } else {
        std::cout << utt::emit::emit(utt::qbinom(qn, qk), format);
      }
    } else if (*bas) {
      namespace basis = utt::basis;
      std::optional<basis::BivarPoly> f;
      if (basis_kind == "c") f = basis::rational_generator(ctx, bk);
      else if (basis_kind == "f") f = basis::integral_generator(ctx, bk);
      else if (basis_kind == "F")
        f = basis::basis_element(ctx, bi, bj, bk,
                                 raw ? basis::IndexMode::Raw : basis::IndexMode::Basis);
      else f = basis::graded_basis_element(ctx, bm, bl);
      std::cout << utt::emit::emit(*f, format);
    }
    return 0;
  } catch (const utt::Error& e) {
    std::cerr << "utt: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "utt: internal check failed: " << e.what() << "\n";
    return kExitFailed;
  }
}
