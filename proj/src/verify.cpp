#include "utt/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>
#include <set>

#include "utt/basis.hpp"
#include "utt/conj.hpp"
#include "utt/ops.hpp"
#include "utt/qcalc.hpp"
#include "utt/utmat.hpp"

namespace utt::verify {

using nlohmann::json;

namespace {

constexpr const char* kExpand = "Eq. expand";
constexpr const char* kRpower = "Lemma Rpower";
constexpr const char* kApp1 = "Theorem app(1)";
constexpr const char* kApp3 = "Theorem app(3)";
constexpr const char* kConj = "§4.3 Theorem";
constexpr const char* kSubring = "Prop. subring";
constexpr const char* kBasis = "Theorem basis";
constexpr const char* kActionF = "Lemma action on f";
constexpr const char* kActionG = "Prop. action on g";
constexpr const char* kAlglem = "Lemma alglem";
constexpr const char* kLowerG = "Lemma lower g";
constexpr const char* kTopring = "Theorem topringapp";

class Collector {
 public:
  explicit Collector(std::string suite) : suite_(std::move(suite)) {}

  void add(const char* anchor, std::string check, json params, bool passed,
           std::string detail = {}) {
    results_.push_back({suite_, anchor, std::move(check), std::move(params),
                        passed, std::move(detail)});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

using basis::BivarPoly;

PadicScaled p_pow(const PadicContext& ctx, int m) {
  return PadicScaled::from_int(ctx, 1).scale_by_p_power(m);
}

PadicScaled q_hat_pow(const PadicContext& ctx, int k) {
  return PadicScaled::from_padic(ctx.q_hat().pow(static_cast<std::uint64_t>(k)));
}

int nu_fact(const PadicContext& ctx, int k) {
  return nu_factorial(ctx.prime(), static_cast<std::uint64_t>(k));
}

PadicInt random_residue(const PadicContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, ctx.modulus() - 1);
  return ctx.from_residue(dist(rng));
}

/// Entry-wise comparison; returns the number of differing entries.
int count_mismatches(const UTWindow& a, const UTWindow& b) {
  int bad = 0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = i; j < a.size(); ++j)
      if (a(i, j) != b(i, j)) ++bad;
  return bad;
}

std::string mismatch_detail(int bad) {
  return bad == 0 ? std::string{} : std::to_string(bad) + " entries differ";
}

// ------------------------------------------------------------------ suites

std::vector<CheckResult> suite_qbinom_matrix(const SuiteConfig& cfg,
                                             const PadicContext& ctx) {
  Collector out("qbinom-matrix");
  const int w = cfg.window;
  const PadicInt q_hat = ctx.q_hat();
  const UTWindow d = ops::diagonal_powers(ctx, w);
  const UTWindow s = ops::shift(ctx, w);
  const UTWindow r = ops::adams(ctx, w);

  {
    const int bad = count_mismatches(s * d, q_hat * (d * s));
    out.add(kExpand, "shift-diagonal q-commutation SD = q_hat DS", {{"W", w}},
            bad == 0, mismatch_detail(bad));
  }

  std::vector<UTWindow> d_pow{UTWindow::identity(ctx, w)};
  std::vector<UTWindow> s_pow{UTWindow::identity(ctx, w)};
  for (int k = 1; k <= cfg.nmax; ++k) {
    d_pow.push_back(d_pow.back() * d);
    s_pow.push_back(s_pow.back() * s);
  }
  UTWindow lhs = UTWindow::identity(ctx, w);
  for (int n = 0; n <= cfg.nmax; ++n) {
    if (n > 0) lhs = lhs * r;
    UTWindow rhs(ctx, w);
    for (int i = 0; i <= n; ++i)
      rhs += qbinom_eval(n, i, q_hat) * (d_pow[i] * s_pow[n - i]);
    const int bad = count_mismatches(lhs, rhs);
    out.add(kExpand, "(D+S)^n = sum_i [n,i] D^i S^(n-i)", {{"W", w}, {"n", n}},
            bad == 0, mismatch_detail(bad));
  }

  // Both Pascal recurrences and symmetry of the Gaussian polynomials.
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 12 && ok; ++n)
    for (int i = 0; i <= n; ++i) {
      const QPoly g = qbinom(n, i);
      const QPoly first = qbinom(n - 1, i - 1) + qbinom(n - 1, i).shifted(i);
      const QPoly second = qbinom(n - 1, i - 1).shifted(n - i) + qbinom(n - 1, i);
      if (g != first || g != second || g != qbinom(n, n - i) ||
          g.eval(std::int64_t{1}) != binom(n, i)) {
        ok = false;
        detail = "fails at n=" + std::to_string(n) + " i=" + std::to_string(i);
        break;
      }
    }
  out.add(kExpand, "Gaussian polynomial recurrences, symmetry, q=1 specialization",
          {{"nmax", 12}}, ok, detail);
  return out.take();
}

std::vector<CheckResult> suite_rpower(const SuiteConfig& cfg,
                                      const PadicContext& ctx) {
  Collector out("rpower");
  const int w = cfg.window;
  const UTWindow r = ops::adams(ctx, w);
  UTWindow rn = UTWindow::identity(ctx, w);
  for (int n = 0; n <= cfg.nmax; ++n) {
    if (n > 0) rn = rn * r;
    int bad = 0;
    for (int s = 0; s < w; ++s)
      for (int c = 0; s + c < w; ++c)
        if (ops::adams_power_entry(ctx, n, s, c) != rn(s, s + c)) ++bad;
    out.add(kRpower, "closed form of (R^n)_{s,s+c} vs iterated product",
            {{"W", w}, {"n", n}}, bad == 0, mismatch_detail(bad));
  }
  return out.take();
}

std::vector<CheckResult> suite_xn(const SuiteConfig& cfg,
                                  const PadicContext& ctx) {
  Collector out("xn");
  const int w = cfg.window;
  UTWindow x = UTWindow::identity(ctx, w);
  for (int n = 1; n <= cfg.nmax; ++n) {
    const UTWindow next = x * ops::shifted_adams(ctx, n, w);
    const bool recursion = next == ops::phi_matrix(ctx, n, w);
    x = next;
    const json params{{"W", w}, {"n", n}};

    const int level = filtration_level(x);
    out.add(kApp1, "first n columns of X_n vanish", params,
            level >= std::min(n, w),
            "filtration level " + std::to_string(level));
    out.add(kApp1, "X_n = X_(n-1) R_n", params, recursion);

    int nonzero = 0;
    for (int s = 0; s < w; ++s)
      for (int c = n + 1; s + c < w; ++c)
        if (!x(s, s + c).is_zero()) ++nonzero;
    out.add(kApp3, "(X_n)_{s,s+c} = 0 for c > n", params, nonzero == 0,
            mismatch_detail(nonzero));

    if (n <= std::min(cfg.nmax, 6)) {
      int bad = 0;
      for (int s = 0; s < w; ++s)
        for (int c = 0; s + c < w; ++c)
          if (ops::phi_entry(ctx, n, s, c) != x(s, s + c)) ++bad;
      out.add(kApp3, "closed entry formula vs product R_1...R_n", params,
              bad == 0, mismatch_detail(bad));
      const int bad_expanded = count_mismatches(ops::phi_matrix_expanded(ctx, n, w), x);
      out.add(kApp3, "alternating q-binomial expansion in powers of R vs product",
              params, bad_expanded == 0, mismatch_detail(bad_expanded));
    }
  }
  return out.take();
}

std::vector<CheckResult> suite_alpha(const SuiteConfig& cfg,
                                     const PadicContext& ctx) {
  Collector out("alpha");
  const int w = cfg.window;
  {
    const std::vector<PadicInt> one{ctx.one()};
    const std::vector<PadicInt> first{ctx.zero(), ctx.one()};
    out.add(kTopring, "alpha(phi_0) = I", {{"W", w}},
            ops::operation_map(one, w) == UTWindow::identity(ctx, w));
    out.add(kTopring, "alpha(phi_1) = X_1", {{"W", w}},
            ops::operation_map(first, w) == ops::phi_matrix(ctx, 1, w));
  }
  constexpr int kTrials = 20;
  constexpr int kTerms = 10;
  const int jmax = std::min(6, w - 1);
  for (int t = 0; t < kTrials; ++t) {
    const std::uint64_t seed = trial_seed(cfg.seed ^ 0xa1fa, static_cast<std::uint64_t>(t));
    std::mt19937_64 rng(seed);
    std::vector<PadicInt> coeffs;
    for (int n = 0; n <= kTerms; ++n) coeffs.push_back(random_residue(ctx, rng));
    const UTWindow full = ops::operation_map(coeffs, w);
    int bad_columns = 0;
    for (int j = 0; j <= jmax; ++j) {
      const UTWindow partial =
          ops::operation_map(std::span(coeffs).first(static_cast<std::size_t>(j) + 1), w);
      if (full.column(j) != partial.column(j)) ++bad_columns;
    }
    out.add(kTopring, "column j of alpha depends only on a_0..a_j",
            {{"M", kTerms}, {"W", w}, {"jmax", jmax}, {"seed", seed}, {"trial", t}},
            bad_columns == 0,
            bad_columns ? std::to_string(bad_columns) + " columns differ" : "");
  }
  return out.take();
}

std::vector<CheckResult> suite_conjugation(const SuiteConfig& cfg,
                                           const PadicContext& ctx) {
  Collector out("conjugation");
  const int w = cfg.window;
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = trial_seed(cfg.seed, static_cast<std::uint64_t>(t));
    std::mt19937_64 rng(seed);
    const auto c = conj::CFormMatrix::random(ctx, w, rng);
    const auto report = conj::verify_conjugation(c);
    std::string detail;
    if (report.mismatched_entries)
      detail = std::to_string(report.mismatched_entries) +
               " entries of UC - RU nonzero, min valuation " +
               std::to_string(report.min_difference_valuation);
    out.add(kConj, "UC = RU for the recursive conjugator",
            {{"W", w}, {"p", ctx.prime()}, {"seed", seed}, {"trial", t}},
            report.passed() && report.conjugator_in_U_infty, detail);
  }
  constexpr int kEndToEnd = 20;
  for (int t = 0; t < kEndToEnd; ++t) {
    const std::uint64_t seed = trial_seed(cfg.seed ^ 0xe2e, static_cast<std::uint64_t>(t));
    std::mt19937_64 rng(seed);
    const auto a = conj::AFormMatrix::random(ctx, w, rng);
    const UTWindow b = conj::full_conjugator(a);
    const int bad = count_mismatches(b * a.window() * inverse(b), ops::adams(ctx, w));
    out.add(kConj, "B A B^-1 = R with B = U E",
            {{"W", w}, {"p", ctx.prime()}, {"seed", seed}, {"trial", t}},
            bad == 0, mismatch_detail(bad));
  }
  return out.take();
}

std::vector<CheckResult> suite_integrality(const SuiteConfig& cfg,
                                           const PadicContext& ctx) {
  Collector out("integrality");
  const auto p = ctx.prime();
  const PadicInt q_hat = ctx.q_hat();

  // Largest k whose denominator valuation nu_p(k!) + k is below N.
  int kden = 0;
  while (kden < 12 && nu_fact(ctx, kden + 1) + kden + 1 < ctx.precision()) ++kden;
  for (int k = 1; k <= kden; ++k) {
    PadicInt prod = ctx.one();
    const PadicInt top = q_hat.pow(static_cast<std::uint64_t>(k));
    for (int i = 0; i < k; ++i) prod *= top - q_hat.pow(static_cast<std::uint64_t>(i));
    const int expected = nu_fact(ctx, k) + k;
    out.add(kBasis, "nu_p(prod_i (q_hat^k - q_hat^i)) = nu_p(k!) + k", {{"k", k}},
            prod.valuation() == expected,
            "valuation " + std::to_string(prod.valuation()) + ", expected " +
                std::to_string(expected));
  }

  std::mt19937_64 rng(trial_seed(cfg.seed ^ 0x5ab, 0));
  for (int k = 0; k <= cfg.kmax; ++k) {
    const BivarPoly f = basis::integral_generator(ctx, k);
    const int nu = nu_fact(ctx, k);
    const auto both = basis::check_integrality(f);
    out.add(kSubring, "f_k satisfies both integrality conditions", {{"k", k}},
            both.integral_on_units && both.in_divided_subring);
    const auto at_edge = basis::check_integrality(BivarPoly::u_over_p(ctx, nu) * f);
    out.add(kSubring, "(u/p)^nu_p(k!) f_k satisfies condition (1)", {{"k", k}},
            at_edge.integral_on_units);
    const auto beyond = basis::check_integrality(BivarPoly::u_over_p(ctx, nu + 1) * f);
    out.add(kSubring, "(u/p)^(nu_p(k!)+1) f_k fails condition (1)", {{"k", k}},
            !beyond.integral_on_units);

    // Sampling cross-check of condition (1) at points (kt, lt), k, l = 1 mod p.
    bool sampled_ok = true;
    for (int t = 0; t < 10; ++t) {
      const PadicInt pp = ctx.from_int(static_cast<std::int64_t>(p));
      const auto x = PadicScaled::from_padic(ctx.one() + pp * random_residue(ctx, rng));
      const auto y = PadicScaled::from_padic(ctx.one() + pp * random_residue(ctx, rng));
      const PadicScaled value = f.evaluate(x, y);
      if (!value.is_zero() && value.valuation() < 0) sampled_ok = false;
      const PadicScaled edge = (BivarPoly::u_over_p(ctx, nu) * f).evaluate(x, y);
      if (!edge.is_zero() && edge.valuation() < 0) sampled_ok = false;
    }
    out.add(kSubring, "sampled f(kt, lt) integral when condition (1) holds",
            {{"k", k}, {"samples", 10}}, sampled_ok);

    {
      const BivarPoly nk = basis::numerator_product(ctx, k);
      const auto top_down = basis::expand_in_generators(nk);
      const auto by_eval = basis::expand_in_generators_by_evaluation(nk);
      const bool rebuilt = basis::reconstruct_from_generators(ctx, top_down) == nk;
      out.add(kBasis, "numerator expansion: top-down and evaluation peeling agree",
              {{"k", k}}, top_down == by_eval && rebuilt &&
                              top_down[static_cast<std::size_t>(k)] ==
                                  basis::generator_denominator(ctx, k));
    }

    if (k >= 1) {
      const PadicScaled top = basis::rational_generator(ctx, k).coeff(0, k);
      out.add(kBasis, "leading coefficient of c_k has valuation -(nu_p(k!) + k)",
              {{"k", k}}, top.valuation() == -(nu + k),
              "valuation " + std::to_string(top.valuation()));
    }
  }
  {
    const auto r = basis::check_integrality(BivarPoly::u_over_p(ctx, 1));
    out.add(kSubring, "u/p satisfies (2) but not (1)", json::object(),
            !r.integral_on_units && r.in_divided_subring);
  }

  // Lattice expansion: random combinations of the weight-n basis elements
  // with occasional p-denominators. Both conditions hold exactly when every
  // coefficient is integral.
  const int nmax = std::min(6, cfg.kmax);
  for (int n = 0; n <= nmax; ++n) {
    int agree = 0, disagree = 0, integral_cases = 0;
    for (int t = 0; t < 12; ++t) {
      BivarPoly f(ctx);
      std::vector<bool> denominators;
      for (int l = 0; l <= n; ++l) {
        const int shift = (rng() % 4 == 0) ? -1 : 0;
        PadicScaled mu = PadicScaled::from_padic(random_residue(ctx, rng));
        if (mu.is_zero()) mu = PadicScaled::from_int(ctx, 1);
        mu = mu.scale_by_p_power(shift);
        f += basis::graded_basis_element(ctx, n, l).scaled(mu);
      }
      if (f.is_zero()) continue;
      const auto cond = basis::check_integrality(f);
      const auto mus = basis::expand_in_basis(f);
      const bool all_integral = std::all_of(mus.begin(), mus.end(), [](const PadicScaled& m) {
        return m.is_zero() || m.valuation() >= 0;
      });
      const bool both = cond.integral_on_units && cond.in_divided_subring;
      (both == all_integral ? agree : disagree)++;
      if (all_integral) ++integral_cases;
    }
    out.add(kBasis, "both conditions hold iff the basis expansion is integral",
            {{"trials", 12}, {"weight", n}}, disagree == 0,
            std::to_string(integral_cases) + " integral cases, " +
                std::to_string(disagree) + " disagreements");
  }
  return out.take();
}

std::vector<CheckResult> suite_action(const SuiteConfig& cfg,
                                      const PadicContext& ctx) {
  Collector out("action");
  const auto p = static_cast<int>(ctx.prime());
  const BivarPoly u = BivarPoly::u(ctx);
  for (int m = 1; m <= cfg.kmax; ++m) {
    const BivarPoly fm = basis::integral_generator(ctx, m);
    const BivarPoly fm1 = basis::integral_generator(ctx, m - 1);
    const BivarPoly expected =
        fm.scaled(q_hat_pow(ctx, m)) +
        (u * fm1).scaled(p_pow(ctx, nu_integer(ctx.prime(), static_cast<std::uint64_t>(m))));
    out.add(kActionF, "Psi(f_m) = q_hat^m f_m + p^nu_p(m) u f_(m-1)", {{"m", m}},
            basis::adams_action(fm) == expected);

    const BivarPoly cm = basis::rational_generator(ctx, m);
    const BivarPoly cm1 = basis::rational_generator(ctx, m - 1);
    out.add(kActionF, "Psi(c_m) = q_hat^m c_m + u c_(m-1)", {{"m", m}},
            basis::adams_action(cm) == cm.scaled(q_hat_pow(ctx, m)) + u * cm1);
  }

  std::set<std::string> branches;
  for (int m = 0; m <= cfg.kmax; ++m)
    for (int n = 0; n <= m; ++n) {
      const BivarPoly g = basis::graded_basis_element(ctx, m, n);
      const BivarPoly lhs = basis::adams_action(g);
      BivarPoly rhs(ctx);
      std::string branch;
      if (m == n) {
        if (m == 0) {
          branch = "g_mm: m = 0";
          rhs = g;
        } else {
          int e;
          if (m > p) {
            branch = "g_mm: m > p";
            e = nu_integer(ctx.prime(), static_cast<std::uint64_t>(m)) + 1;
          } else if (m == p) {
            branch = "g_mm: m = p";
            e = 1;
          } else {
            branch = "g_mm: 1 <= m <= p-1";
            e = 0;
          }
          rhs = g.scaled(q_hat_pow(ctx, m)) +
                basis::graded_basis_element(ctx, m, m - 1).scaled(p_pow(ctx, e));
        }
      } else if (n == 0) {
        branch = "g_mn: n = 0";
        rhs = g;
      } else {
        const int upper = nu_fact(ctx, n) + n;
        const int lower = nu_fact(ctx, n - 1) + n - 1;
        int e;
        if (m > upper) {
          branch = "g_mn: m > nu(n!)+n";
          e = 0;
        } else if (m > lower) {
          branch = "g_mn: nu((n-1)!)+n-1 < m <= nu(n!)+n";
          e = upper - m;
        } else {
          branch = "g_mn: m <= nu((n-1)!)+n-1";
          e = nu_integer(ctx.prime(), static_cast<std::uint64_t>(n)) + 1;
        }
        rhs = g.scaled(q_hat_pow(ctx, n)) +
              basis::graded_basis_element(ctx, m, n - 1).scaled(p_pow(ctx, e));
      }
      branches.insert(branch);
      out.add(kActionG, "Psi(g_mn) by case", {{"branch", branch}, {"m", m}, {"n", n}},
              lhs == rhs);
    }
  if (ctx.prime() == 3 && cfg.kmax >= 8) {
    std::string hit;
    for (const auto& b : branches) hit += (hit.empty() ? "" : "; ") + b;
    out.add(kActionG, "every case of the action is exercised", {{"kmax", cfg.kmax}},
            branches.size() - branches.count("g_mn: n = 0") == 7, hit);
  }
  return out.take();
}

std::vector<CheckResult> suite_alglem(const SuiteConfig& cfg,
                                      const PadicContext& ctx) {
  Collector out("alglem");
  for (int m = 1; m <= cfg.kmax; ++m)
    for (int i = 0; i <= m - 1; ++i) {
      const int nu_m = nu_fact(ctx, m);
      const int nu_i = nu_fact(ctx, i);
      const BivarPoly lhs =
          BivarPoly::u_over_p(ctx, nu_m) * basis::graded_basis_element(ctx, m, i);
      const BivarPoly tail = (BivarPoly::u_over_p(ctx, nu_i) * basis::integral_generator(ctx, i))
                                 .times_u_power(nu_m - nu_i + m - i);
      const bool low = m <= nu_i + i;
      const int denominator = low ? nu_m + m - nu_i - i : nu_m;
      const BivarPoly rhs = tail.scaled(p_pow(ctx, -denominator));
      out.add(kAlglem, "(u/p)^nu_p(m!) g_mi by case",
              {{"case", low ? "m <= nu(i!)+i" : "m > nu(i!)+i"}, {"i", i}, {"m", m}},
              lhs == rhs);
    }
  bool nonneg = true;
  for (int m = 0; m <= 30 && nonneg; ++m)
    for (int i = 0; i <= m; ++i)
      if (basis::generator_exponent(ctx.prime(), m, i) < 0) {
        nonneg = false;
        break;
      }
  out.add(kAlglem, "beta(m, i) >= 0", {{"mmax", 30}}, nonneg);
  return out.take();
}

std::vector<CheckResult> suite_lower_g(const SuiteConfig& cfg,
                                       const PadicContext& ctx) {
  Collector out("lower-g");
  for (int m = 0; m <= cfg.kmax; ++m)
    for (int n = 0; n <= m; ++n)
      for (int i = 0; i <= n; ++i) {
        const int edge = nu_fact(ctx, i) + i;
        const BivarPoly lhs = basis::graded_basis_element(ctx, n, i).times_u_power(m - n);
        int e;
        std::string branch;
        if (m <= edge) {
          branch = "n <= m <= nu(i!)+i";
          e = m - n;
        } else if (n <= edge) {
          branch = "n <= nu(i!)+i < m";
          e = edge - n;
        } else {
          branch = "nu(i!)+i < n <= m";
          e = 0;
        }
        const BivarPoly rhs = basis::graded_basis_element(ctx, m, i).scaled(p_pow(ctx, e));
        out.add(kLowerG, "u^(m-n) g_ni by case",
                {{"branch", branch}, {"i", i}, {"m", m}, {"n", n}}, lhs == rhs);
      }
  return out.take();
}

using SuiteFn = std::vector<CheckResult> (*)(const SuiteConfig&, const PadicContext&);

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table{
      {"qbinom-matrix", suite_qbinom_matrix},
      {"rpower", suite_rpower},
      {"xn", suite_xn},
      {"alpha", suite_alpha},
      {"conjugation", suite_conjugation},
      {"integrality", suite_integrality},
      {"action", suite_action},
      {"alglem", suite_alglem},
      {"lower-g", suite_lower_g},
  };
  return table;
}

bool needs_basis_precision(const std::string& name) {
  return name == "integrality" || name == "action" || name == "alglem" ||
         name == "lower-g";
}

}  // namespace

std::string CheckResult::to_json_line() const {
  return json{{"anchor", anchor},  {"check", check},   {"detail", detail},
              {"params", params},  {"passed", passed}, {"suite", suite}}
      .dump();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "qbinom-matrix", "rpower",    "xn",     "alpha",  "conjugation",
      "integrality",   "action",    "alglem", "lower-g"};
  return names;
}

const std::vector<std::string>& expected_anchors() {
  static const std::vector<std::string> anchors{
      kExpand,  kRpower, kApp1,    kApp3,  kConj,   kSubring,
      kBasis,   kActionF, kActionG, kAlglem, kLowerG, kTopring};
  return anchors;
}

const PadicContext& validate(const SuiteConfig& cfg) {
  const PadicContext& ctx = make_context(cfg.p, cfg.q, cfg.precision);
  if (cfg.nmax < 0 || cfg.kmax < 0 || cfg.trials < 0)
    throw Error(Errc::BadPrecision, "nmax, kmax and trials must be nonnegative");
  if (cfg.window < cfg.nmax + 2)
    throw Error(Errc::BadPrecision, "window W=" + std::to_string(cfg.window) +
                                        " must be at least nmax + 2 = " +
                                        std::to_string(cfg.nmax + 2));
  return ctx;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<CheckResult> run_suite(const std::string& name,
                                   const SuiteConfig& cfg) {
  const auto& table = suite_table();
  auto it = table.find(name);
  if (it == table.end()) throw Error(Errc::BadIndex, "unknown suite '" + name + "'");
  const PadicContext& ctx = validate(cfg);
  if (needs_basis_precision(name)) {
    const int needed = basis::required_precision(ctx.prime(), cfg.kmax);
    if (ctx.precision() < needed)
      throw Error(Errc::BadPrecision, "suite " + name + " with kmax=" +
                                          std::to_string(cfg.kmax) +
                                          " needs N >= " + std::to_string(needed));
  }
  return it->second(cfg, ctx);
}

bool run_suites(const std::vector<std::string>& names, const SuiteConfig& cfg,
                const std::function<void(const CheckResult&)>& sink) {
  std::vector<std::string> expanded;
  for (const auto& n : names) {
    if (n == "all") expanded.insert(expanded.end(), suite_names().begin(), suite_names().end());
    else expanded.push_back(n);
  }
  // Fail on configuration problems before any work starts.
  validate(cfg);
  for (const auto& n : expanded) {
    if (!suite_table().contains(n)) throw Error(Errc::BadIndex, "unknown suite '" + n + "'");
    if (needs_basis_precision(n)) {
      const int needed = basis::required_precision(cfg.p, cfg.kmax);
      if (cfg.precision < needed)
        throw Error(Errc::BadPrecision, "suite " + n + " with kmax=" +
                                            std::to_string(cfg.kmax) +
                                            " needs N >= " + std::to_string(needed));
    }
  }

  std::vector<std::future<std::vector<CheckResult>>> pending;
  for (const auto& n : expanded)
    pending.push_back(std::async(std::launch::async, [n, &cfg] { return run_suite(n, cfg); }));
  bool all_passed = true;
  for (auto& f : pending)
    for (const auto& r : f.get()) {
      all_passed = all_passed && r.passed;
      sink(r);
    }
  return all_passed;
}

}  // namespace utt::verify
