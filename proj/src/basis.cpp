#include "utt/basis.hpp"

#include <stdexcept>
#include <string>

namespace utt::basis {

namespace {

PadicScaled scaled_power(const PadicScaled& x, int k) {
  PadicScaled r = PadicScaled::from_int(x.context(), 1);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

PadicScaled p_power(const PadicContext& ctx, int m) {
  return PadicScaled::from_int(ctx, 1).scale_by_p_power(m);
}

PadicScaled q_hat_power(const PadicContext& ctx, int k) {
  return PadicScaled::from_padic(ctx.q_hat().pow(static_cast<std::uint64_t>(k)));
}

int weight_or_throw(const BivarPoly& f) {
  const auto w = f.weight();
  if (!w)
    throw Error(Errc::BadIndex,
                "polynomial must be nonzero and homogeneous");
  return *w;
}

}  // namespace

// ----------------------------------------------------------------- BivarPoly

void BivarPoly::add_term(const Exponents& e, const PadicScaled& c) {
  require_same_context(*ctx_, c.context());
  if (e.first < 0 || e.second < 0)
    throw Error(Errc::BadIndex, "negative exponent");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BivarPoly BivarPoly::constant(const PadicScaled& c) {
  return monomial(0, 0, c);
}

BivarPoly BivarPoly::monomial(int a, int b, const PadicScaled& c) {
  BivarPoly f(c.context());
  f.add_term({a, b}, c);
  return f;
}

BivarPoly BivarPoly::u(const PadicContext& ctx) {
  return monomial(1, 0, PadicScaled::from_int(ctx, 1));
}

BivarPoly BivarPoly::v(const PadicContext& ctx) {
  return monomial(0, 1, PadicScaled::from_int(ctx, 1));
}

BivarPoly BivarPoly::u_over_p(const PadicContext& ctx, int j) {
  if (j < 0) throw Error(Errc::BadIndex, "negative power of u/p");
  return monomial(j, 0, p_power(ctx, -j));
}

PadicScaled BivarPoly::coeff(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? PadicScaled::zero(*ctx_) : it->second;
}

std::optional<int> BivarPoly::weight() const {
  if (terms_.empty()) return std::nullopt;
  const int w = terms_.begin()->first.first + terms_.begin()->first.second;
  for (const auto& [e, c] : terms_)
    if (e.first + e.second != w) return std::nullopt;
  return w;
}

bool BivarPoly::is_homogeneous() const {
  return terms_.empty() || weight().has_value();
}

BivarPoly BivarPoly::scaled(const PadicScaled& c) const {
  BivarPoly out(*ctx_);
  for (const auto& [e, x] : terms_) out.add_term(e, x * c);
  return out;
}

BivarPoly BivarPoly::times_u_power(int k) const {
  if (k < 0) throw Error(Errc::BadIndex, "negative power of u");
  BivarPoly out(*ctx_);
  for (const auto& [e, x] : terms_) out.terms_.emplace(Exponents{e.first + k, e.second}, x);
  return out;
}

BivarPoly operator+(const BivarPoly& f, const BivarPoly& g) {
  require_same_context(*f.ctx_, *g.ctx_);
  BivarPoly out = f;
  for (const auto& [e, c] : g.terms_) out.add_term(e, c);
  return out;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out(*ctx_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

BivarPoly operator-(const BivarPoly& f, const BivarPoly& g) { return f + (-g); }

BivarPoly operator*(const BivarPoly& f, const BivarPoly& g) {
  require_same_context(*f.ctx_, *g.ctx_);
  BivarPoly out(*f.ctx_);
  for (const auto& [ef, cf] : f.terms_)
    for (const auto& [eg, cg] : g.terms_)
      out.add_term({ef.first + eg.first, ef.second + eg.second}, cf * cg);
  return out;
}

PadicScaled BivarPoly::evaluate(const PadicScaled& x,
                                const PadicScaled& y) const {
  PadicScaled sum = PadicScaled::zero(*ctx_);
  for (const auto& [e, c] : terms_)
    sum += c * scaled_power(x, e.first) * scaled_power(y, e.second);
  return sum;
}

BivarPoly adams_action(const BivarPoly& f) {
  const PadicContext& ctx = f.context();
  BivarPoly out(ctx);
  for (const auto& [e, c] : f.terms())
    out += BivarPoly::monomial(e.first, e.second, c * q_hat_power(ctx, e.second));
  return out;
}

// ---------------------------------------------------------------- generators

int required_precision(std::uint64_t p, int kmax) {
  if (kmax < 0) throw Error(Errc::BadIndex, "negative weight");
  return nu_factorial(p, static_cast<std::uint64_t>(kmax)) + kmax + kGuardDigits;
}

BivarPoly numerator_product(const PadicContext& ctx, int k) {
  if (k < 0) throw Error(Errc::BadIndex, "negative weight");
  BivarPoly out = BivarPoly::constant(PadicScaled::from_int(ctx, 1));
  const BivarPoly u = BivarPoly::u(ctx);
  const BivarPoly v = BivarPoly::v(ctx);
  for (int i = 0; i < k; ++i) out = out * (v - u.scaled(q_hat_power(ctx, i)));
  return out;
}

PadicScaled generator_denominator(const PadicContext& ctx, int k) {
  if (k < 0) throw Error(Errc::BadIndex, "negative weight");
  const PadicInt q_hat = ctx.q_hat();
  const PadicInt top = q_hat.pow(static_cast<std::uint64_t>(k));
  PadicScaled prod = PadicScaled::from_int(ctx, 1);
  for (int i = 0; i < k; ++i) {
    const PadicInt factor = top - q_hat.pow(static_cast<std::uint64_t>(i));
    if (factor.is_zero())
      throw Error(Errc::PrecisionExhausted,
                  "q_hat^" + std::to_string(k) + " - q_hat^" +
                      std::to_string(i) + " vanishes modulo p^N");
    prod *= PadicScaled::from_padic(factor);
  }
  return prod;
}

BivarPoly rational_generator(const PadicContext& ctx, int k) {
  if (k < 0) throw Error(Errc::BadIndex, "negative weight");
  if (k == 0) return BivarPoly::constant(PadicScaled::from_int(ctx, 1));
  const int needed = required_precision(ctx.prime(), k);
  if (ctx.precision() < needed)
    throw Error(Errc::PrecisionExhausted,
                "weight " + std::to_string(k) + " needs N >= " +
                    std::to_string(needed) + ", have " +
                    std::to_string(ctx.precision()));
  return numerator_product(ctx, k).scaled(generator_denominator(ctx, k).inverse());
}

BivarPoly integral_generator(const PadicContext& ctx, int k) {
  const int nu = nu_factorial(ctx.prime(), static_cast<std::uint64_t>(k < 0 ? 0 : k));
  return rational_generator(ctx, k).scaled(p_power(ctx, nu));
}

BivarPoly basis_element(const PadicContext& ctx, int i, int j, int k,
                        IndexMode mode) {
  if (i < 0 || j < 0 || k < 0)
    throw Error(Errc::BadIndex, "basis element indices must be nonnegative");
  if (mode == IndexMode::Basis) {
    const int nu = nu_factorial(ctx.prime(), static_cast<std::uint64_t>(k));
    if (j > nu || (j < nu && i != 0))
      throw Error(Errc::BadIndex,
                  "(" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                      std::to_string(k) + ") is not an admissible basis index");
  }
  return (BivarPoly::u_over_p(ctx, j) * integral_generator(ctx, k)).times_u_power(i);
}

BivarPoly graded_basis_element(const PadicContext& ctx, int m, int l) {
  if (l < 0 || m < l)
    throw Error(Errc::BadIndex, "graded basis element needs m >= l >= 0, got m=" +
                                    std::to_string(m) + " l=" + std::to_string(l));
  const int nu = nu_factorial(ctx.prime(), static_cast<std::uint64_t>(l));
  if (m <= nu + l) return basis_element(ctx, 0, m - l, l);
  return basis_element(ctx, m - l - nu, nu, l);
}

int generator_exponent(std::uint64_t p, int m, int i) {
  if (m < 0 || i < 0) throw Error(Errc::BadIndex, "negative index");
  const int nu_m = nu_factorial(p, static_cast<std::uint64_t>(m));
  const int nu_i = nu_factorial(p, static_cast<std::uint64_t>(i));
  if (m > nu_i + i) return nu_m;
  return nu_m + m - nu_i - i;
}

// ------------------------------------------------------------------ expansion

std::vector<PadicScaled> expand_in_generators(const BivarPoly& f) {
  const PadicContext& ctx = f.context();
  const int n = weight_or_throw(f);
  std::vector<PadicScaled> lambdas(static_cast<std::size_t>(n) + 1,
                                   PadicScaled::zero(ctx));
  BivarPoly remainder = f;
  for (int s = n; s >= 0; --s) {
    const PadicScaled top = remainder.coeff(n - s, s);
    if (top.is_zero()) continue;
    const PadicScaled lambda =
        s == 0 ? top : top * generator_denominator(ctx, s);
    lambdas[static_cast<std::size_t>(s)] = lambda;
    remainder -= rational_generator(ctx, s).times_u_power(n - s).scaled(lambda);
  }
  if (!remainder.is_zero())
    throw std::logic_error("generator expansion left a nonzero remainder");
  return lambdas;
}

std::vector<PadicScaled> expand_in_generators_by_evaluation(const BivarPoly& f) {
  const PadicContext& ctx = f.context();
  const int n = weight_or_throw(f);
  const PadicScaled one = PadicScaled::from_int(ctx, 1);
  std::vector<PadicScaled> lambdas;
  lambdas.reserve(static_cast<std::size_t>(n) + 1);
  BivarPoly remainder = f;
  for (int s = 0; s <= n; ++s) {
    const PadicScaled lambda = remainder.evaluate(one, q_hat_power(ctx, s));
    lambdas.push_back(lambda);
    remainder -= rational_generator(ctx, s).times_u_power(n - s).scaled(lambda);
  }
  if (!remainder.is_zero())
    throw Error(Errc::PrecisionExhausted,
                "evaluation peeling ran out of digits at weight " + std::to_string(n));
  return lambdas;
}

BivarPoly reconstruct_from_generators(const PadicContext& ctx,
                                      const std::vector<PadicScaled>& lambdas) {
  if (lambdas.empty()) throw Error(Errc::BadIndex, "no coefficients");
  const int n = static_cast<int>(lambdas.size()) - 1;
  BivarPoly out(ctx);
  for (int s = 0; s <= n; ++s)
    out += rational_generator(ctx, s).times_u_power(n - s).scaled(lambdas[s]);
  return out;
}

std::vector<PadicScaled> expand_in_basis(const BivarPoly& f) {
  const PadicContext& ctx = f.context();
  const int n = weight_or_throw(f);
  const auto lambdas = expand_in_generators(f);
  std::vector<PadicScaled> mus;
  mus.reserve(lambdas.size());
  for (int l = 0; l <= n; ++l) {
    // The basis element of weight n built from generator l is a p-power
    // multiple of u^{n-l} c_l, so its expansion has a single entry.
    const auto g = expand_in_generators(graded_basis_element(ctx, n, l));
    mus.push_back(lambdas[l] * g[l].inverse());
  }
  return mus;
}

Integrality check_integrality(const BivarPoly& f) {
  Integrality result;
  if (f.is_zero()) return {true, true};
  result.in_divided_subring = true;
  for (const auto& [e, c] : f.terms())
    if (c.valuation() < -(e.first + e.second)) result.in_divided_subring = false;
  result.integral_on_units = true;
  for (const auto& lambda : expand_in_generators(f))
    if (!lambda.is_zero() && lambda.valuation() < 0) result.integral_on_units = false;
  return result;
}

}  // namespace utt::basis
