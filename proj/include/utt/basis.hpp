#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "utt/padic.hpp"

// Integral basis of the torsion-free homotopy of l ^ l, seen inside
// Q_p[u, v] (u, v the hatted degree-rho generators), and the action of the
// Adams operation 1 ^ Psi^q on it.
namespace utt::basis {

/// Polynomial in u and v with PadicScaled coefficients. Exponent pair (a, b)
/// stands for u^a v^b; zero coefficients are never stored.
class BivarPoly {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, PadicScaled>;

  explicit BivarPoly(const PadicContext& ctx) : ctx_(&ctx) {}

  static BivarPoly constant(const PadicScaled& c);
  static BivarPoly monomial(int a, int b, const PadicScaled& c);
  static BivarPoly u(const PadicContext& ctx);
  static BivarPoly v(const PadicContext& ctx);
  /// (u / p)^j.
  static BivarPoly u_over_p(const PadicContext& ctx, int j);

  const PadicContext& context() const noexcept { return *ctx_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  PadicScaled coeff(int a, int b) const;

  /// Common value of a + b over all terms; nullopt for mixed weights. The
  /// zero polynomial is homogeneous of every weight and reports nullopt.
  std::optional<int> weight() const;
  bool is_homogeneous() const;

  BivarPoly scaled(const PadicScaled& c) const;
  /// Multiplication by u^k.
  BivarPoly times_u_power(int k) const;

  friend BivarPoly operator+(const BivarPoly& f, const BivarPoly& g);
  friend BivarPoly operator-(const BivarPoly& f, const BivarPoly& g);
  friend BivarPoly operator*(const BivarPoly& f, const BivarPoly& g);
  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& g) { return *this = *this + g; }
  BivarPoly& operator-=(const BivarPoly& g) { return *this = *this - g; }

  /// Equal exactly when the difference is zero at working precision.
  friend bool operator==(const BivarPoly& f, const BivarPoly& g) {
    return (f - g).is_zero();
  }

  /// Value at (u, v) = (x, y).
  PadicScaled evaluate(const PadicScaled& x, const PadicScaled& y) const;

 private:
  void add_term(const Exponents& e, const PadicScaled& c);

  const PadicContext* ctx_;
  Terms terms_;
};

/// Ring endomorphism u -> u, v -> q_hat v.
BivarPoly adams_action(const BivarPoly& f);

/// Guard digits kept above the denominator valuation nu_p(k!) + k.
inline constexpr int kGuardDigits = 4;

/// Smallest precision N at which generators up to weight kmax are built.
int required_precision(std::uint64_t p, int kmax);

/// prod_{i<k} (v - q_hat^i u).
BivarPoly numerator_product(const PadicContext& ctx, int k);

/// prod_{i<k} (q_hat^k - q_hat^i); its valuation is nu_p(k!) + k.
PadicScaled generator_denominator(const PadicContext& ctx, int k);

/// numerator_product(k) / generator_denominator(k): the Z_p[u]-module
/// generator of weight k for the lattice condition on units.
/// Throws PrecisionExhausted below required_precision(p, k).
BivarPoly rational_generator(const PadicContext& ctx, int k);

/// p^{nu_p(k!)} rational_generator(k).
BivarPoly integral_generator(const PadicContext& ctx, int k);

enum class IndexMode { Basis, Raw };

/// u^i (u/p)^j integral_generator(k). In Basis mode the triple must satisfy
/// 0 <= j <= nu_p(k!) with i = 0 unless j = nu_p(k!); BadIndex otherwise.
BivarPoly basis_element(const PadicContext& ctx, int i, int j, int k,
                        IndexMode mode = IndexMode::Basis);

/// The basis element of weight m built from integral_generator(l), m >= l.
BivarPoly graded_basis_element(const PadicContext& ctx, int m, int l);

/// Exponent of p in front of the weight-m basis element built from
/// integral_generator(i) when expressing the generators of the summands:
///   nu_p(m!)                          if m > nu_p(i!) + i,
///   nu_p(m!) + m - nu_p(i!) - i       otherwise.
int generator_exponent(std::uint64_t p, int m, int i);

/// Coefficients lambda_0..lambda_n with f = sum_s lambda_s u^{n-s} c_s, where
/// c_s = rational_generator(s) and n is the weight of f. Peels from the top
/// v-degree down: c_s is the only remaining generator reaching v^s, with
/// leading coefficient 1 / prod_i (q_hat^s - q_hat^i). Throws BadIndex if f
/// is the zero polynomial or not homogeneous, and std::logic_error if the
/// remainder does not vanish at the end.
std::vector<PadicScaled> expand_in_generators(const BivarPoly& f);

/// The same coefficients peeled from the bottom: lambda_s is the remainder
/// evaluated at (u, v) = (1, q_hat^s), using c_r(1, q_hat^s) = 0 for r > s.
/// Each evaluation mixes terms of negative valuation, so this loses digits
/// much faster than expand_in_generators; PrecisionExhausted if some lambda
/// runs out of known digits.
std::vector<PadicScaled> expand_in_generators_by_evaluation(const BivarPoly& f);

/// Inverse of expand_in_generators for weight n = lambdas.size() - 1.
BivarPoly reconstruct_from_generators(const PadicContext& ctx,
                                      const std::vector<PadicScaled>& lambdas);

/// Coefficients mu_0..mu_n with f = sum_l mu_l graded_basis_element(n, l).
std::vector<PadicScaled> expand_in_basis(const BivarPoly& f);

struct Integrality {
  /// f(kt, lt) in Z_p[t] for all k, l in 1 + pZ_p; decided exactly as
  /// "every lambda from expand_in_generators lies in Z_p".
  bool integral_on_units = false;
  /// f in Z_p[u/p, v/p]: the u^a v^b coefficient has valuation >= -(a+b).
  bool in_divided_subring = false;
};

Integrality check_integrality(const BivarPoly& f);

}  // namespace utt::basis
