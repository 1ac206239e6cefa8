#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "utt/padic.hpp"

namespace utt {

/// Integer polynomial in the formal variable q, coefficients in ascending
/// degree with the leading coefficient nonzero (the zero polynomial is empty).
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<std::int64_t> coeffs);
  QPoly(std::initializer_list<std::int64_t> coeffs)
      : QPoly(std::vector<std::int64_t>(coeffs)) {}

  static QPoly monomial(int degree, std::int64_t coeff = 1);

  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int k) const noexcept {
    return k >= 0 && k <= degree() ? coeffs_[k] : 0;
  }

  /// Multiplication by q^k.
  QPoly shifted(int k) const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Horner evaluation in Z_p.
  PadicInt eval(const PadicInt& x) const;
  /// Exact evaluation at an ordinary integer; throws Overflow.
  std::int64_t eval(std::int64_t x) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// Gaussian polynomial [n, i]_q from the Pascal recurrence
/// [n, i] = [n-1, i-1] + q^i [n-1, i]. Zero for i < 0 or i > n.
/// Rows are memoized process-wide behind a mutex.
QPoly qbinom(int n, int i);

/// [n, i]_q evaluated at x.
PadicInt qbinom_eval(int n, int i, const PadicInt& x);

/// Ordinary binomial coefficient, zero outside 0 <= k <= n.
std::int64_t binom(std::int64_t n, std::int64_t k);

}  // namespace utt
