#pragma once

#include <climits>
#include <cstdint>
#include <string>

#include "utt/error.hpp"

namespace utt {

class PadicInt;

/// Parameters shared by every p-adic value: an odd prime p, the working
/// precision N (all integers live modulo p^N) and a generator q of
/// (Z/p^2)^x together with q_hat = q^(p-1), which generates 1 + pZ_p.
///
/// Contexts are interned: make_context returns the same object for the same
/// (p, q, N), so context identity is pointer identity and contexts live for
/// the whole program.
class PadicContext {
 public:
  PadicContext(const PadicContext&) = delete;
  PadicContext& operator=(const PadicContext&) = delete;

  std::uint64_t prime() const noexcept { return p_; }
  std::uint64_t generator() const noexcept { return q_; }
  int precision() const noexcept { return n_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  /// Degree period 2(p - 1).
  int rho() const noexcept { return static_cast<int>(2 * (p_ - 1)); }

  /// p^k for 0 <= k <= N.
  std::uint64_t p_power(int k) const;

  PadicInt q_hat() const;
  PadicInt zero() const;
  PadicInt one() const;
  /// Canonical residue of an arbitrary signed integer.
  PadicInt from_int(std::int64_t value) const;
  /// Residue that must already be reduced; throws BadIndex otherwise.
  PadicInt from_residue(std::uint64_t residue) const;

  std::string describe() const;

 private:
  friend const PadicContext& make_context(std::int64_t p, std::int64_t q,
                                          int precision);
  PadicContext(std::uint64_t p, std::uint64_t q, int n);

  std::uint64_t p_;
  std::uint64_t q_;
  int n_;
  std::uint64_t modulus_;
  std::uint64_t q_hat_;
};

/// Validates (p, q, N) and returns the interned context.
/// Throws NotPrime, NotPrimitive or BadPrecision. p^N must be below 2^62.
const PadicContext& make_context(std::int64_t p, std::int64_t q, int precision);

/// Multiplicative order of q modulo m by direct powering; 0 if gcd(q, m) > 1.
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t m);

/// Smallest q >= 2 whose order modulo p^2 is p(p - 1).
std::uint64_t smallest_primitive_root_mod_p_squared(std::uint64_t p);

bool is_prime(std::uint64_t n) noexcept;

/// nu_p(k!) by Legendre's sum of floor(k / p^i).
int nu_factorial(std::uint64_t p, std::uint64_t k);

/// nu_p(k) for k >= 1.
int nu_integer(std::uint64_t p, std::uint64_t k);

/// An element of Z_p known modulo p^N, stored as its canonical residue.
class PadicInt {
 public:
  PadicInt(const PadicContext& ctx, std::uint64_t residue) noexcept
      : ctx_(&ctx), residue_(residue) {}

  const PadicContext& context() const noexcept { return *ctx_; }
  std::uint64_t residue() const noexcept { return residue_; }
  bool is_zero() const noexcept { return residue_ == 0; }
  bool is_unit() const noexcept { return residue_ % ctx_->prime() != 0; }

  /// Largest v <= N with p^v dividing the residue; N stands for ">= N".
  int valuation() const noexcept;

  PadicInt operator-() const;
  PadicInt pow(std::uint64_t k) const;
  /// Throws NotAUnit when p divides the residue.
  PadicInt inv_unit() const;

  friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator*(const PadicInt& a, const PadicInt& b);
  PadicInt& operator+=(const PadicInt& b) { return *this = *this + b; }
  PadicInt& operator-=(const PadicInt& b) { return *this = *this - b; }
  PadicInt& operator*=(const PadicInt& b) { return *this = *this * b; }

  friend bool operator==(const PadicInt& a, const PadicInt& b) {
    return a.ctx_ == b.ctx_ && a.residue_ == b.residue_;
  }

  std::string to_string() const { return std::to_string(residue_); }

 private:
  const PadicContext* ctx_;
  std::uint64_t residue_;
};

void require_same_context(const PadicContext& a, const PadicContext& b);

/// An element of Q_p with bounded denominator: p^val * unit, where the unit
/// is known to `digits` significant p-adic digits (digits <= N).
///
/// Zero is the single form (val = infinity, unit = 0, digits = N). A sum
/// whose known digits all cancel is zero; every other result keeps at least
/// one significant digit or raises PrecisionExhausted.
class PadicScaled {
 public:
  static constexpr int kInfinity = INT_MAX;

  static PadicScaled zero(const PadicContext& ctx) noexcept;
  static PadicScaled from_int(const PadicContext& ctx, std::int64_t value);
  /// Absolute precision p^N becomes relative precision N - v(x).
  static PadicScaled from_padic(const PadicInt& x);
  /// p^val * unit with the unit known to `digits` digits; unit must be a
  /// unit or zero (zero yields the zero form).
  static PadicScaled make(int val, const PadicInt& unit, int digits);
  static PadicScaled make(int val, const PadicInt& unit) {
    return make(val, unit, unit.context().precision());
  }

  const PadicContext& context() const noexcept { return *ctx_; }
  bool is_zero() const noexcept { return val_ == kInfinity; }
  int valuation() const noexcept { return val_; }
  PadicInt unit() const noexcept { return PadicInt(*ctx_, unit_); }
  int digits() const noexcept { return digits_; }

  /// Multiplication by p^m for any integer m.
  PadicScaled scale_by_p_power(int m) const;
  /// Throws PrecisionExhausted for the zero form.
  PadicScaled inverse() const;
  /// The value as an element of Z_p mod p^N; requires valuation >= 0.
  PadicInt to_padic() const;

  PadicScaled operator-() const;
  friend PadicScaled operator+(const PadicScaled& a, const PadicScaled& b);
  friend PadicScaled operator-(const PadicScaled& a, const PadicScaled& b) {
    return a + (-b);
  }
  friend PadicScaled operator*(const PadicScaled& a, const PadicScaled& b);
  PadicScaled& operator+=(const PadicScaled& b) { return *this = *this + b; }
  PadicScaled& operator-=(const PadicScaled& b) { return *this = *this - b; }
  PadicScaled& operator*=(const PadicScaled& b) { return *this = *this * b; }

  /// Equality on the digits both operands know.
  friend bool operator==(const PadicScaled& a, const PadicScaled& b);

  std::string to_string() const;

 private:
  PadicScaled(const PadicContext* ctx, int val, std::uint64_t unit,
              int digits) noexcept
      : ctx_(ctx), val_(val), unit_(unit), digits_(digits) {}

  const PadicContext* ctx_;
  int val_;
  std::uint64_t unit_;  // reduced modulo p^digits_
  int digits_;
};

}  // namespace utt
