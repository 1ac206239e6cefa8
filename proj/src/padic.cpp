#include "utt/padic.hpp"

#include "modarith.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace utt {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::BadPrecision: return "BadPrecision";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::NotIntegral: return "NotIntegral";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::BadIndex: return "BadIndex";
    case Errc::Overflow: return "Overflow";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

constexpr std::uint64_t kModulusLimit = std::uint64_t{1} << 62;

using detail::addmod;
using detail::mulmod;
using detail::submod;

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

// Inverse of a modulo m by the extended Euclidean algorithm; gcd(a, m) = 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  __int128 r0 = m, r1 = a % m;
  __int128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 quot = r0 / r1;
    std::tie(r0, r1) = std::make_tuple(r1, r0 - quot * r1);
    std::tie(s0, s1) = std::make_tuple(s1, s0 - quot * s1);
  }
  __int128 inv = s0 % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

int residue_valuation(std::uint64_t r, std::uint64_t p, int cap) {
  if (r == 0) return cap;
  int v = 0;
  while (r % p == 0 && v < cap) {
    r /= p;
    ++v;
  }
  return v;
}

std::uint64_t ipow(std::uint64_t p, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t m) {
  if (m < 2) return 0;
  q %= m;
  std::uint64_t a = q, b = m;
  while (b != 0) std::tie(a, b) = std::make_tuple(b, a % b);
  if (a != 1) return 0;
  std::uint64_t x = q;
  std::uint64_t order = 1;
  while (x != 1) {
    x = mulmod(x, q, m);
    ++order;
  }
  return order;
}

std::uint64_t smallest_primitive_root_mod_p_squared(std::uint64_t p) {
  const std::uint64_t m = p * p;
  for (std::uint64_t q = 2; q < m; ++q)
    if (multiplicative_order(q, m) == p * (p - 1)) return q;
  throw Error(Errc::NotPrimitive,
              "no primitive root modulo " + std::to_string(m));
}

int nu_factorial(std::uint64_t p, std::uint64_t k) {
  int total = 0;
  for (std::uint64_t pk = p; pk <= k; pk *= p) {
    total += static_cast<int>(k / pk);
    if (pk > k / p) break;
  }
  return total;
}

int nu_integer(std::uint64_t p, std::uint64_t k) {
  if (k == 0) throw Error(Errc::BadIndex, "nu_integer(0) is infinite");
  int v = 0;
  while (k % p == 0) {
    k /= p;
    ++v;
  }
  return v;
}

// ---------------------------------------------------------------- context

PadicContext::PadicContext(std::uint64_t p, std::uint64_t q, int n)
    : p_(p), q_(q), n_(n), modulus_(ipow(p, n)) {
  q_hat_ = powmod(q, p - 1, modulus_);
}

std::uint64_t PadicContext::p_power(int k) const {
  if (k < 0 || k > n_)
    throw Error(Errc::BadIndex, "p^" + std::to_string(k) +
                                    " outside working range [0, N]");
  return ipow(p_, k);
}

PadicInt PadicContext::q_hat() const { return PadicInt(*this, q_hat_); }
PadicInt PadicContext::zero() const { return PadicInt(*this, 0); }
PadicInt PadicContext::one() const { return PadicInt(*this, 1); }

PadicInt PadicContext::from_int(std::int64_t value) const {
  const auto m = static_cast<__int128>(modulus_);
  __int128 r = static_cast<__int128>(value) % m;
  if (r < 0) r += m;
  return PadicInt(*this, static_cast<std::uint64_t>(r));
}

PadicInt PadicContext::from_residue(std::uint64_t residue) const {
  if (residue >= modulus_)
    throw Error(Errc::BadIndex, "residue " + std::to_string(residue) +
                                    " not reduced modulo p^N");
  return PadicInt(*this, residue);
}

std::string PadicContext::describe() const {
  return "p=" + std::to_string(p_) + " q=" + std::to_string(q_) +
         " N=" + std::to_string(n_);
}

const PadicContext& make_context(std::int64_t p, std::int64_t q,
                                 int precision) {
  if (precision < 1)
    throw Error(Errc::BadPrecision,
                "N must be at least 1, got " + std::to_string(precision));
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
    throw Error(Errc::NotPrime,
                "p must be an odd prime, got " + std::to_string(p));
  const auto up = static_cast<std::uint64_t>(p);
  {
    std::uint64_t m = 1;
    for (int i = 0; i < precision; ++i) {
      if (m > kModulusLimit / up)
        throw Error(Errc::BadPrecision,
                    "p^N exceeds 2^62 for p=" + std::to_string(p) +
                        " N=" + std::to_string(precision));
      m *= up;
    }
  }
  const std::uint64_t p2 = up * up;
  if (q < 2 || static_cast<std::uint64_t>(q) >= p2)
    throw Error(Errc::NotPrimitive,
                "q must satisfy 2 <= q < p^2, got " + std::to_string(q));
  const auto uq = static_cast<std::uint64_t>(q);
  const std::uint64_t order = multiplicative_order(uq, p2);
  if (order != up * (up - 1))
    throw Error(Errc::NotPrimitive,
                "order of " + std::to_string(q) + " modulo " +
                    std::to_string(p2) + " is " + std::to_string(order) +
                    ", not " + std::to_string(up * (up - 1)));

  static std::mutex mutex;
  static std::map<std::tuple<std::uint64_t, std::uint64_t, int>,
                  std::unique_ptr<PadicContext>>
      interned;
  std::lock_guard lock(mutex);
  auto& slot = interned[{up, uq, precision}];
  if (!slot) slot.reset(new PadicContext(up, uq, precision));
  return *slot;
}

void require_same_context(const PadicContext& a, const PadicContext& b) {
  if (&a != &b)
    throw Error(Errc::ContextMismatch, a.describe() + " vs " + b.describe());
}

// ---------------------------------------------------------------- PadicInt

int PadicInt::valuation() const noexcept {
  return residue_valuation(residue_, ctx_->prime(), ctx_->precision());
}

PadicInt PadicInt::operator-() const {
  return PadicInt(*ctx_, submod(0, residue_, ctx_->modulus()));
}

PadicInt PadicInt::pow(std::uint64_t k) const {
  return PadicInt(*ctx_, powmod(residue_, k, ctx_->modulus()));
}

PadicInt PadicInt::inv_unit() const {
  if (!is_unit())
    throw Error(Errc::NotAUnit,
                to_string() + " has valuation " + std::to_string(valuation()));
  return PadicInt(*ctx_, invmod(residue_, ctx_->modulus()));
}

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
  require_same_context(*a.ctx_, *b.ctx_);
  return PadicInt(*a.ctx_, addmod(a.residue_, b.residue_, a.ctx_->modulus()));
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
  require_same_context(*a.ctx_, *b.ctx_);
  return PadicInt(*a.ctx_, submod(a.residue_, b.residue_, a.ctx_->modulus()));
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
  require_same_context(*a.ctx_, *b.ctx_);
  return PadicInt(*a.ctx_, mulmod(a.residue_, b.residue_, a.ctx_->modulus()));
}

// ------------------------------------------------------------- PadicScaled

PadicScaled PadicScaled::zero(const PadicContext& ctx) noexcept {
  return PadicScaled(&ctx, kInfinity, 0, ctx.precision());
}

PadicScaled PadicScaled::from_int(const PadicContext& ctx,
                                  std::int64_t value) {
  return from_padic(ctx.from_int(value));
}

PadicScaled PadicScaled::from_padic(const PadicInt& x) {
  const PadicContext& ctx = x.context();
  if (x.is_zero()) return zero(ctx);
  const int v = x.valuation();
  return PadicScaled(&ctx, v, x.residue() / ctx.p_power(v),
                     ctx.precision() - v);
}

PadicScaled PadicScaled::make(int val, const PadicInt& unit, int digits) {
  const PadicContext& ctx = unit.context();
  if (digits < 1 || digits > ctx.precision())
    throw Error(Errc::BadPrecision,
                "significant digits " + std::to_string(digits) +
                    " outside [1, N]");
  const std::uint64_t u = unit.residue() % ctx.p_power(digits);
  if (u == 0) return zero(ctx);
  if (u % ctx.prime() == 0)
    throw Error(Errc::NotAUnit, "scaled unit " + unit.to_string());
  if (val == kInfinity)
    throw Error(Errc::BadIndex, "infinite valuation with nonzero unit");
  return PadicScaled(&ctx, val, u, digits);
}

PadicScaled PadicScaled::scale_by_p_power(int m) const {
  if (is_zero()) return *this;
  const long long v = static_cast<long long>(val_) + m;
  if (v >= kInfinity || v <= INT_MIN)
    throw Error(Errc::Overflow, "valuation out of range");
  return PadicScaled(ctx_, static_cast<int>(v), unit_, digits_);
}

PadicScaled PadicScaled::inverse() const {
  if (is_zero())
    throw Error(Errc::PrecisionExhausted,
                "inverse of a value that is zero at working precision");
  const std::uint64_t m = ctx_->p_power(digits_);
  return PadicScaled(ctx_, -val_, invmod(unit_, m), digits_);
}

PadicInt PadicScaled::to_padic() const {
  if (is_zero()) return ctx_->zero();
  if (val_ < 0)
    throw Error(Errc::NotIntegral,
                to_string() + " has negative valuation");
  if (val_ >= ctx_->precision()) return ctx_->zero();
  return PadicInt(*ctx_, mulmod(unit_, ctx_->p_power(val_), ctx_->modulus()));
}

PadicScaled PadicScaled::operator-() const {
  if (is_zero()) return *this;
  const std::uint64_t m = ctx_->p_power(digits_);
  return PadicScaled(ctx_, val_, submod(0, unit_, m), digits_);
}

PadicScaled operator+(const PadicScaled& a, const PadicScaled& b) {
  require_same_context(*a.ctx_, *b.ctx_);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const PadicScaled& lo = a.val_ <= b.val_ ? a : b;
  const PadicScaled& hi = a.val_ <= b.val_ ? b : a;
  const PadicContext& ctx = *a.ctx_;
  const long long gap = static_cast<long long>(hi.val_) - lo.val_;

  // Digits known relative to p^lo.val after aligning the two operands.
  const int avail = static_cast<int>(
      std::min<long long>(lo.digits_, gap + hi.digits_));
  if (avail < 1)
    throw Error(Errc::PrecisionExhausted,
                "no significant digit survives alignment");
  const std::uint64_t m = ctx.p_power(avail);
  std::uint64_t sum = lo.unit_ % m;
  if (gap < avail) {
    const std::uint64_t shifted =
        mulmod(hi.unit_ % m, ctx.p_power(static_cast<int>(gap)), m);
    sum = addmod(sum, shifted, m);
  }
  if (sum == 0) return PadicScaled::zero(ctx);
  const int e = residue_valuation(sum, ctx.prime(), avail);
  const int digits = avail - e;
  if (digits < 1)
    throw Error(Errc::PrecisionExhausted,
                "cancellation consumed every significant digit");
  return PadicScaled(&ctx, lo.val_ + e, sum / ctx.p_power(e), digits);
}

PadicScaled operator*(const PadicScaled& a, const PadicScaled& b) {
  require_same_context(*a.ctx_, *b.ctx_);
  if (a.is_zero() || b.is_zero()) return PadicScaled::zero(*a.ctx_);
  const long long v = static_cast<long long>(a.val_) + b.val_;
  if (v >= PadicScaled::kInfinity || v <= INT_MIN)
    throw Error(Errc::Overflow, "valuation out of range");
  const int digits = std::min(a.digits_, b.digits_);
  const std::uint64_t m = a.ctx_->p_power(digits);
  return PadicScaled(a.ctx_, static_cast<int>(v),
                     mulmod(a.unit_ % m, b.unit_ % m, m), digits);
}

bool operator==(const PadicScaled& a, const PadicScaled& b) {
  if (a.ctx_ != b.ctx_) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.val_ != b.val_) return false;
  const std::uint64_t m = a.ctx_->p_power(std::min(a.digits_, b.digits_));
  return a.unit_ % m == b.unit_ % m;
}

std::string PadicScaled::to_string() const {
  if (is_zero()) return "0";
  std::string s = std::to_string(unit_);
  if (val_ != 0) s = std::to_string(ctx_->prime()) + "^" +
                     std::to_string(val_) + "*" + s;
  return s;
}

}  // namespace utt
