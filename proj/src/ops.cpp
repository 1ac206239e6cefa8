#include "utt/ops.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "utt/qcalc.hpp"

namespace utt::ops {

namespace {

PadicInt signed_one(const PadicContext& ctx, int exponent) {
  return exponent % 2 == 0 ? ctx.one() : -ctx.one();
}

}  // namespace

UTWindow build_basic(const PadicContext& ctx, BasicKind kind, int size) {
  const PadicInt q_hat = ctx.q_hat();
  return UTWindow::from_fn(ctx, size, [&](int i, int j) {
    const bool diag = (i == j) && kind != BasicKind::Shift;
    const bool super = (j == i + 1) && kind != BasicKind::Diagonal;
    if (diag) return q_hat.pow(static_cast<std::uint64_t>(i));
    if (super) return ctx.one();
    return ctx.zero();
  });
}

UTWindow shifted_adams(const PadicContext& ctx, int n, int size) {
  if (n < 1)
    throw Error(Errc::BadIndex,
                "shifted Adams matrix needs n >= 1, got " + std::to_string(n));
  const PadicInt lambda = ctx.q_hat().pow(static_cast<std::uint64_t>(n - 1));
  return adams(ctx, size) - lambda * UTWindow::identity(ctx, size);
}

UTWindow phi_matrix(const PadicContext& ctx, int n, int size) {
  if (n < 0)
    throw Error(Errc::BadIndex, "phi matrix needs n >= 0");
  UTWindow x = UTWindow::identity(ctx, size);
  for (int k = 1; k <= n; ++k) x = x * shifted_adams(ctx, k, size);
  return x;
}

PadicInt adams_power_entry(const PadicContext& ctx, int n, int s, int c) {
  if (n < 0 || s < 0)
    throw Error(Errc::BadIndex, "Adams power entry needs n, s >= 0");
  if (c < 0 || c > n) return ctx.zero();
  const PadicInt q_hat = ctx.q_hat();
  const auto e = static_cast<std::uint64_t>(row_exponent(s)) *
                 static_cast<std::uint64_t>(n - c);
  return qbinom_eval(n, n - c, q_hat) * q_hat.pow(e);
}

PadicInt phi_entry(const PadicContext& ctx, int n, int s, int c) {
  if (n < 1 || s < 0)
    throw Error(Errc::BadIndex, "phi entry needs n >= 1 and s >= 0");
  if (c < 0 || c > n) return ctx.zero();
  const PadicInt q_hat = ctx.q_hat();
  PadicInt sum = ctx.zero();
  for (int i = c; i <= n; ++i) {
    const auto e = static_cast<std::uint64_t>(binom(n - i, 2)) +
                   static_cast<std::uint64_t>(row_exponent(s)) *
                       static_cast<std::uint64_t>(i - c);
    sum += signed_one(ctx, n - i) * q_hat.pow(e) *
           qbinom_eval(n, i, q_hat) * qbinom_eval(i, i - c, q_hat);
  }
  return sum;
}

UTWindow phi_matrix_expanded(const PadicContext& ctx, int n, int size) {
  if (n < 0) throw Error(Errc::BadIndex, "phi matrix needs n >= 0");
  const PadicInt q_hat = ctx.q_hat();
  const UTWindow r = adams(ctx, size);
  UTWindow sum(ctx, size);
  for (int i = 0; i <= n; ++i) {
    const PadicInt coeff =
        signed_one(ctx, n - i) *
        q_hat.pow(static_cast<std::uint64_t>(binom(n - i, 2))) *
        qbinom_eval(n, i, q_hat);
    sum += coeff * power(r, static_cast<std::uint64_t>(i));
  }
  return sum;
}

UTWindow operation_map(std::span<const PadicInt> coeffs, int size) {
  if (coeffs.empty())
    throw Error(Errc::BadIndex, "operation map needs at least one coefficient");
  const PadicContext& ctx = coeffs.front().context();
  UTWindow sum(ctx, size);
  UTWindow x = UTWindow::identity(ctx, size);
  const int terms = std::min<int>(static_cast<int>(coeffs.size()), size);
  for (int n = 0; n < terms; ++n) {
    if (n > 0) x = x * shifted_adams(ctx, n, size);
    if (filtration_level(x) < n)
      throw std::logic_error("phi matrix " + std::to_string(n) +
                             " has a nonzero column below index n");
    sum += coeffs[n] * x;
  }
  return sum;
}

}  // namespace utt::ops
