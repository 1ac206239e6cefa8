#include <doctest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "utt/ops.hpp"
#include "utt/qcalc.hpp"

using namespace utt;

namespace {

oracle::Dense dense(const UTWindow& a) {
  const auto n = static_cast<std::size_t>(a.size());
  oracle::Dense d(n, std::vector<std::uint64_t>(n, 0));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) d[i][j] = a(i, j).residue();
  return d;
}

oracle::Dense dense_identity(std::size_t w) {
  oracle::Dense d(w, std::vector<std::uint64_t>(w, 0));
  for (std::size_t i = 0; i < w; ++i) d[i][i] = 1;
  return d;
}

// (R - I)(R - q_hat I)...(R - q_hat^{n-1} I) with dense arithmetic.
oracle::Dense dense_phi(const PadicContext& ctx, int n, std::size_t w) {
  const auto m = ctx.modulus();
  const auto qh = ctx.q_hat().residue();
  oracle::Dense out = dense_identity(w);
  for (int k = 0; k < n; ++k) {
    oracle::Dense f = oracle::adams(qh, w, m);
    const auto shift = oracle::powmod(qh, static_cast<std::uint64_t>(k), m);
    for (std::size_t i = 0; i < w; ++i) f[i][i] = (f[i][i] + m - shift) % m;
    out = oracle::dense_mul(out, f, m);
  }
  return out;
}

const std::vector<std::pair<int, int>> kPrimes = {{3, 2}, {5, 2}, {7, 3}};

}  // namespace

TEST_CASE("basic matrices") {
  const auto& ctx = make_context(3, 2, 20);
  const auto r = ops::adams(ctx, 3);
  CHECK(dense(r) == oracle::Dense{{1, 1, 0}, {0, 4, 1}, {0, 0, 16}});
  const auto d = ops::diagonal_powers(ctx, 4);
  const auto s = ops::shift(ctx, 4);
  CHECK((d * s)(0, 1).residue() == 1);
  CHECK((s * d)(0, 1).residue() == 4);
  CHECK(s * d == ctx.q_hat() * (d * s));
  const auto s2 = s * s;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) CHECK(s2(i, j).residue() == (j == i + 2 ? 1u : 0u));
  CHECK(d + s == ops::adams(ctx, 4));
  CHECK(ops::build_basic(ctx, ops::BasicKind::Adams, 5) == ops::adams(ctx, 5));
  CHECK(dense(ops::adams(ctx, 9)) == oracle::adams(4, 9, ctx.modulus()));
}

TEST_CASE("q-binomial expansion of (D + S)^n") {
  for (auto [p, q] : kPrimes) {
    const auto& ctx = make_context(p, q, 20);
    const int w = 12;
    const auto d = ops::diagonal_powers(ctx, w);
    const auto s = ops::shift(ctx, w);
    for (int n = 0; n <= 8; ++n) {
      UTWindow sum(ctx, w);
      for (int i = 0; i <= n; ++i)
        sum += qbinom_eval(n, i, ctx.q_hat()) *
               (power(d, static_cast<std::uint64_t>(i)) *
                power(s, static_cast<std::uint64_t>(n - i)));
      CHECK(power(d + s, static_cast<std::uint64_t>(n)) == sum);
    }
  }
}

TEST_CASE("shifted Adams matrices") {
  const auto& ctx = make_context(3, 2, 20);
  const auto r1 = ops::shifted_adams(ctx, 1, 5);
  CHECK(r1 == ops::adams(ctx, 5) - UTWindow::identity(ctx, 5));
  for (int s = 0; s < 5; ++s)
    CHECK(r1(s, s) == ctx.q_hat().pow(static_cast<std::uint64_t>(s)) - ctx.one());
  for (auto [p, q] : kPrimes) {
    const auto& c = make_context(p, q, 10);
    CHECK(ops::shifted_adams(c, 2, 4)(1, 1).is_zero());
    for (int n = 1; n <= 6; ++n)
      CHECK(ops::shifted_adams(c, n, 8)(n - 1, n - 1).is_zero());
  }
  CHECK(ops::shifted_adams(ctx, 3, 4)(0, 1) == ctx.one());
  CHECK_THROWS_AS(ops::shifted_adams(ctx, 0, 4), Error);
}

TEST_CASE("phi matrices") {
  const auto& ctx = make_context(3, 2, 20);
  CHECK(ops::phi_matrix(ctx, 0, 5) == UTWindow::identity(ctx, 5));
  CHECK(ops::phi_matrix(ctx, 2, 4)(0, 2) == ctx.one());
  CHECK(ops::phi_matrix(ctx, 2, 4)(0, 1).is_zero());
  CHECK(filtration_level(ops::phi_matrix(ctx, 2, 8)) == 2);
  CHECK(ops::phi_matrix_expanded(ctx, 1, 6) == ops::adams(ctx, 6) - UTWindow::identity(ctx, 6));
  CHECK(ops::phi_matrix_expanded(ctx, 2, 6) == ops::phi_matrix(ctx, 2, 6));
  CHECK(ops::phi_matrix_expanded(ctx, 4, 10) == ops::phi_matrix(ctx, 4, 10));

  for (auto [p, q] : kPrimes) {
    const auto& c = make_context(p, q, 20);
    for (int n = 0; n <= 8; ++n) {
      const auto x = ops::phi_matrix(c, n, 12);
      CHECK(dense(x) == dense_phi(c, n, 12));
      CHECK(filtration_level(x) >= n);
      for (int s = 0; s < 12; ++s)
        for (int col = n + 1; s + col < 12; ++col) CHECK(x(s, s + col).is_zero());
    }
  }
}

TEST_CASE("closed formulas") {
  const auto& ctx = make_context(3, 2, 20);
  CHECK(ops::adams_power_entry(ctx, 2, 0, 1).residue() == 5);
  for (int n = 0; n <= 6; ++n)
    for (int s = 0; s < 6; ++s) CHECK(ops::adams_power_entry(ctx, n, s, n) == ctx.one());
  CHECK(ops::adams_power_entry(ctx, 3, 2, 5).is_zero());
  CHECK(ops::adams_power_entry(ctx, 3, 2, -1).is_zero());
  for (int s = 0; s < 6; ++s)
    CHECK(ops::phi_entry(ctx, 1, s, 0) ==
          ctx.q_hat().pow(static_cast<std::uint64_t>(s)) - ctx.one());
  CHECK(ops::phi_entry(ctx, 2, 0, 2) == ctx.one());
  CHECK(ops::phi_entry(ctx, 3, 1, 7).is_zero());
  static_assert(ops::row_exponent(0) == 0);

  for (auto [p, q] : kPrimes) {
    const auto& c = make_context(p, q, 20);
    const int w = 12;
    const oracle::Dense r = oracle::adams(c.q_hat().residue(), w, c.modulus());
    oracle::Dense rn = dense_identity(w);
    for (int n = 0; n <= 8; ++n) {
      for (int s = 0; s < w; ++s)
        for (int col = 0; s + col < w; ++col)
          CHECK(ops::adams_power_entry(c, n, s, col).residue() == rn[s][s + col]);
      rn = oracle::dense_mul(rn, r, c.modulus());
    }
    for (int n = 1; n <= 6; ++n) {
      const auto x = ops::phi_matrix(c, n, w);
      const auto y = ops::phi_matrix_expanded(c, n, w);
      for (int s = 0; s < w; ++s)
        for (int col = 0; s + col < w; ++col) {
          CHECK(ops::phi_entry(c, n, s, col) == x(s, s + col));
          CHECK(y(s, s + col) == x(s, s + col));
        }
    }
  }
}

TEST_CASE("operation map") {
  const auto& ctx = make_context(3, 2, 20);
  const PadicInt one[] = {ctx.one()};
  CHECK(ops::operation_map(one, 8) == UTWindow::identity(ctx, 8));
  const PadicInt x1[] = {ctx.zero(), ctx.one()};
  CHECK(ops::operation_map(x1, 8) == ops::phi_matrix(ctx, 1, 8));
  CHECK_THROWS_AS(ops::operation_map(std::span<const PadicInt>{}, 4), Error);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<PadicInt> a;
    for (int n = 0; n <= 10; ++n) a.push_back(ctx.from_residue(rng() % ctx.modulus()));
    const int w = 12;
    const auto full = ops::operation_map(a, w);
    UTWindow eager(ctx, w);
    for (int n = 0; n <= 10; ++n) eager += a[n] * ops::phi_matrix(ctx, n, w);
    CHECK(full == eager);
    for (int j = 0; j <= 6; ++j) {
      const auto head = ops::operation_map(std::span(a).first(static_cast<std::size_t>(j) + 1), w);
      CHECK(full.column(j) == head.column(j));
    }
  }
}
