#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "utt/basis.hpp"

using namespace utt;
using basis::BivarPoly;

namespace {

const PadicContext& ctx3() { return make_context(3, 2, 20); }

PadicScaled sc(const PadicContext& ctx, std::int64_t x) {
  return PadicScaled::from_int(ctx, x);
}

PadicScaled qh(const PadicContext& ctx, int k) {
  return PadicScaled::from_padic(ctx.q_hat().pow(static_cast<std::uint64_t>(k)));
}

BivarPoly random_homogeneous(const PadicContext& ctx, int n, std::mt19937_64& rng) {
  BivarPoly f(ctx);
  for (int a = 0; a <= n; ++a) {
    if (rng() % 3 == 0) continue;
    PadicInt u = ctx.from_residue(rng() % ctx.modulus());
    if (!u.is_unit()) u += ctx.one();
    f += BivarPoly::monomial(a, n - a,
                             PadicScaled::make(static_cast<int>(rng() % 5) - 2, u));
  }
  if (f.is_zero()) f = BivarPoly::monomial(n, 0, sc(ctx, 1));
  return f;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const auto& ctx = ctx3();
  const auto u = BivarPoly::u(ctx), v = BivarPoly::v(ctx);
  const auto uv = u * v;
  CHECK(uv == BivarPoly::monomial(1, 1, sc(ctx, 1)));
  CHECK(uv.weight() == 2);
  CHECK((uv + (-uv)).is_zero());
  CHECK((uv - uv).weight() == std::nullopt);
  const auto lhs = (v - u) * (v - u.scaled(qh(ctx, 1)));
  const auto rhs = v * v - (u * v).scaled(sc(ctx, 5)) + (u * u).scaled(sc(ctx, 4));
  CHECK(lhs == rhs);
  CHECK((u + v * v).weight() == std::nullopt);
  CHECK_FALSE((u + v * v).is_homogeneous());
  CHECK(BivarPoly::u_over_p(ctx, 2).coeff(2, 0) == sc(ctx, 1).scale_by_p_power(-2));
  CHECK(u.times_u_power(3) == BivarPoly::monomial(4, 0, sc(ctx, 1)));
  CHECK(uv.evaluate(sc(ctx, 2), sc(ctx, 5)) == sc(ctx, 10));
}

TEST_CASE("generators") {
  const auto& ctx = ctx3();
  const auto u = BivarPoly::u(ctx), v = BivarPoly::v(ctx);
  CHECK(basis::rational_generator(ctx, 0) == BivarPoly::constant(sc(ctx, 1)));
  CHECK(basis::rational_generator(ctx, 1) ==
        (v - u).scaled((qh(ctx, 1) - sc(ctx, 1)).inverse()));
  CHECK(basis::integral_generator(ctx, 0) == BivarPoly::constant(sc(ctx, 1)));
  CHECK(basis::integral_generator(ctx, 1) == basis::rational_generator(ctx, 1));
  CHECK(basis::integral_generator(ctx, 3) ==
        basis::rational_generator(ctx, 3).scaled(sc(ctx, 3)));
  CHECK(basis::check_integrality(basis::integral_generator(ctx, 3)).in_divided_subring);

  for (int k = 0; k <= 8; ++k) {
    const auto d = basis::generator_denominator(ctx, k);
    CHECK(d.valuation() == oracle::nu_factorial(3, static_cast<std::uint64_t>(k)) + k);
    const auto c = basis::rational_generator(ctx, k);
    CHECK(c.weight() == k);
    CHECK(c.coeff(0, k) == d.inverse());
  }
  CHECK_THROWS_AS(basis::rational_generator(make_context(3, 2, 10), 8), Error);
  CHECK(basis::required_precision(3, 8) == 14);
}

TEST_CASE("numerator coefficients match elementary symmetric functions") {
  for (auto [p, q] : {std::pair{3, 2}, {5, 2}, {7, 3}}) {
    const auto& ctx = make_context(p, q, 20);
    const auto m = ctx.modulus();
    for (int k = 0; k <= 8; ++k) {
      // e[j] = e_j(1, q_hat, ..., q_hat^{k-1}) mod p^N.
      std::vector<std::uint64_t> e(static_cast<std::size_t>(k) + 1, 0);
      e[0] = 1;
      for (int i = 0; i < k; ++i) {
        const auto a = oracle::powmod(ctx.q_hat().residue(), static_cast<std::uint64_t>(i), m);
        for (int j = i + 1; j >= 1; --j) e[j] = (e[j] + oracle::mulmod(e[j - 1], a, m)) % m;
      }
      const auto n = basis::numerator_product(ctx, k);
      for (int j = 0; j <= k; ++j) {
        const std::uint64_t expected = j % 2 ? (m - e[j]) % m : e[j];
        const auto c = n.coeff(j, k - j);
        CHECK((c.is_zero() ? 0u : c.to_padic().residue()) == expected);
      }
    }
  }
}

TEST_CASE("basis elements") {
  const auto& ctx = ctx3();
  const auto u = BivarPoly::u(ctx);
  CHECK(basis::basis_element(ctx, 0, 0, 0) == BivarPoly::constant(sc(ctx, 1)));
  CHECK(basis::basis_element(ctx, 2, 0, 1) == basis::integral_generator(ctx, 1).times_u_power(2));
  CHECK_THROWS_AS(basis::basis_element(ctx, 0, 2, 3), Error);
  CHECK_THROWS_AS(basis::basis_element(ctx, 1, 0, 3), Error);
  const auto raw = basis::basis_element(ctx, 0, 2, 3, basis::IndexMode::Raw);
  CHECK_FALSE(basis::check_integrality(raw).integral_on_units);

  for (int l = 0; l <= 8; ++l)
    CHECK(basis::graded_basis_element(ctx, l, l) == basis::integral_generator(ctx, l));
  for (int m = 0; m <= 8; ++m)
    CHECK(basis::graded_basis_element(ctx, m, 0) == BivarPoly::monomial(m, 0, sc(ctx, 1)));
  const auto f3 = basis::integral_generator(ctx, 3);
  CHECK(basis::graded_basis_element(ctx, 4, 3) == BivarPoly::u_over_p(ctx, 1) * f3);
  CHECK(basis::graded_basis_element(ctx, 5, 3) == u * BivarPoly::u_over_p(ctx, 1) * f3);
  CHECK_THROWS_AS(basis::graded_basis_element(ctx, 2, 3), Error);
}

TEST_CASE("generator exponents") {
  for (int m = 0; m <= 12; ++m) CHECK(basis::generator_exponent(3, m, m) == 0);
  CHECK(basis::generator_exponent(3, 4, 3) == 1);
  CHECK(basis::generator_exponent(3, 9, 1) == 4);
  // g_{m,l} = p^beta(m,l) u^{m-l} c_l up to a unit.
  const auto& ctx = ctx3();
  for (int m = 0; m <= 8; ++m)
    for (int l = 0; l <= m; ++l) {
      const auto g = basis::graded_basis_element(ctx, m, l);
      const auto lambdas = basis::expand_in_generators(g);
      for (int s = 0; s <= m; ++s) {
        if (s != l) {
          CHECK(lambdas[s].is_zero());
          continue;
        }
        const int nu_l = oracle::nu_factorial(3, static_cast<std::uint64_t>(l));
        const int e = std::max(0, nu_l + l - m);
        CHECK(lambdas[s].valuation() == e);
      }
    }
}

TEST_CASE("Adams action") {
  const auto& ctx = ctx3();
  const auto u = BivarPoly::u(ctx), v = BivarPoly::v(ctx);
  for (int n = 0; n <= 5; ++n) {
    const auto un = BivarPoly::monomial(n, 0, sc(ctx, 1));
    CHECK(basis::adams_action(un) == un);
  }
  CHECK(basis::adams_action(v) == v.scaled(qh(ctx, 1)));
  const auto c1 = basis::rational_generator(ctx, 1);
  CHECK(basis::adams_action(c1) == c1.scaled(qh(ctx, 1)) + u);
  const auto f3 = basis::integral_generator(ctx, 3);
  const auto f2 = basis::integral_generator(ctx, 2);
  CHECK(basis::adams_action(f3) == f3.scaled(qh(ctx, 3)) + (u * f2).scaled(sc(ctx, 3)));
}

TEST_CASE("expansion in generators") {
  const auto& ctx = ctx3();
  for (int n = 0; n <= 6; ++n) {
    const auto lambdas = basis::expand_in_generators(BivarPoly::monomial(n, 0, sc(ctx, 1)));
    REQUIRE(lambdas.size() == static_cast<std::size_t>(n) + 1);
    CHECK(lambdas[0] == sc(ctx, 1));
    for (int s = 1; s <= n; ++s) CHECK(lambdas[s].is_zero());
  }
  for (int k = 0; k <= 8; ++k) {
    const auto lambdas = basis::expand_in_generators(basis::rational_generator(ctx, k));
    for (int s = 0; s <= k; ++s) CHECK(lambdas[s] == sc(ctx, s == k ? 1 : 0));
  }
  for (int k = 0; k <= 4; ++k) {
    const auto nk = basis::numerator_product(ctx, k);
    const auto lambdas = basis::expand_in_generators(nk);
    PadicScaled prod = sc(ctx, 1);
    for (int i = 0; i < k; ++i) prod *= qh(ctx, k) - qh(ctx, i);
    CHECK(lambdas[k] == prod);
    CHECK(lambdas == basis::expand_in_generators_by_evaluation(nk));
    CHECK(basis::reconstruct_from_generators(ctx, lambdas) == nk);
  }
  CHECK_THROWS_AS(basis::expand_in_generators(BivarPoly(ctx)), Error);
  CHECK_THROWS_AS(basis::expand_in_generators(BivarPoly::u(ctx) + BivarPoly::v(ctx) *
                                                                      BivarPoly::v(ctx)),
                  Error);
}

TEST_CASE("generators vanish at (1, q_hat^s) beyond their weight") {
  const auto& ctx = ctx3();
  for (int r = 0; r <= 8; ++r)
    for (int s = 0; s <= 8; ++s) {
      const auto value = basis::rational_generator(ctx, r).evaluate(sc(ctx, 1), qh(ctx, s));
      if (r > s) CHECK(value.is_zero());
      if (r == s) CHECK(value == sc(ctx, 1));
    }
}

TEST_CASE("expand and reconstruct random polynomials") {
  for (auto [p, q] : {std::pair{3, 2}, {5, 2}}) {
    const auto& ctx = make_context(p, q, 20);
    std::mt19937_64 rng(static_cast<std::uint64_t>(p) * 7);
    for (int t = 0; t < 50; ++t) {
      const int n = static_cast<int>(rng() % 7);
      const auto f = random_homogeneous(ctx, n, rng);
      const auto lambdas = basis::expand_in_generators(f);
      CHECK(basis::reconstruct_from_generators(ctx, lambdas) == f);
    }
  }
}

TEST_CASE("basis expansion recovers lattice coordinates") {
  const auto& ctx = ctx3();
  std::mt19937_64 rng(99);
  for (int t = 0; t < 40; ++t) {
    const int n = static_cast<int>(rng() % 7);
    std::vector<PadicScaled> mus;
    BivarPoly f(ctx);
    for (int l = 0; l <= n; ++l) {
      PadicInt u = ctx.from_residue(rng() % ctx.modulus());
      if (!u.is_unit()) u += ctx.one();
      const auto mu = PadicScaled::make(static_cast<int>(rng() % 3) - 1, u);
      mus.push_back(mu);
      f += basis::graded_basis_element(ctx, n, l).scaled(mu);
    }
    const auto got = basis::expand_in_basis(f);
    REQUIRE(got.size() == mus.size());
    for (std::size_t l = 0; l < mus.size(); ++l) CHECK(got[l] == mus[l]);
  }
}

TEST_CASE("integrality conditions") {
  const auto& ctx = ctx3();
  for (int k = 0; k <= 8; ++k) {
    const auto fk = basis::integral_generator(ctx, k);
    const auto r = basis::check_integrality(fk);
    CHECK(r.integral_on_units);
    CHECK(r.in_divided_subring);
    const int nu = oracle::nu_factorial(3, static_cast<std::uint64_t>(k));
    CHECK(basis::check_integrality(BivarPoly::u_over_p(ctx, nu) * fk).integral_on_units);
    CHECK_FALSE(
        basis::check_integrality(BivarPoly::u_over_p(ctx, nu + 1) * fk).integral_on_units);
  }
  const auto up = basis::check_integrality(BivarPoly::u_over_p(ctx, 1));
  CHECK_FALSE(up.integral_on_units);
  CHECK(up.in_divided_subring);
  const auto zero = basis::check_integrality(BivarPoly(ctx));
  CHECK(zero.integral_on_units);
  CHECK(zero.in_divided_subring);
}

TEST_CASE("condition (1) agrees with sampling at points of 1 + pZ_p") {
  const auto& ctx = ctx3();
  std::mt19937_64 rng(4);
  const PadicInt p = ctx.from_int(3);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + static_cast<int>(rng() % 5);
    BivarPoly f(ctx);
    for (int l = 0; l <= n; ++l) {
      const int shift = rng() % 3 == 0 ? -1 : 0;
      f += basis::graded_basis_element(ctx, n, l)
               .scaled(PadicScaled::from_int(ctx, 1 + static_cast<std::int64_t>(rng() % 2))
                           .scale_by_p_power(shift));
    }
    if (f.is_zero()) continue;
    if (!basis::check_integrality(f).integral_on_units) continue;
    for (int s = 0; s < 10; ++s) {
      const auto x = PadicScaled::from_padic(ctx.one() + p * ctx.from_residue(rng() % ctx.modulus()));
      const auto y = PadicScaled::from_padic(ctx.one() + p * ctx.from_residue(rng() % ctx.modulus()));
      const auto value = f.evaluate(x, y);
      CHECK((value.is_zero() || value.valuation() >= 0));
    }
  }
}
