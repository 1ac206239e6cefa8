#include <doctest.h>

#include "oracles.hpp"
#include "utt/qcalc.hpp"

using namespace utt;

TEST_CASE("Gaussian polynomial examples") {
  CHECK(qbinom(2, 1) == QPoly{1, 1});
  CHECK(qbinom(4, 2) == QPoly{1, 1, 2, 1, 1});
  CHECK(qbinom(7, 0) == QPoly{1});
  CHECK(qbinom(3, 5).is_zero());
  CHECK(qbinom(3, -1).is_zero());
  CHECK(qbinom(2, 1).to_string() == "1 + q");
  CHECK_THROWS_AS(qbinom(-1, 0), Error);
}

TEST_CASE("Pascal recurrence agrees with the product formula") {
  for (int n = 0; n <= 20; ++n)
    for (int k = 0; k <= n; ++k) {
      const QPoly f = qbinom(n, k);
      const auto expected = oracle::qbinom(n, k);
      CHECK(std::vector<std::int64_t>(f.coeffs().begin(), f.coeffs().end()) == expected);
      CHECK(f == qbinom(n, n - k));
      CHECK(f.eval(1) == binom(n, k));
      CHECK(f.degree() == k * (n - k));
    }
}

TEST_CASE("evaluation at q_hat") {
  const auto& ctx = make_context(3, 2, 20);
  CHECK(qbinom_eval(2, 1, ctx.q_hat()).residue() == 5);
  for (int n = 0; n <= 6; ++n) {
    CHECK(qbinom_eval(n, n, ctx.from_int(17)) == ctx.one());
    CHECK(qbinom_eval(n, 0, ctx.from_int(17)) == ctx.one());
  }
  CHECK(qbinom_eval(3, 5, ctx.from_int(17)).is_zero());
  // Horner evaluation matches term-by-term summation.
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      PadicInt sum = ctx.zero();
      const QPoly f = qbinom(n, k);
      for (int e = 0; e <= f.degree(); ++e)
        sum += ctx.from_int(f.coeff(e)) * ctx.q_hat().pow(static_cast<std::uint64_t>(e));
      CHECK(qbinom_eval(n, k, ctx.q_hat()) == sum);
    }
}

TEST_CASE("integer binomials") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(1, 2) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(5, -1) == 0);
  CHECK(binom(30, 15) == 155117520);
}

TEST_CASE("QPoly arithmetic") {
  const QPoly a{1, 2}, b{0, 1, 3};
  CHECK(a + b == QPoly{1, 3, 3});
  CHECK(a - a == QPoly{});
  CHECK(a * b == QPoly{0, 1, 5, 6});
  CHECK(a.shifted(2) == QPoly{0, 0, 1, 2});
  CHECK(QPoly::monomial(3, 2) == QPoly{0, 0, 0, 2});
  CHECK(QPoly{1, 0, 0}.degree() == 0);
  CHECK(QPoly{}.degree() == -1);
  // q-Pascal: [n, k] = [n-1, k-1] + q^k [n-1, k].
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(qbinom(n, k) == qbinom(n - 1, k - 1) + qbinom(n - 1, k).shifted(k));
}
