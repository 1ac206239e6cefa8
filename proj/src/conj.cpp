#include "utt/conj.hpp"

#include <stdexcept>
#include <string>

#include "utt/ops.hpp"

namespace utt::conj {

namespace {

void check_diagonal(const UTWindow& w) {
  const PadicInt q_hat = w.context().q_hat();
  for (int i = 0; i < w.size(); ++i)
    if (w(i, i) != q_hat.pow(static_cast<std::uint64_t>(i)))
      throw Error(Errc::BadIndex,
                  "diagonal entry " + std::to_string(i) + " is not q_hat^" +
                      std::to_string(i));
}

PadicInt random_residue(const PadicContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, ctx.modulus() - 1);
  return ctx.from_residue(dist(rng));
}

PadicInt random_unit(const PadicContext& ctx, std::mt19937_64& rng) {
  for (;;) {
    PadicInt x = random_residue(ctx, rng);
    if (x.is_unit()) return x;
  }
}

}  // namespace

AFormMatrix::AFormMatrix(UTWindow window) : window_(std::move(window)) {
  check_diagonal(window_);
  for (int i = 0; i + 1 < window_.size(); ++i)
    if (!window_(i, i + 1).is_unit())
      throw Error(Errc::NotAUnit,
                  "superdiagonal entry " + std::to_string(i) + " = " +
                      window_(i, i + 1).to_string());
}

AFormMatrix AFormMatrix::random(const PadicContext& ctx, int size,
                                std::mt19937_64& rng) {
  const PadicInt q_hat = ctx.q_hat();
  UTWindow w(ctx, size);
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) {
      if (j == i) w.set(i, j, q_hat.pow(static_cast<std::uint64_t>(i)));
      else if (j == i + 1) w.set(i, j, random_unit(ctx, rng));
      else w.set(i, j, random_residue(ctx, rng));
    }
  return AFormMatrix(std::move(w));
}

std::vector<PadicInt> AFormMatrix::superdiagonal() const {
  std::vector<PadicInt> out;
  for (int i = 0; i + 1 < size(); ++i) out.push_back(window_(i, i + 1));
  return out;
}

CFormMatrix::CFormMatrix(UTWindow window) : window_(std::move(window)) {
  check_diagonal(window_);
  const PadicInt one = window_.context().one();
  for (int i = 0; i + 1 < window_.size(); ++i)
    if (window_(i, i + 1) != one)
      throw Error(Errc::BadIndex,
                  "superdiagonal entry " + std::to_string(i) + " is not 1");
}

CFormMatrix CFormMatrix::random(const PadicContext& ctx, int size,
                                std::mt19937_64& rng) {
  const PadicInt q_hat = ctx.q_hat();
  UTWindow w(ctx, size);
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) {
      if (j == i) w.set(i, j, q_hat.pow(static_cast<std::uint64_t>(i)));
      else if (j == i + 1) w.set(i, j, ctx.one());
      else w.set(i, j, random_residue(ctx, rng));
    }
  return CFormMatrix(std::move(w));
}

UTWindow normalizer(std::span<const PadicInt> superdiag_units, int size) {
  if (size < 1) throw Error(Errc::SizeMismatch, "window size must be positive");
  if (static_cast<int>(superdiag_units.size()) < size - 1)
    throw Error(Errc::SizeMismatch,
                "normalizer needs " + std::to_string(size - 1) + " units");
  if (size == 1) {
    if (superdiag_units.empty())
      throw Error(Errc::SizeMismatch, "no context available for size 1");
  }
  const PadicContext& ctx = superdiag_units.front().context();
  std::vector<PadicInt> diag{ctx.one()};
  for (int i = 1; i < size; ++i) {
    const PadicInt& u = superdiag_units[i - 1];
    if (!u.is_unit())
      throw Error(Errc::NotAUnit, "superdiagonal entry " +
                                      std::to_string(i - 1) + " = " +
                                      u.to_string());
    diag.push_back(diag.back() * u);
  }
  return UTWindow::diagonal(diag);
}

CFormMatrix normalize_superdiagonal(const AFormMatrix& a) {
  const auto units = a.superdiagonal();
  const PadicContext& ctx = a.window().context();
  const UTWindow e = a.size() == 1 ? UTWindow::identity(ctx, 1)
                                   : normalizer(units, a.size());
  // CFormMatrix's constructor asserts the superdiagonal is all ones and the
  // diagonal is unchanged.
  return CFormMatrix(e * a.window() * inverse(e));
}

UTWindow conjugator(const CFormMatrix& c) {
  const UTWindow& cw = c.window();
  const PadicContext& ctx = cw.context();
  const int w = c.size();
  const PadicInt q_hat = ctx.q_hat();
  std::vector<PadicInt> q_pow;
  for (int i = 0; i < w; ++i) q_pow.push_back(q_hat.pow(static_cast<std::uint64_t>(i)));

  // Full square rows: lower entries are produced by the recursion and must
  // come out zero.
  std::vector<std::vector<PadicInt>> u(static_cast<std::size_t>(w),
                                       std::vector<PadicInt>(static_cast<std::size_t>(w), ctx.zero()));
  u[0][0] = ctx.one();
  for (int i = 0; i + 1 < w; ++i)
    for (int j = 0; j < w; ++j) {
      PadicInt acc = ctx.zero();
      for (int s = i; s <= j - 2; ++s) acc += u[i][s] * cw(s, j);
      if (j >= 1) acc += u[i][j - 1];
      acc += (q_pow[j] - q_pow[i]) * u[i][j];
      u[i + 1][j] = acc;
    }

  UTWindow out(ctx, w);
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j) {
      if (i > j) {
        if (!u[i][j].is_zero())
          throw std::logic_error("conjugator entry (" + std::to_string(i) +
                                 ", " + std::to_string(j) +
                                 ") below the diagonal is nonzero");
      } else {
        out.set(i, j, u[i][j]);
      }
    }
  for (int i = 0; i < w; ++i) {
    if (!out(i, i).is_unit())
      throw std::logic_error("conjugator diagonal entry " + std::to_string(i) +
                             " is not a unit");
    if (i + 1 < w &&
        out(i + 1, i + 1) != out(i, i) + (q_pow[i + 1] - q_pow[i]) * out(i, i + 1))
      throw std::logic_error("conjugator diagonal recursion fails at " +
                             std::to_string(i));
  }
  return out;
}

ConjugationReport verify_conjugation(const CFormMatrix& c) {
  const PadicContext& ctx = c.window().context();
  const UTWindow u = conjugator(c);
  const UTWindow diff = u * c.window() - ops::adams(ctx, c.size()) * u;
  ConjugationReport report;
  report.size = c.size();
  report.min_difference_valuation = ctx.precision();
  for (int i = 0; i < c.size(); ++i)
    for (int j = i; j < c.size(); ++j) {
      const PadicInt d = diff(i, j);
      if (!d.is_zero()) {
        ++report.mismatched_entries;
        report.min_difference_valuation =
            std::min(report.min_difference_valuation, d.valuation());
      }
    }
  const Membership m = membership(u);
  report.conjugator_invertible = m.is_invertible;
  report.conjugator_in_U_infty = m.is_in_U_infty;
  return report;
}

UTWindow full_conjugator(const AFormMatrix& a) {
  const PadicContext& ctx = a.window().context();
  const auto units = a.superdiagonal();
  const UTWindow e = a.size() == 1 ? UTWindow::identity(ctx, 1)
                                   : normalizer(units, a.size());
  return conjugator(CFormMatrix(e * a.window() * inverse(e))) * e;
}

}  // namespace utt::conj
