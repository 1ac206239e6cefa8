#include "utt/qcalc.hpp"

#include <algorithm>
#include <mutex>

namespace utt {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(Errc::Overflow, "QPoly coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(Errc::Overflow, "QPoly coefficient overflow");
  return r;
}

}  // namespace

QPoly::QPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::monomial(int degree, std::int64_t coeff) {
  if (degree < 0) throw Error(Errc::BadIndex, "negative degree");
  std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = coeff;
  return QPoly(std::move(c));
}

QPoly QPoly::shifted(int k) const {
  if (k < 0) throw Error(Errc::BadIndex, "negative shift");
  if (is_zero()) return {};
  std::vector<std::int64_t> c(static_cast<std::size_t>(k), 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(c));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = checked_add(a.coeff(static_cast<int>(k)), b.coeff(static_cast<int>(k)));
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = checked_add(a.coeff(static_cast<int>(k)),
                       checked_mul(-1, b.coeff(static_cast<int>(k))));
  return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  return QPoly(std::move(c));
}

PadicInt QPoly::eval(const PadicInt& x) const {
  const PadicContext& ctx = x.context();
  PadicInt acc = ctx.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + ctx.from_int(*it);
  return acc;
}

std::int64_t QPoly::eval(std::int64_t x) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = checked_add(checked_mul(acc, x), *it);
  return acc;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    const std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (k == 0 || mag != 1) out += std::to_string(mag);
    if (k >= 1) out += "q";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

QPoly qbinom(int n, int i) {
  if (n < 0) throw Error(Errc::BadIndex, "qbinom needs n >= 0");
  if (i < 0 || i > n) return {};

  // rows[m][j] = [m, j]_q for 0 <= j <= m.
  static std::mutex mutex;
  static std::vector<std::vector<QPoly>> rows{{QPoly{1}}};
  std::lock_guard lock(mutex);
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    const int m = static_cast<int>(rows.size());
    std::vector<QPoly> row(static_cast<std::size_t>(m) + 1);
    row[0] = QPoly{1};
    row[m] = QPoly{1};
    for (int j = 1; j < m; ++j) row[j] = prev[j - 1] + prev[j].shifted(j);
    rows.push_back(std::move(row));
  }
  return rows[n][i];
}

PadicInt qbinom_eval(int n, int i, const PadicInt& x) {
  return qbinom(n, i).eval(x);
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (n < 0) throw Error(Errc::BadIndex, "binom needs n >= 0");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    // r * (n - k + j) is divisible by j at every step.
    __int128 t = static_cast<__int128>(r) * (n - k + j) / j;
    if (t > INT64_MAX) throw Error(Errc::Overflow, "binom overflow");
    r = static_cast<std::int64_t>(t);
  }
  return r;
}

}  // namespace utt
