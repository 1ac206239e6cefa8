#include "utt/utmat.hpp"

#include <string>

#include "modarith.hpp"

namespace utt {

using detail::addmod;
using detail::mulmod;
using detail::submod;

UTWindow::UTWindow(const PadicContext& ctx, int size)
    : ctx_(&ctx), size_(size) {
  if (size < 1)
    throw Error(Errc::SizeMismatch,
                "window size must be positive, got " + std::to_string(size));
  const auto w = static_cast<std::size_t>(size);
  data_.assign(w * (w + 1) / 2, 0);
}

UTWindow UTWindow::identity(const PadicContext& ctx, int size) {
  UTWindow out(ctx, size);
  for (int i = 0; i < size; ++i) out.data_[out.index(i, i)] = 1;
  return out;
}

UTWindow UTWindow::from_fn(const PadicContext& ctx, int size,
                           const Generator& gen) {
  UTWindow out(ctx, size);
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) out.set(i, j, gen(i, j));
  return out;
}

UTWindow UTWindow::diagonal(std::span<const PadicInt> entries) {
  if (entries.empty())
    throw Error(Errc::SizeMismatch, "empty diagonal");
  UTWindow out(entries.front().context(), static_cast<int>(entries.size()));
  for (int i = 0; i < out.size_; ++i) out.set(i, i, entries[i]);
  return out;
}

void UTWindow::check_index(int i, int j) const {
  if (i < 0 || j < 0 || i >= size_ || j >= size_)
    throw Error(Errc::BadIndex, "(" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") outside window " +
                                    std::to_string(size_));
}

PadicInt UTWindow::operator()(int i, int j) const {
  check_index(i, j);
  if (i > j) return ctx_->zero();
  return PadicInt(*ctx_, data_[index(i, j)]);
}

void UTWindow::set(int i, int j, const PadicInt& value) {
  check_index(i, j);
  require_same_context(*ctx_, value.context());
  if (i > j) {
    if (!value.is_zero())
      throw Error(Errc::BadIndex, "entry below the diagonal must be zero");
    return;
  }
  data_[index(i, j)] = value.residue();
}

std::vector<PadicInt> UTWindow::column(int j) const {
  std::vector<PadicInt> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 0; i < size_; ++i) out.push_back((*this)(i, j));
  return out;
}

UTWindow UTWindow::leading(int w) const {
  if (w < 1 || w > size_)
    throw Error(Errc::SizeMismatch, "sub-window " + std::to_string(w) +
                                        " of window " + std::to_string(size_));
  UTWindow out(*ctx_, w);
  for (int i = 0; i < w; ++i)
    for (int j = i; j < w; ++j) out.data_[out.index(i, j)] = data_[index(i, j)];
  return out;
}

void require_compatible(const UTWindow& a, const UTWindow& b) {
  require_same_context(a.context(), b.context());
  if (a.size() != b.size())
    throw Error(Errc::SizeMismatch, std::to_string(a.size()) + " vs " +
                                        std::to_string(b.size()));
}

UTWindow operator+(const UTWindow& a, const UTWindow& b) {
  require_compatible(a, b);
  UTWindow out(a);
  const std::uint64_t m = a.ctx_->modulus();
  for (std::size_t k = 0; k < out.data_.size(); ++k)
    out.data_[k] = addmod(a.data_[k], b.data_[k], m);
  return out;
}

UTWindow operator-(const UTWindow& a, const UTWindow& b) {
  require_compatible(a, b);
  UTWindow out(a);
  const std::uint64_t m = a.ctx_->modulus();
  for (std::size_t k = 0; k < out.data_.size(); ++k)
    out.data_[k] = submod(a.data_[k], b.data_[k], m);
  return out;
}

UTWindow operator*(const PadicInt& s, const UTWindow& a) {
  require_same_context(s.context(), *a.ctx_);
  UTWindow out(a);
  const std::uint64_t m = a.ctx_->modulus();
  for (auto& x : out.data_) x = mulmod(x, s.residue(), m);
  return out;
}

UTWindow operator*(const UTWindow& a, const UTWindow& b) {
  require_compatible(a, b);
  UTWindow out(*a.ctx_, a.size_);
  const std::uint64_t m = a.ctx_->modulus();
  const int w = a.size_;
  for (int i = 0; i < w; ++i)
    for (int j = i; j < w; ++j) {
      std::uint64_t acc = 0;
      for (int k = i; k <= j; ++k)
        acc = addmod(acc, mulmod(a.data_[a.index(i, k)], b.data_[b.index(k, j)], m), m);
      out.data_[out.index(i, j)] = acc;
    }
  return out;
}

UTWindow mul(const UTWindow& a, const UTWindow& b) { return a * b; }

UTWindow inverse(const UTWindow& a) {
  const PadicContext& ctx = a.context();
  const int w = a.size();
  std::vector<PadicInt> diag_inv;
  diag_inv.reserve(static_cast<std::size_t>(w));
  for (int i = 0; i < w; ++i) {
    const PadicInt d = a(i, i);
    if (!d.is_unit())
      throw Error(Errc::NotInvertible,
                  "diagonal entry (" + std::to_string(i) + ", " +
                      std::to_string(i) + ") = " + d.to_string() +
                      " is not a unit");
    diag_inv.push_back(d.inv_unit());
  }
  UTWindow out(ctx, w);
  for (int j = 0; j < w; ++j) {
    out.set(j, j, diag_inv[j]);
    for (int i = j - 1; i >= 0; --i) {
      PadicInt acc = ctx.zero();
      for (int k = i + 1; k <= j; ++k) acc += a(i, k) * out(k, j);
      out.set(i, j, -(diag_inv[i] * acc));
    }
  }
  return out;
}

UTWindow power(const UTWindow& a, std::uint64_t n) {
  UTWindow result = UTWindow::identity(a.context(), a.size());
  UTWindow base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Membership membership(const UTWindow& a) {
  Membership m{true, true};
  const std::uint64_t p = a.context().prime();
  for (int i = 0; i < a.size(); ++i) {
    const std::uint64_t r = a(i, i).residue();
    if (r % p == 0) m.is_invertible = false;
    if (r % p != 1) m.is_in_U_infty = false;
  }
  return m;
}

int filtration_level(const UTWindow& a) {
  for (int j = 0; j < a.size(); ++j)
    for (int i = 0; i <= j; ++i)
      if (!a(i, j).is_zero()) return j;
  return a.size();
}

}  // namespace utt
