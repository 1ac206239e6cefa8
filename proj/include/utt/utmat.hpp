#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "utt/padic.hpp"

namespace utt {

/// Leading W x W window of an infinite upper-triangular matrix over Z_p,
/// 0-based, packed row-major over the entries with i <= j.
///
/// Upper-triangular products and inverses restrict exactly to leading
/// windows: (AB)_{i,j} only involves indices k with i <= k <= j < W.
class UTWindow {
 public:
  using Generator = std::function<PadicInt(int, int)>;

  /// Zero window.
  UTWindow(const PadicContext& ctx, int size);

  static UTWindow identity(const PadicContext& ctx, int size);
  /// gen is only ever called with i <= j.
  static UTWindow from_fn(const PadicContext& ctx, int size,
                          const Generator& gen);
  static UTWindow diagonal(std::span<const PadicInt> entries);

  const PadicContext& context() const noexcept { return *ctx_; }
  int size() const noexcept { return size_; }

  /// Zero below the diagonal.
  PadicInt operator()(int i, int j) const;
  void set(int i, int j, const PadicInt& value);

  std::vector<PadicInt> column(int j) const;
  /// Leading sub-window of size w <= size().
  UTWindow leading(int w) const;

  friend UTWindow operator+(const UTWindow& a, const UTWindow& b);
  friend UTWindow operator-(const UTWindow& a, const UTWindow& b);
  friend UTWindow operator*(const UTWindow& a, const UTWindow& b);
  friend UTWindow operator*(const PadicInt& s, const UTWindow& a);
  UTWindow& operator+=(const UTWindow& b) { return *this = *this + b; }

  friend bool operator==(const UTWindow& a, const UTWindow& b) {
    return a.ctx_ == b.ctx_ && a.size_ == b.size_ && a.data_ == b.data_;
  }

 private:
  std::size_t index(int i, int j) const noexcept {
    const auto ui = static_cast<std::size_t>(i);
    return ui * static_cast<std::size_t>(size_) - ui * (ui - 1) / 2 +
           static_cast<std::size_t>(j - i);
  }
  void check_index(int i, int j) const;

  const PadicContext* ctx_;
  int size_;
  std::vector<std::uint64_t> data_;
};

/// Same context and size, else ContextMismatch / SizeMismatch.
void require_compatible(const UTWindow& a, const UTWindow& b);

UTWindow mul(const UTWindow& a, const UTWindow& b);

/// Column-by-column back substitution; NotInvertible if a diagonal entry is
/// divisible by p.
UTWindow inverse(const UTWindow& a);

/// a^n by repeated squaring.
UTWindow power(const UTWindow& a, std::uint64_t n);

struct Membership {
  bool is_invertible;  // every diagonal entry is a unit
  bool is_in_U_infty;  // every diagonal entry is 1 mod p
};

Membership membership(const UTWindow& a);

/// Number of leading all-zero columns: the largest n <= W with columns
/// 0..n-1 identically zero.
int filtration_level(const UTWindow& a);

}  // namespace utt
