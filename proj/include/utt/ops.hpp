#pragma once

#include <span>

#include "utt/padic.hpp"
#include "utt/utmat.hpp"

// Matrices of the Adams operation and its polynomial operations.
//
// All matrices are 0-based. Closed entry formulas that are usually written
// with 1-based row labels go through row_exponent() below, which is the only
// place the index translation happens.
namespace utt::ops {

enum class BasicKind { Diagonal, Shift, Adams };

/// Diagonal: diag(1, q_hat, q_hat^2, ...). Shift: ones on the superdiagonal.
/// Adams: Diagonal + Shift, the matrix of the Adams operation.
UTWindow build_basic(const PadicContext& ctx, BasicKind kind, int size);

inline UTWindow diagonal_powers(const PadicContext& ctx, int size) {
  return build_basic(ctx, BasicKind::Diagonal, size);
}
inline UTWindow shift(const PadicContext& ctx, int size) {
  return build_basic(ctx, BasicKind::Shift, size);
}
inline UTWindow adams(const PadicContext& ctx, int size) {
  return build_basic(ctx, BasicKind::Adams, size);
}

/// Adams matrix minus q_hat^(n-1) I, for n >= 1 (BadIndex otherwise). Its
/// diagonal vanishes at row n - 1.
UTWindow shifted_adams(const PadicContext& ctx, int n, int size);

/// Ordered product of shifted_adams(1) ... shifted_adams(n); identity for
/// n = 0. This is the matrix of (Psi - 1)(Psi - q_hat)...(Psi - q_hat^(n-1)).
UTWindow phi_matrix(const PadicContext& ctx, int n, int size);

/// Exponent multiplier contributed by 0-based row s in the closed formulas:
/// (D^i S^j)_{s, s+j} = q_hat^(row_exponent(s) * i).
constexpr int row_exponent(int s) noexcept { return s; }

/// Closed form for (Adams^n)_{s, s+c}: [n, n-c]_{q_hat} q_hat^(s(n-c)),
/// zero when c < 0 or c > n.
PadicInt adams_power_entry(const PadicContext& ctx, int n, int s, int c);

/// Closed form for (phi_matrix(n))_{s, s+c}, n >= 1:
///   sum_{i=c}^{n} (-1)^(n-i) q_hat^(C(n-i,2) + s(i-c)) [n,i] [i,i-c],
/// zero when c < 0 or c > n.
PadicInt phi_entry(const PadicContext& ctx, int n, int s, int c);

/// phi_matrix(n) through the alternating expansion
///   sum_{i=0}^{n} (-1)^(n-i) q_hat^C(n-i,2) [n,i]_{q_hat} Adams^i,
/// with the powers of Adams taken by repeated squaring.
UTWindow phi_matrix_expanded(const PadicContext& ctx, int n, int size);

/// Image of sum_n a_n phi_n in the matrix ring: sum_n a_n phi_matrix(n).
/// Each phi_matrix(n) is checked to have at least n leading zero columns,
/// and terms with n >= size are skipped since they vanish on the window.
UTWindow operation_map(std::span<const PadicInt> coeffs, int size);

}  // namespace utt::ops
