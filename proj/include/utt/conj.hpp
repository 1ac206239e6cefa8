#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "utt/utmat.hpp"

// Conjugating the matrix of the Adams operation into normal form.
//
// An A-form matrix has diagonal q_hat^i and unit superdiagonal entries; the
// entries above the superdiagonal are arbitrary. A diagonal change of basis
// turns its superdiagonal into ones (C-form), and a recursively defined
// upper-triangular U then conjugates C to the Adams matrix: U C = R U.
namespace utt::conj {

/// Validated A-form window.
class AFormMatrix {
 public:
  /// Throws BadIndex if the diagonal is not q_hat^i, NotAUnit if a
  /// superdiagonal entry is divisible by p.
  explicit AFormMatrix(UTWindow window);

  /// Seeded random instance: uniform units on the superdiagonal and uniform
  /// residues above it.
  static AFormMatrix random(const PadicContext& ctx, int size,
                            std::mt19937_64& rng);

  const UTWindow& window() const noexcept { return window_; }
  int size() const noexcept { return window_.size(); }
  std::vector<PadicInt> superdiagonal() const;

 private:
  UTWindow window_;
};

/// Validated C-form window (diagonal q_hat^i, superdiagonal 1).
class CFormMatrix {
 public:
  explicit CFormMatrix(UTWindow window);

  static CFormMatrix random(const PadicContext& ctx, int size,
                            std::mt19937_64& rng);

  const UTWindow& window() const noexcept { return window_; }
  int size() const noexcept { return window_.size(); }

 private:
  UTWindow window_;
};

/// diag(1, u_0, u_0 u_1, ..., u_0...u_{size-2}). Needs size - 1 units.
UTWindow normalizer(std::span<const PadicInt> superdiag_units, int size);

/// E A E^-1 for the normalizer E of A's superdiagonal.
CFormMatrix normalize_superdiagonal(const AFormMatrix& a);

/// The conjugator with first row (1, 0, 0, ...) and
///   U_{i+1,j} = sum_{s=i}^{j-2} U_{i,s} c_{s,j} + U_{i,j-1}
///               + (q_hat^j - q_hat^i) U_{i,j}.
/// The recursion is run on the full square and the result is checked to be
/// upper triangular with unit diagonal; a violation throws std::logic_error.
UTWindow conjugator(const CFormMatrix& c);

struct ConjugationReport {
  int size = 0;
  int mismatched_entries = 0;
  /// Smallest valuation among the entries of U C - R U; N when they all
  /// vanish.
  int min_difference_valuation = 0;
  bool conjugator_invertible = false;
  bool conjugator_in_U_infty = false;

  bool passed() const noexcept {
    return mismatched_entries == 0 && conjugator_invertible;
  }
};

/// Builds U and compares U C with R U on every window entry.
ConjugationReport verify_conjugation(const CFormMatrix& c);

/// B = U E for an A-form matrix, so that B A B^-1 is the Adams matrix.
UTWindow full_conjugator(const AFormMatrix& a);

}  // namespace utt::conj
