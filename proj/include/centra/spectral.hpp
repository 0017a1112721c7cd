#pragma once

#include <cstddef>
#include <vector>

#include "centra/centralizer.hpp"
#include "centra/errors.hpp"
#include "centra/jordan.hpp"

namespace centra {

/// One generalized eigenspace of a split matrix.
struct SpectralComponent {
  FieldElem eigenvalue;
  /// Columns form a basis of ker(A - lambda I)^{fitting_exponent}.
  Matrix space;
  /// Restriction of A - lambda I to the space, in the space's basis;
  /// always nilpotent.
  Matrix restricted_nilpotent;
  std::size_t geometric_mult;    // dim ker(A - lambda I)
  std::size_t fitting_exponent;  // r with ker^r (+) im^r = K^d
};

/// Full spectral data of a matrix whose characteristic polynomial splits
/// over the base field: eigenvalues in canonical order, generalized
/// eigenspaces, and restricted nilpotent parts. The concatenated space
/// bases form a basis of K^d.
class SpectralDecomposition {
 public:
  SpectralDecomposition(Matrix matrix, std::vector<SpectralComponent> components)
      : matrix_(std::move(matrix)), components_(std::move(components)) {}

  const Matrix& matrix() const { return matrix_; }
  const std::vector<SpectralComponent>& components() const { return components_; }
  std::vector<FieldElem> eigenvalues() const;

 private:
  Matrix matrix_;
  std::vector<SpectralComponent> components_;
};

/// Characteristic polynomial (monic), computed by the Faddeev-LeVerrier
/// recurrence over Q and over F_p with p > d; the division-free Berkowitz
/// expansion covers small characteristics (p <= d), where LeVerrier's
/// divisions by 1..d are unavailable.
Poly characteristic_polynomial(const Matrix& A);

/// Division-free route, exposed for cross-checking.
Poly characteristic_polynomial_berkowitz(const Matrix& A);

/// Smallest r >= 1 with ker(A^r) (+) im(A^r) = K^d, found by rank
/// stabilization of A, A^2, ...
std::size_t fitting_exponent(const Matrix& A);

/// Distinct roots of the characteristic polynomial when it splits into
/// linear factors: exhaustive root scan over F_p (modulus capped at 10^6),
/// rational-root candidates plus repeated deflation over Q. Throws NotSplit
/// carrying a rootless monic factor of degree >= 2 otherwise. Results are
/// sorted in the field's canonical order.
std::vector<FieldElem> split_eigenvalues(const Matrix& A);

/// Generalized eigenspace decomposition: for each eigenvalue lambda_i,
/// the Fitting exponent r_i of A - lambda_i I, a basis of
/// ker(A - lambda_i I)^{r_i}, and the nilpotent restriction.
SpectralDecomposition decompose(const Matrix& A);

/// sum_i dim_formula(block_profile(jordan_base(N_i))): the centralizer
/// dimension assembled from the per-eigenvalue nilpotent parts.
std::size_t centralizer_dim_total(const SpectralDecomposition& dec);

/// 2 * max_i geometric_mult: the degree of the standard identity that
/// vanishes on the centralizer (Amitsur-Levitzki on M_{m x m}(K[t])).
std::size_t pi_degree_bound(const SpectralDecomposition& dec);

}  // namespace centra
