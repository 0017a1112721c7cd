#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "centra/phi.hpp"

namespace centra {

/// Square matrix over K[t], indexed (row delta, column gamma), acting on
/// PolyVector row vectors from the right.
class PolyMatrix {
 public:
  /// Zero matrix of size m x m.
  PolyMatrix(const FieldSpec& spec, std::size_t m);

  static PolyMatrix identity(const FieldSpec& spec, std::size_t m);
  /// Standard matrix unit E_{delta,gamma} (0-based).
  static PolyMatrix unit(const FieldSpec& spec, std::size_t m, std::size_t delta,
                         std::size_t gamma);
  /// t^i E_{delta,gamma}.
  static PolyMatrix scaled_unit(const FieldSpec& spec, std::size_t m,
                                std::size_t delta, std::size_t gamma,
                                std::size_t i);
  /// h(t) * I.
  static PolyMatrix scalar(const Poly& h, std::size_t m);

  const FieldSpec& spec() const { return spec_; }
  std::size_t size() const { return m_; }
  const Poly& at(std::size_t delta, std::size_t gamma) const;
  Poly& at(std::size_t delta, std::size_t gamma);
  PolyVector row(std::size_t delta) const;

  PolyMatrix operator+(const PolyMatrix& other) const;
  PolyMatrix operator*(const PolyMatrix& other) const;
  PolyMatrix operator*(const Poly& scalar) const;
  bool operator==(const PolyMatrix& other) const;
  bool operator!=(const PolyMatrix& other) const { return !(*this == other); }

 private:
  FieldSpec spec_;
  std::size_t m_;
  std::vector<Poly> entries_;  // row-major
};

/// Row vector times polynomial matrix: (f P)_gamma = sum_delta f_delta p_{delta,gamma}.
PolyVector operator*(const PolyVector& f, const PolyMatrix& P);

/// Membership in M(Phi) over a field, by the closed-form divisibility
/// criterion: t^{max(0, k_gamma - k_delta)} divides p_{delta,gamma} for all
/// delta, gamma.
bool in_M_phi(const PolyMatrix& P, const std::vector<std::size_t>& sizes);

/// The definitional membership test, reduced to the kernel generators
/// e_delta t^{k_delta}: P is in M(Phi) iff every generator stays in
/// ker(Phi) after right multiplication by P. Cross-check for in_M_phi.
bool in_M_phi_via_kernel_generators(const PolyMatrix& P,
                                    const std::vector<std::size_t>& sizes);

/// Membership in V(k_gamma): every column-gamma entry has degree <= k_gamma - 1.
bool in_V(const PolyMatrix& P, const std::vector<std::size_t>& sizes);

/// The endomorphism psi_P with psi_P(Phi(f)) = Phi(f P), materialized in the
/// ambient standard basis. Requires P in M(Phi) (throws NotInMPhi), since
/// the formula is only well defined there. The assignment P -> psi_P is an
/// anti-homomorphism: psi_{PQ} = psi_Q psi_P.
Matrix psi_from_P(const JordanBase& base, const PolyMatrix& P);

/// Inverse direction: a matrix P in M(Phi) n V with psi_P = S, with rows the
/// cut preimages of S x_{delta,1}. Throws NotInCentralizer if S does not
/// commute with the base's endomorphism.
PolyMatrix P_from_psi(const JordanBase& base, const Matrix& S);

struct CentralizerElement {
  std::size_t delta;
  std::size_t gamma;
  std::size_t power;  // i in psi_{t^i E_{delta,gamma}}
  Matrix matrix;
};

/// Explicit basis {psi_{t^i E_{delta,gamma}} : max(0, k_gamma - k_delta) <= i
/// <= k_gamma - 1} of the centralizer of a nilpotent matrix;
/// |basis| = sum_{delta,gamma} min(k_delta, k_gamma).
class CentralizerBasis {
 public:
  CentralizerBasis(JordanBase base, std::vector<CentralizerElement> elements)
      : base_(std::move(base)), elements_(std::move(elements)) {}

  const JordanBase& base() const { return base_; }
  const std::vector<CentralizerElement>& elements() const& { return elements_; }
  // rvalue overload returns by value so iterating a temporary basis is safe
  std::vector<CentralizerElement> elements() && { return std::move(elements_); }
  std::size_t dimension() const { return elements_.size(); }
  std::vector<Matrix> matrices() const;

 private:
  JordanBase base_;
  std::vector<CentralizerElement> elements_;
};

CentralizerBasis centralizer_basis(const JordanBase& base);

/// s(1) + 3 s(2) + ... + (2m-1) s(m) for a descending size list; throws
/// std::invalid_argument if the list is not sorted descending.
std::size_t dim_formula(const std::vector<std::size_t>& descending_sizes);
std::size_t dim_formula(const BlockProfile& profile);

/// sum_{delta,gamma} min(k_delta, k_gamma); the generator-count route to the
/// centralizer dimension.
std::size_t min_pair_sum(const std::vector<std::size_t>& sizes);

/// Coefficients h with S = h(A) and deg h < deg minimal_polynomial(A), if S
/// is a polynomial in A; solved as an exact linear system over the full
/// standard basis. Over a commutative base field the two-sided
/// generating-set condition for centralizer membership collapses to this
/// scalar-coefficient form.
std::optional<Poly> polynomial_coeffs(const Matrix& A, const Matrix& S);

struct Containment {
  bool contained;
  std::optional<Poly> certificate;  // h with h(A) = B when contained
};

/// Decides C_A <= C_B for nilpotent A by the direct route (every centralizer
/// basis element commutes with B) and independently by the polynomial
/// certificate route; the two must agree.
Containment containment(const Matrix& A, const Matrix& B);

struct BoundCheck {
  std::size_t dim;    // sum min(k_delta, k_gamma)
  std::size_t bound;  // m * d
};

/// Centralizer dimension against the upper bound m*d (m = block count,
/// d = ambient dimension); dim <= bound always, with equality iff all
/// blocks share one size.
BoundCheck bound_check(const JordanBase& base);

}  // namespace centra
