#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "centra/field.hpp"

namespace centra {

/// Dense univariate polynomial over an exact field. Coefficients are stored
/// 0-based: coeff(i) is the coefficient of t^i, with trailing zeros trimmed,
/// so the last stored coefficient is nonzero unless the polynomial is zero.
class Poly {
 public:
  /// The zero polynomial over the given field.
  explicit Poly(const FieldSpec& spec) : spec_(spec) {}
  /// From a coefficient sequence (index i = coefficient of t^i); trailing
  /// zeros are trimmed.
  Poly(const FieldSpec& spec, std::vector<FieldElem> coeffs);

  static Poly constant(FieldElem c);
  static Poly t(const FieldSpec& spec);
  /// c * t^i
  static Poly monomial(FieldElem c, std::size_t i);

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  /// Coefficient of t^i (zero beyond the degree).
  FieldElem coeff(std::size_t i) const;
  FieldElem leading_coeff() const;

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator*(const FieldElem& scalar) const;
  Poly operator-() const;
  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

  /// Multiplication by t^i.
  Poly shifted(std::size_t i) const;
  /// True iff t^k divides this polynomial (always true for the zero poly).
  bool divisible_by_power(std::size_t k) const;
  FieldElem evaluate(const FieldElem& x) const;
  Poly monic() const;  // throws std::domain_error on the zero polynomial
  /// Exact division with remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  /// "a0 + a1*t + a2*t^2" with zero terms skipped and unit coefficients
  /// elided; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();

  FieldSpec spec_;
  std::vector<FieldElem> coeffs_;
};

/// The k-cut of f: the terms of degree < k, i.e. coefficients of t^0..t^{k-1}.
/// Requires k >= 1.
Poly poly_cut(const Poly& f, std::size_t k);

}  // namespace centra
