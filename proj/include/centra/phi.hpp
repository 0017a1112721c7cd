#pragma once

#include <cstddef>
#include <vector>

#include "centra/jordan.hpp"
#include "centra/poly.hpp"

namespace centra {

/// Tuple of polynomials, one per Jordan block, ordered as in the JordanBase.
/// Acts as a row vector under the polynomial matrix action.
class PolyVector {
 public:
  PolyVector(const FieldSpec& spec, std::vector<Poly> entries);
  static PolyVector zero(const FieldSpec& spec, std::size_t m);
  /// Unit vector e_delta (delta 0-based).
  static PolyVector unit(const FieldSpec& spec, std::size_t m, std::size_t delta);

  const FieldSpec& spec() const { return spec_; }
  std::size_t size() const { return entries_.size(); }
  const Poly& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Poly>& entries() const { return entries_; }

  PolyVector operator+(const PolyVector& other) const;
  /// Left multiplication by a scalar polynomial g: (g f)_gamma = g * f_gamma.
  friend PolyVector operator*(const Poly& g, const PolyVector& f);
  bool operator==(const PolyVector& other) const;
  bool operator!=(const PolyVector& other) const { return !(*this == other); }

 private:
  FieldSpec spec_;
  std::vector<Poly> entries_;
};

/// Phi(f) = sum_gamma f_gamma(t) * x_{gamma,1}, where * is the module
/// action of K[t] induced by the base's endomorphism.
Vector phi_map(const JordanBase& base, const PolyVector& f);

/// Constructive surjectivity witness: returns f with phi_map(base, f) = u
/// and deg f_gamma <= k_gamma - 1, read off from the chain coordinates of u.
PolyVector phi_preimage(const JordanBase& base, const Vector& u);

/// Field-case kernel test: true iff every f_gamma is divisible by
/// t^{k_gamma}.
bool in_ker_phi(const PolyVector& f, const std::vector<std::size_t>& sizes);

/// Coordinatewise k_gamma-cut; leaves phi_map unchanged.
PolyVector vector_cut(const PolyVector& f, const std::vector<std::size_t>& sizes);

}  // namespace centra
