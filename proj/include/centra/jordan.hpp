#pragma once

#include <cstddef>
#include <vector>

#include "centra/errors.hpp"
#include "centra/matrix.hpp"

namespace centra {

/// Multiset of Jordan block sizes, canonically a descending-sorted list.
class BlockProfile {
 public:
  explicit BlockProfile(std::vector<std::size_t> sizes);

  const std::vector<std::size_t>& sizes() const { return sizes_; }
  std::size_t block_count() const { return sizes_.size(); }
  std::size_t total() const;  // ambient dimension

  bool operator==(const BlockProfile& other) const = default;

 private:
  std::vector<std::size_t> sizes_;  // descending
};

/// Nilpotent Jordan normal base of K^d with respect to a nilpotent matrix A:
/// chains x_{g,1}, ..., x_{g,k_g} with A x_{g,i} = x_{g,i+1} and
/// A x_{g,k_g} = 0, whose union is a basis of K^d. Blocks are stored with
/// sizes descending; ties keep the order in which chain heads were found.
/// Block indices are 0-based throughout.
class JordanBase {
 public:
  const Matrix& phi() const { return phi_; }
  const FieldSpec& spec() const { return phi_.spec(); }
  std::size_t dimension() const { return dim_; }
  std::size_t block_count() const { return chains_.size(); }
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  const std::vector<std::vector<Vector>>& chains() const { return chains_; }

  /// x_{gamma, i} with i 0-based (i = 0 is the chain head x_{gamma,1}).
  const Vector& chain_vector(std::size_t gamma, std::size_t i) const;
  const Vector& head(std::size_t gamma) const { return chain_vector(gamma, 0); }

  /// Change-of-basis matrix C whose columns are the chain vectors, blocks
  /// consecutive in canonical order; C^{-1} A C is the Jordan form.
  const Matrix& chain_matrix() const { return chain_matrix_; }
  const Matrix& chain_matrix_inverse() const { return chain_matrix_inv_; }

  /// Column offset of block gamma inside chain_matrix().
  std::size_t offset(std::size_t gamma) const;

  /// Conjugates S into chain coordinates (C^{-1} S C); for S in the
  /// centralizer this exposes the triangularly striped block shape.
  Matrix to_chain_coordinates(const Matrix& S) const;

  friend JordanBase jordan_base(const Matrix& A);

 private:
  JordanBase(Matrix phi, std::vector<std::vector<Vector>> chains);

  Matrix phi_;
  std::vector<std::vector<Vector>> chains_;
  std::vector<std::size_t> sizes_;
  std::size_t dim_;
  Matrix chain_matrix_;
  Matrix chain_matrix_inv_;
};

/// Smallest n >= 1 with A^n = 0; throws NotNilpotent if A^d != 0.
std::size_t nilpotency_index(const Matrix& A);

/// Builds a nilpotent Jordan normal base by the kernel-filtration chain
/// construction: chain heads are picked from the top filtration layer
/// downwards, extended by images under A, with lower layers completed
/// using deterministic pivot choices.
JordanBase jordan_base(const Matrix& A);

BlockProfile block_profile(const JordanBase& base);

/// True iff A^{d-1} != 0, i.e. the Jordan base consists of a single block
/// and A is an indecomposable nilpotent element of the matrix ring.
bool is_indecomposable(const Matrix& A);

/// Projection onto the span of chain delta (0-based) along the span of all
/// other chains; idempotent and commuting with A.
Matrix block_projection(const JordanBase& base, std::size_t delta);

}  // namespace centra
