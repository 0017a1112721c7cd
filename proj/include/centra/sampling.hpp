#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "centra/matrix.hpp"

namespace centra {

/// Nilpotent Jordan block of size n in chain convention: e_i -> e_{i+1},
/// e_n -> 0 (the lower shift matrix).
Matrix jordan_nilpotent_block(const FieldSpec& spec, std::size_t n);

/// Block-diagonal assembly.
Matrix block_diag(const std::vector<Matrix>& blocks);

/// Deterministic seeded source of exact-field test data. Identical seeds
/// produce identical instances on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  /// Substream derived from (seed, stream); used to decouple checks.
  Sampler(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64() { return rng_(); }
  std::size_t below(std::size_t n);                // [0, n)
  long long int_in(long long lo, long long hi);    // inclusive

  /// Uniform residue over F_p; small integer (in [-9, 9]) over Q.
  FieldElem field_elem(const FieldSpec& spec);
  FieldElem nonzero_field_elem(const FieldSpec& spec);

  Poly poly(const FieldSpec& spec, std::size_t max_degree);
  Vector vector(const FieldSpec& spec, std::size_t d);
  Matrix matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols);
  /// Rejection-sampled invertible matrix.
  Matrix invertible(const FieldSpec& spec, std::size_t n);

  /// Uniform random partition of n (descending part list).
  std::vector<std::size_t> partition(std::size_t n);

  /// Nilpotent matrix with the given block profile, optionally conjugated
  /// by a random invertible matrix.
  Matrix nilpotent_with_profile(const FieldSpec& spec,
                                const std::vector<std::size_t>& sizes,
                                bool conjugate);
  /// Random-profile conjugated nilpotent of dimension in [1, max_dim].
  Matrix nilpotent(const FieldSpec& spec, std::size_t max_dim);

  /// Conjugated block-diagonal matrix with 1..max_eigenvalues distinct
  /// planted eigenvalues and random Jordan structure; its characteristic
  /// polynomial splits by construction. Dimension in [1, max_dim].
  Matrix split_matrix(const FieldSpec& spec, std::size_t max_dim,
                      std::size_t max_eigenvalues = 3);

 private:
  std::mt19937_64 rng_;
};

}  // namespace centra
