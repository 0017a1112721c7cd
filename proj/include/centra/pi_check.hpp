#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "centra/errors.hpp"
#include "centra/matrix.hpp"

namespace centra {

/// Permutation-count cap for standard_polynomial; n! products become
/// intractable quickly. Configurable per call.
inline constexpr std::size_t kDefaultDegreeCap = 8;

/// The standard polynomial S_n(X_1,...,X_n) = sum_sigma sign(sigma)
/// X_{sigma(1)} ... X_{sigma(n)}, evaluated exactly. Computed by a
/// subset-sum recurrence (the appended-element sign depends only on the
/// index set, not on the ordering), which agrees term-for-term with the
/// permutation sum at a fraction of the cost. Throws DegreeCapExceeded when
/// n exceeds the cap and std::invalid_argument on shape mismatches.
Matrix standard_polynomial(const std::vector<Matrix>& args,
                           std::size_t degree_cap = kDefaultDegreeCap);

struct IdentityReport {
  std::size_t degree = 0;
  std::size_t trials = 0;
  std::size_t violations = 0;
  /// Lowest-index violating argument tuple; present iff violations > 0.
  std::optional<std::vector<Matrix>> first_witness;
  std::uint64_t seed = 0;
};

/// Draws `trials` tuples of `degree` random elements of the span of
/// `basis` (coefficients uniform over F_p; integers in [-9, 9] over Q,
/// derived deterministically from (seed, trial index)) and evaluates the
/// standard polynomial on each tuple.
IdentityReport fuzz_identity(const std::vector<Matrix>& basis,
                             std::size_t degree, std::size_t trials,
                             std::uint64_t seed,
                             std::size_t degree_cap = kDefaultDegreeCap);

}  // namespace centra
