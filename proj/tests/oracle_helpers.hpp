#pragma once

// Independent test oracles. These deliberately avoid the library's own
// construction paths: block profiles come from the rank filtration and the
// standard polynomial from direct permutation enumeration, so they can
// catch bugs in the production algorithms.

#include <algorithm>
#include <numeric>
#include <vector>

#include "centra/matrix.hpp"

namespace centra::testing {

/// Block profile of a nilpotent matrix from rank differences alone:
/// #blocks of size >= j equals rank(A^{j-1}) - rank(A^j).
inline std::vector<std::size_t> profile_from_ranks(const Matrix& A) {
  const std::size_t d = A.rows();
  std::vector<std::size_t> ranks = {d};  // rank of A^0
  Matrix power = Matrix::identity(A.spec(), d);
  do {
    power = power * A;
    ranks.push_back(power.rank());
  } while (ranks.back() != 0);

  std::vector<std::size_t> profile;
  for (std::size_t j = 1; j + 1 <= ranks.size(); ++j) {
    const std::size_t at_least_j = ranks[j - 1] - ranks[j];
    const std::size_t at_least_j1 =
        j + 1 < ranks.size() ? ranks[j] - ranks[j + 1] : 0;
    for (std::size_t c = at_least_j1; c < at_least_j; ++c) profile.push_back(j);
  }
  std::sort(profile.begin(), profile.end(), std::greater<>());
  return profile;
}

/// Direct permutation-sum evaluation of the standard polynomial, with the
/// sign computed by inversion counting. Exponential; use for n <= 4.
inline Matrix naive_standard_polynomial(const std::vector<Matrix>& args) {
  const std::size_t n = args.size();
  const FieldSpec& spec = args.front().spec();
  const std::size_t d = args.front().rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Matrix acc = Matrix::zero(spec, d, d);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Matrix prod = Matrix::identity(spec, d);
    for (std::size_t i = 0; i < n; ++i) prod = prod * args[perm[i]];
    acc = (inversions % 2 == 0) ? acc + prod : acc - prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

}  // namespace centra::testing
