#include "centra/pi_check.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace centra {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 step over seed ^ stream; stable across platforms
  std::uint64_t z = seed ^ (stream + 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

FieldElem random_coefficient(const FieldSpec& spec, std::mt19937_64& rng) {
  if (spec.is_prime_field())
    return FieldElem::from_int(
        spec, static_cast<long long>(rng() % spec.modulus()));
  return FieldElem::from_int(spec, static_cast<long long>(rng() % 19) - 9);
}

}  // namespace

Matrix standard_polynomial(const std::vector<Matrix>& args,
                           std::size_t degree_cap) {
  const std::size_t n = args.size();
  if (n == 0) throw std::invalid_argument("standard polynomial needs arguments");
  if (n > degree_cap)
    throw DegreeCapExceeded("standard polynomial degree " + std::to_string(n) +
                            " exceeds the cap " + std::to_string(degree_cap));
  const Matrix& first = args.front();
  if (!first.is_square()) throw std::invalid_argument("arguments must be square");
  for (const Matrix& m : args) {
    if (m.rows() != first.rows() || m.cols() != first.cols() ||
        m.spec() != first.spec())
      throw std::invalid_argument("argument shape or field mismatch");
  }
  const FieldSpec& spec = first.spec();
  const std::size_t d = first.rows();

  // G(S) = sum over orderings of S of sign(ordering) * product. Appending
  // j to an ordering of S \ {j} contributes the fixed sign
  // (-1)^{#{i in S, i > j}}, so G(S) = sum_j (+-) G(S \ {j}) A_j.
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<Matrix> g(full + 1, Matrix::zero(spec, d, d));
  g[0] = Matrix::identity(spec, d);
  for (std::size_t s = 1; s <= full; ++s) {
    Matrix acc = Matrix::zero(spec, d, d);
    for (std::size_t j = 0; j < n; ++j) {
      if (!(s & (std::size_t{1} << j))) continue;
      const std::size_t rest = s & ~(std::size_t{1} << j);
      const Matrix term = g[rest] * args[j];
      const std::size_t larger = std::popcount(rest >> (j + 1));
      acc = (larger % 2 == 0) ? acc + term : acc - term;
    }
    g[s] = std::move(acc);
  }
  return g[full];
}

IdentityReport fuzz_identity(const std::vector<Matrix>& basis,
                             std::size_t degree, std::size_t trials,
                             std::uint64_t seed, std::size_t degree_cap) {
  if (basis.empty()) throw std::invalid_argument("empty basis");
  if (degree == 0 || degree > degree_cap)
    throw DegreeCapExceeded("fuzz degree " + std::to_string(degree) +
                            " outside (0, " + std::to_string(degree_cap) + "]");
  const Matrix& first = basis.front();
  const FieldSpec& spec = first.spec();
  const std::size_t d = first.rows();

  IdentityReport report;
  report.degree = degree;
  report.trials = trials;
  report.seed = seed;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(mix_seed(seed, trial));
    std::vector<Matrix> tuple;
    tuple.reserve(degree);
    for (std::size_t arg = 0; arg < degree; ++arg) {
      Matrix combo = Matrix::zero(spec, d, d);
      for (const Matrix& b : basis) combo = combo + b * random_coefficient(spec, rng);
      tuple.push_back(std::move(combo));
    }
    if (!standard_polynomial(tuple, degree_cap).is_zero()) {
      ++report.violations;
      if (!report.first_witness) report.first_witness = std::move(tuple);
    }
  }
  return report;
}

}  // namespace centra
