#include "centra/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace centra {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

Matrix jordan_nilpotent_block(const FieldSpec& spec, std::size_t n) {
  Matrix m(spec, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    m.at(i + 1, i) = FieldElem::one(spec);
  return m;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("no blocks");
  const FieldSpec& spec = blocks.front().spec();
  std::size_t d = 0;
  for (const Matrix& b : blocks) {
    if (!b.is_square() || b.spec() != spec)
      throw std::invalid_argument("blocks must be square over one field");
    d += b.rows();
  }
  Matrix out(spec, d, d);
  std::size_t off = 0;
  for (const Matrix& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(off + i, off + j) = b.at(i, j);
    off += b.rows();
  }
  return out;
}

Sampler::Sampler(std::uint64_t seed, std::uint64_t stream)
    : rng_(splitmix(seed ^ splitmix(stream))) {}

std::size_t Sampler::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("below(0)");
  return static_cast<std::size_t>(rng_() % n);
}

long long Sampler::int_in(long long lo, long long hi) {
  return lo + static_cast<long long>(
                  rng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

FieldElem Sampler::field_elem(const FieldSpec& spec) {
  if (spec.is_prime_field())
    return FieldElem::from_int(spec,
                               static_cast<long long>(rng_() % spec.modulus()));
  return FieldElem::from_int(spec, int_in(-9, 9));
}

FieldElem Sampler::nonzero_field_elem(const FieldSpec& spec) {
  for (;;) {
    FieldElem e = field_elem(spec);
    if (!e.is_zero()) return e;
  }
}

Poly Sampler::poly(const FieldSpec& spec, std::size_t max_degree) {
  std::vector<FieldElem> coeffs;
  coeffs.reserve(max_degree + 1);
  for (std::size_t i = 0; i <= max_degree; ++i) coeffs.push_back(field_elem(spec));
  return Poly(spec, std::move(coeffs));
}

Vector Sampler::vector(const FieldSpec& spec, std::size_t d) {
  std::vector<FieldElem> entries;
  entries.reserve(d);
  for (std::size_t i = 0; i < d; ++i) entries.push_back(field_elem(spec));
  return Vector(spec, std::move(entries));
}

Matrix Sampler::matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols) {
  Matrix m(spec, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = field_elem(spec);
  return m;
}

Matrix Sampler::invertible(const FieldSpec& spec, std::size_t n) {
  for (;;) {
    // small entries keep rational conjugations tame
    Matrix m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m.at(i, j) = spec.is_prime_field()
                         ? field_elem(spec)
                         : FieldElem::from_int(spec, int_in(-3, 3));
    if (m.rank() == n) return m;
  }
}

std::vector<std::size_t> Sampler::partition(std::size_t n) {
  std::vector<std::size_t> parts;
  std::size_t remaining = n;
  std::size_t cap = n;
  while (remaining > 0) {
    const std::size_t part = 1 + below(std::min(cap, remaining));
    parts.push_back(part);
    remaining -= part;
    cap = part;  // keep descending
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

Matrix Sampler::nilpotent_with_profile(const FieldSpec& spec,
                                       const std::vector<std::size_t>& sizes,
                                       bool conjugate) {
  std::vector<Matrix> blocks;
  blocks.reserve(sizes.size());
  for (std::size_t s : sizes) blocks.push_back(jordan_nilpotent_block(spec, s));
  Matrix j = block_diag(blocks);
  if (!conjugate) return j;
  const Matrix q = invertible(spec, j.rows());
  return q * j * q.inverse();
}

Matrix Sampler::nilpotent(const FieldSpec& spec, std::size_t max_dim) {
  const std::size_t d = 1 + below(max_dim);
  return nilpotent_with_profile(spec, partition(d), true);
}

Matrix Sampler::split_matrix(const FieldSpec& spec, std::size_t max_dim,
                             std::size_t max_eigenvalues) {
  const std::size_t d = 1 + below(max_dim);
  std::size_t count = 1 + below(std::min(max_eigenvalues, d));
  if (spec.is_prime_field()) count = std::min<std::size_t>(count, spec.modulus());

  // distinct eigenvalues, small values over Q
  std::vector<FieldElem> eigenvalues;
  while (eigenvalues.size() < count) {
    const FieldElem lambda =
        spec.is_prime_field()
            ? field_elem(spec)
            : FieldElem::from_int(spec, int_in(-4, 4));
    if (std::find(eigenvalues.begin(), eigenvalues.end(), lambda) ==
        eigenvalues.end())
      eigenvalues.push_back(lambda);
  }

  // split d into `count` positive chunks, a Jordan structure per eigenvalue
  std::vector<std::size_t> chunk(count, 1);
  for (std::size_t extra = d - count; extra > 0; --extra) ++chunk[below(count)];

  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t part : partition(chunk[i])) {
      Matrix b = jordan_nilpotent_block(spec, part);
      for (std::size_t k = 0; k < part; ++k)
        b.at(k, k) = eigenvalues[i];
      blocks.push_back(std::move(b));
    }
  }
  const Matrix j = block_diag(blocks);
  const Matrix q = invertible(spec, j.rows());
  return q * j * q.inverse();
}

}  // namespace centra
