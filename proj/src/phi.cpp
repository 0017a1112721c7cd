#include "centra/phi.hpp"

#include <stdexcept>

namespace centra {

PolyVector::PolyVector(const FieldSpec& spec, std::vector<Poly> entries)
    : spec_(spec), entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("empty polynomial vector");
  for (const auto& p : entries_) {
    if (p.spec() != spec_)
      throw std::invalid_argument("polynomial vector entry from wrong field");
  }
}

PolyVector PolyVector::zero(const FieldSpec& spec, std::size_t m) {
  return PolyVector(spec, std::vector<Poly>(m, Poly(spec)));
}

PolyVector PolyVector::unit(const FieldSpec& spec, std::size_t m,
                            std::size_t delta) {
  if (delta >= m) throw std::out_of_range("unit index out of range");
  std::vector<Poly> entries(m, Poly(spec));
  entries[delta] = Poly::constant(FieldElem::one(spec));
  return PolyVector(spec, std::move(entries));
}

PolyVector PolyVector::operator+(const PolyVector& other) const {
  if (size() != other.size() || spec_ != other.spec_)
    throw std::invalid_argument("polynomial vector length mismatch");
  std::vector<Poly> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(entries_[i] + other.entries_[i]);
  return PolyVector(spec_, std::move(out));
}

PolyVector operator*(const Poly& g, const PolyVector& f) {
  std::vector<Poly> out;
  out.reserve(f.size());
  for (const auto& p : f.entries_) out.push_back(g * p);
  return PolyVector(f.spec_, std::move(out));
}

bool PolyVector::operator==(const PolyVector& other) const {
  return spec_ == other.spec_ && entries_ == other.entries_;
}

Vector phi_map(const JordanBase& base, const PolyVector& f) {
  if (f.size() != base.block_count())
    throw std::invalid_argument("polynomial vector length != block count");
  Vector acc = Vector::zero(base.spec(), base.dimension());
  for (std::size_t gamma = 0; gamma < f.size(); ++gamma) {
    if (f[gamma].is_zero()) continue;
    acc = acc + poly_apply(f[gamma], base.phi(), base.head(gamma));
  }
  return acc;
}

PolyVector phi_preimage(const JordanBase& base, const Vector& u) {
  if (u.size() != base.dimension() || u.spec() != base.spec())
    throw std::invalid_argument("vector dimension mismatch");
  // Chain coordinates a_{gamma,i} of u; coordinate i becomes the t^i
  // coefficient of f_gamma, so deg f_gamma <= k_gamma - 1 automatically.
  const Vector coords = base.chain_matrix_inverse() * u;
  std::vector<Poly> entries;
  entries.reserve(base.block_count());
  for (std::size_t gamma = 0; gamma < base.block_count(); ++gamma) {
    const std::size_t off = base.offset(gamma);
    const std::size_t k = base.sizes()[gamma];
    std::vector<FieldElem> coeffs;
    coeffs.reserve(k);
    for (std::size_t i = 0; i < k; ++i) coeffs.push_back(coords[off + i]);
    entries.emplace_back(base.spec(), std::move(coeffs));
  }
  return PolyVector(base.spec(), std::move(entries));
}

bool in_ker_phi(const PolyVector& f, const std::vector<std::size_t>& sizes) {
  if (f.size() != sizes.size())
    throw std::invalid_argument("size list length mismatch");
  for (std::size_t gamma = 0; gamma < sizes.size(); ++gamma) {
    if (!f[gamma].divisible_by_power(sizes[gamma])) return false;
  }
  return true;
}

PolyVector vector_cut(const PolyVector& f, const std::vector<std::size_t>& sizes) {
  if (f.size() != sizes.size())
    throw std::invalid_argument("size list length mismatch");
  std::vector<Poly> out;
  out.reserve(f.size());
  for (std::size_t gamma = 0; gamma < sizes.size(); ++gamma)
    out.push_back(poly_cut(f[gamma], sizes[gamma]));
  return PolyVector(f.spec(), std::move(out));
}

}  // namespace centra
