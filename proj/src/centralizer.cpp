#include "centra/centralizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace centra {

PolyMatrix::PolyMatrix(const FieldSpec& spec, std::size_t m)
    : spec_(spec), m_(m), entries_(m * m, Poly(spec)) {
  if (m == 0) throw std::invalid_argument("empty polynomial matrix");
}

PolyMatrix PolyMatrix::identity(const FieldSpec& spec, std::size_t m) {
  PolyMatrix P(spec, m);
  for (std::size_t i = 0; i < m; ++i)
    P.at(i, i) = Poly::constant(FieldElem::one(spec));
  return P;
}

PolyMatrix PolyMatrix::unit(const FieldSpec& spec, std::size_t m,
                            std::size_t delta, std::size_t gamma) {
  return scaled_unit(spec, m, delta, gamma, 0);
}

PolyMatrix PolyMatrix::scaled_unit(const FieldSpec& spec, std::size_t m,
                                   std::size_t delta, std::size_t gamma,
                                   std::size_t i) {
  PolyMatrix P(spec, m);
  P.at(delta, gamma) = Poly::monomial(FieldElem::one(spec), i);
  return P;
}

PolyMatrix PolyMatrix::scalar(const Poly& h, std::size_t m) {
  PolyMatrix P(h.spec(), m);
  for (std::size_t i = 0; i < m; ++i) P.at(i, i) = h;
  return P;
}

const Poly& PolyMatrix::at(std::size_t delta, std::size_t gamma) const {
  if (delta >= m_ || gamma >= m_) throw std::out_of_range("PolyMatrix index");
  return entries_[delta * m_ + gamma];
}

Poly& PolyMatrix::at(std::size_t delta, std::size_t gamma) {
  if (delta >= m_ || gamma >= m_) throw std::out_of_range("PolyMatrix index");
  return entries_[delta * m_ + gamma];
}

PolyVector PolyMatrix::row(std::size_t delta) const {
  std::vector<Poly> out(entries_.begin() + delta * m_,
                        entries_.begin() + (delta + 1) * m_);
  return PolyVector(spec_, std::move(out));
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const {
  if (spec_ != other.spec_ || m_ != other.m_)
    throw std::invalid_argument("polynomial matrix size mismatch");
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = out.entries_[i] + other.entries_[i];
  return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (spec_ != other.spec_ || m_ != other.m_)
    throw std::invalid_argument("polynomial matrix size mismatch");
  PolyMatrix out(spec_, m_);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t k = 0; k < m_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < m_; ++j)
        out.at(i, j) = out.at(i, j) + at(i, k) * other.at(k, j);
    }
  return out;
}

PolyMatrix PolyMatrix::operator*(const Poly& scalar) const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = e * scalar;
  return out;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return spec_ == other.spec_ && m_ == other.m_ && entries_ == other.entries_;
}

PolyVector operator*(const PolyVector& f, const PolyMatrix& P) {
  if (f.size() != P.size() || f.spec() != P.spec())
    throw std::invalid_argument("row vector / polynomial matrix size mismatch");
  std::vector<Poly> out(P.size(), Poly(P.spec()));
  for (std::size_t delta = 0; delta < P.size(); ++delta) {
    if (f[delta].is_zero()) continue;
    for (std::size_t gamma = 0; gamma < P.size(); ++gamma)
      out[gamma] = out[gamma] + f[delta] * P.at(delta, gamma);
  }
  return PolyVector(P.spec(), std::move(out));
}

bool in_M_phi(const PolyMatrix& P, const std::vector<std::size_t>& sizes) {
  if (sizes.size() != P.size())
    throw std::invalid_argument("size list length mismatch");
  for (std::size_t delta = 0; delta < P.size(); ++delta)
    for (std::size_t gamma = 0; gamma < P.size(); ++gamma) {
      const std::size_t k_d = sizes[delta], k_g = sizes[gamma];
      const std::size_t need = k_g > k_d ? k_g - k_d : 0;
      if (!P.at(delta, gamma).divisible_by_power(need)) return false;
    }
  return true;
}

bool in_M_phi_via_kernel_generators(const PolyMatrix& P,
                                    const std::vector<std::size_t>& sizes) {
  if (sizes.size() != P.size())
    throw std::invalid_argument("size list length mismatch");
  const FieldSpec& spec = P.spec();
  const std::size_t m = P.size();
  for (std::size_t delta = 0; delta < m; ++delta) {
    const Poly gen = Poly::monomial(FieldElem::one(spec), sizes[delta]);
    const PolyVector f = gen * PolyVector::unit(spec, m, delta);
    if (!in_ker_phi(f * P, sizes)) return false;
  }
  return true;
}

bool in_V(const PolyMatrix& P, const std::vector<std::size_t>& sizes) {
  if (sizes.size() != P.size())
    throw std::invalid_argument("size list length mismatch");
  for (std::size_t delta = 0; delta < P.size(); ++delta)
    for (std::size_t gamma = 0; gamma < P.size(); ++gamma) {
      if (P.at(delta, gamma).degree() >
          static_cast<int>(sizes[gamma]) - 1)
        return false;
    }
  return true;
}

Matrix psi_from_P(const JordanBase& base, const PolyMatrix& P) {
  if (P.size() != base.block_count() || P.spec() != base.spec())
    throw std::invalid_argument("polynomial matrix size mismatch");
  if (!in_M_phi(P, base.sizes()))
    throw NotInMPhi("P is not in M(Phi); psi_P would be ill-defined");

  // Column (delta, i) of psi in chain coordinates is Phi(t^i e_delta P);
  // conversion back to the standard basis is one multiplication by C^{-1}.
  const std::size_t d = base.dimension();
  std::vector<Vector> images;
  images.reserve(d);
  for (std::size_t delta = 0; delta < base.block_count(); ++delta) {
    const PolyVector row = P.row(delta);
    for (std::size_t i = 0; i < base.sizes()[delta]; ++i) {
      const Poly shift = Poly::monomial(FieldElem::one(base.spec()), i);
      images.push_back(phi_map(base, shift * row));
    }
  }
  return Matrix::from_columns(images) * base.chain_matrix_inverse();
}

PolyMatrix P_from_psi(const JordanBase& base, const Matrix& S) {
  if (S.rows() != base.dimension() || S.cols() != base.dimension() ||
      S.spec() != base.spec())
    throw std::invalid_argument("matrix shape mismatch");
  if (S * base.phi() != base.phi() * S)
    throw NotInCentralizer("matrix does not commute with the endomorphism");

  const std::size_t m = base.block_count();
  PolyMatrix P(base.spec(), m);
  for (std::size_t delta = 0; delta < m; ++delta) {
    // phi_preimage already returns the cut representative of degree < k_gamma.
    const PolyVector row = phi_preimage(base, S * base.head(delta));
    for (std::size_t gamma = 0; gamma < m; ++gamma)
      P.at(delta, gamma) = row[gamma];
  }
  return P;
}

std::vector<Matrix> CentralizerBasis::matrices() const {
  std::vector<Matrix> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.matrix);
  return out;
}

CentralizerBasis centralizer_basis(const JordanBase& base) {
  const std::size_t m = base.block_count();
  std::vector<CentralizerElement> elements;
  for (std::size_t delta = 0; delta < m; ++delta)
    for (std::size_t gamma = 0; gamma < m; ++gamma) {
      const std::size_t k_d = base.sizes()[delta], k_g = base.sizes()[gamma];
      const std::size_t lo = k_g > k_d ? k_g - k_d : 0;
      for (std::size_t i = lo; i < k_g; ++i) {
        const PolyMatrix P =
            PolyMatrix::scaled_unit(base.spec(), m, delta, gamma, i);
        elements.push_back({delta, gamma, i, psi_from_P(base, P)});
      }
    }
  return CentralizerBasis(base, std::move(elements));
}

std::size_t dim_formula(const std::vector<std::size_t>& descending_sizes) {
  if (descending_sizes.empty())
    throw std::invalid_argument("empty block profile");
  std::size_t sum = 0;
  for (std::size_t j = 0; j < descending_sizes.size(); ++j) {
    if (descending_sizes[j] == 0)
      throw std::invalid_argument("block size must be positive");
    if (j > 0 && descending_sizes[j] > descending_sizes[j - 1])
      throw std::invalid_argument("block profile must be sorted descending");
    sum += (2 * j + 1) * descending_sizes[j];
  }
  return sum;
}

std::size_t dim_formula(const BlockProfile& profile) {
  return dim_formula(profile.sizes());
}

std::size_t min_pair_sum(const std::vector<std::size_t>& sizes) {
  std::size_t sum = 0;
  for (std::size_t a : sizes)
    for (std::size_t b : sizes) sum += std::min(a, b);
  return sum;
}

std::optional<Poly> polynomial_coeffs(const Matrix& A, const Matrix& S) {
  if (!A.is_square() || A.rows() != S.rows() || A.cols() != S.cols() ||
      A.spec() != S.spec())
    throw std::invalid_argument("matrix shape mismatch");
  const FieldSpec& spec = A.spec();
  const std::size_t d = A.rows();
  const std::size_t n = static_cast<std::size_t>(minimal_polynomial(A).degree());

  // Solve sum_{i<n} h_i A^i = S entrywise; {A^i : i < n} is linearly
  // independent, so a consistent system has a unique solution.
  Matrix sys(spec, d * d, n + 1);
  Matrix power = Matrix::identity(spec, d);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector v = power.vectorized();
    for (std::size_t r = 0; r < d * d; ++r) sys.at(r, i) = v[r];
    power = power * A;
  }
  const Vector rhs = S.vectorized();
  for (std::size_t r = 0; r < d * d; ++r) sys.at(r, n) = rhs[r];

  std::vector<std::size_t> pivots;
  const Matrix red = sys.rref(&pivots);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // inconsistent
  std::vector<FieldElem> coeffs(n, FieldElem::zero(spec));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    coeffs[pivots[r]] = red.at(r, n);
  return Poly(spec, std::move(coeffs));
}

Containment containment(const Matrix& A, const Matrix& B) {
  if (!A.is_square() || A.rows() != B.rows() || A.cols() != B.cols() ||
      A.spec() != B.spec())
    throw std::invalid_argument("matrix shape mismatch");
  const JordanBase base = jordan_base(A);  // NotNilpotent if A is not
  const CentralizerBasis basis = centralizer_basis(base);

  bool contained = true;
  for (const auto& elem : basis.elements()) {
    if (elem.matrix * B != B * elem.matrix) {
      contained = false;
      break;
    }
  }
  std::optional<Poly> certificate = polynomial_coeffs(A, B);
  if (contained != certificate.has_value())
    throw std::logic_error(
        "containment routes disagree: direct check vs polynomial certificate");
  return {contained, std::move(certificate)};
}

BoundCheck bound_check(const JordanBase& base) {
  const BoundCheck result{min_pair_sum(base.sizes()),
                          base.block_count() * base.dimension()};
  if (result.dim > result.bound)
    throw std::logic_error("centralizer dimension exceeds the m*d bound");
  return result;
}

}  // namespace centra
