#include "centra/jordan.hpp"

#include <algorithm>
#include <stdexcept>

namespace centra {

BlockProfile::BlockProfile(std::vector<std::size_t> sizes)
    : sizes_(std::move(sizes)) {
  for (std::size_t s : sizes_) {
    if (s == 0) throw std::invalid_argument("block size must be positive");
  }
  std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
  if (sizes_.empty()) throw std::invalid_argument("empty block profile");
}

std::size_t BlockProfile::total() const {
  std::size_t sum = 0;
  for (std::size_t s : sizes_) sum += s;
  return sum;
}

std::size_t nilpotency_index(const Matrix& A) {
  if (!A.is_square()) throw std::invalid_argument("nilpotency index of non-square matrix");
  const std::size_t d = A.rows();
  Matrix power = A;
  for (std::size_t n = 1; n <= d; ++n) {
    if (power.is_zero()) return n;
    power = power * A;
  }
  throw NotNilpotent("matrix is not nilpotent (A^" + std::to_string(d) +
                     " != 0)");
}

JordanBase::JordanBase(Matrix phi, std::vector<std::vector<Vector>> chains)
    : phi_(std::move(phi)),
      chains_(std::move(chains)),
      dim_(phi_.rows()),
      chain_matrix_(Matrix::identity(phi_.spec(), phi_.rows())),
      chain_matrix_inv_(Matrix::identity(phi_.spec(), phi_.rows())) {
  sizes_.reserve(chains_.size());
  std::vector<Vector> columns;
  columns.reserve(dim_);
  for (const auto& chain : chains_) {
    sizes_.push_back(chain.size());
    for (const auto& v : chain) columns.push_back(v);
  }
  if (columns.size() != dim_)
    throw std::logic_error("chain vectors do not fill the space");
  chain_matrix_ = Matrix::from_columns(columns);
  chain_matrix_inv_ = chain_matrix_.inverse();  // throws if not a basis
}

const Vector& JordanBase::chain_vector(std::size_t gamma, std::size_t i) const {
  if (gamma >= chains_.size() || i >= chains_[gamma].size())
    throw std::out_of_range("chain index out of range");
  return chains_[gamma][i];
}

std::size_t JordanBase::offset(std::size_t gamma) const {
  if (gamma >= chains_.size()) throw std::out_of_range("block index out of range");
  std::size_t off = 0;
  for (std::size_t g = 0; g < gamma; ++g) off += sizes_[g];
  return off;
}

Matrix JordanBase::to_chain_coordinates(const Matrix& S) const {
  if (S.rows() != dim_ || S.cols() != dim_ || S.spec() != spec())
    throw std::invalid_argument("shape mismatch in chain-coordinate conversion");
  return chain_matrix_inv_ * S * chain_matrix_;
}

JordanBase jordan_base(const Matrix& A) {
  const std::size_t n = nilpotency_index(A);
  const std::size_t d = A.rows();
  const FieldSpec& spec = A.spec();

  // Kernel filtration ker A^0 = 0 <= ker A <= ... <= ker A^n = K^d.
  std::vector<std::vector<Vector>> kernels(n + 1);
  {
    Matrix power = Matrix::identity(spec, d);
    for (std::size_t j = 1; j <= n; ++j) {
      power = power * A;
      kernels[j] = kernel_basis(power);
    }
  }

  // Heads of length-j chains must complete
  //   ker A^{j-1} + span{height-j vectors of longer chains}
  // to ker A^j; candidates are swept from the deterministic kernel basis.
  std::vector<std::vector<Vector>> chains;
  for (std::size_t j = n; j >= 1; --j) {
    RowSpan span(spec, d);
    if (j >= 2) {
      for (const auto& v : kernels[j - 1]) span.try_add(v);
    }
    for (const auto& chain : chains) span.try_add(chain[chain.size() - j]);
    for (const auto& v : kernels[j]) {
      if (!span.try_add(v)) continue;
      std::vector<Vector> chain = {v};
      for (std::size_t i = 1; i < j; ++i) chain.push_back(A * chain.back());
      chains.push_back(std::move(chain));
    }
  }

  return JordanBase(A, std::move(chains));
}

BlockProfile block_profile(const JordanBase& base) {
  return BlockProfile(base.sizes());
}

bool is_indecomposable(const Matrix& A) {
  nilpotency_index(A);  // NotNilpotent check
  const std::size_t d = A.rows();
  return !A.pow(d - 1).is_zero();
}

Matrix block_projection(const JordanBase& base, std::size_t delta) {
  if (delta >= base.block_count())
    throw std::out_of_range("block index out of range");
  const FieldSpec& spec = base.spec();
  const std::size_t d = base.dimension();
  Matrix diag(spec, d, d);
  const std::size_t off = base.offset(delta);
  for (std::size_t i = 0; i < base.sizes()[delta]; ++i)
    diag.at(off + i, off + i) = FieldElem::one(spec);
  return base.chain_matrix() * diag * base.chain_matrix_inverse();
}

}  // namespace centra
