#include "centra/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace centra {

// ---------------------------------------------------------------------------
// Vector

Vector::Vector(const FieldSpec& spec, std::vector<FieldElem> entries)
    : spec_(spec), entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("empty vector");
  for (const auto& e : entries_) {
    if (e.spec() != spec_)
      throw std::invalid_argument("vector entry from wrong field");
  }
}

Vector Vector::zero(const FieldSpec& spec, std::size_t d) {
  return Vector(spec, std::vector<FieldElem>(d, FieldElem::zero(spec)));
}

Vector Vector::unit(const FieldSpec& spec, std::size_t d, std::size_t i) {
  Vector v = zero(spec, d);
  v[i] = FieldElem::one(spec);
  return v;
}

Vector Vector::operator+(const Vector& other) const {
  if (size() != other.size()) throw std::invalid_argument("vector size mismatch");
  Vector out = *this;
  for (std::size_t i = 0; i < size(); ++i) out[i] += other[i];
  return out;
}

Vector Vector::operator-(const Vector& other) const {
  if (size() != other.size()) throw std::invalid_argument("vector size mismatch");
  Vector out = *this;
  for (std::size_t i = 0; i < size(); ++i) out[i] -= other[i];
  return out;
}

Vector Vector::operator*(const FieldElem& scalar) const {
  Vector out = *this;
  for (std::size_t i = 0; i < size(); ++i) out[i] *= scalar;
  return out;
}

bool Vector::operator==(const Vector& other) const {
  return spec_ == other.spec_ && entries_ == other.entries_;
}

bool Vector::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::string Vector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += entries_[i].to_string();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols)
    : spec_(spec),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, FieldElem::zero(spec)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("empty matrix");
}

Matrix::Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols,
               std::vector<FieldElem> entries)
    : spec_(spec), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("empty matrix");
  if (entries_.size() != rows * cols)
    throw std::invalid_argument("matrix entry count mismatch");
  for (const auto& e : entries_) {
    if (e.spec() != spec_)
      throw std::invalid_argument("matrix entry from wrong field");
  }
}

Matrix Matrix::identity(const FieldSpec& spec, std::size_t n) {
  Matrix m(spec, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElem::one(spec);
  return m;
}

Matrix Matrix::zero(const FieldSpec& spec, std::size_t rows, std::size_t cols) {
  return Matrix(spec, rows, cols);
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) {
  if (columns.empty()) throw std::invalid_argument("no columns");
  const FieldSpec spec = columns.front().spec();
  const std::size_t d = columns.front().size();
  Matrix m(spec, d, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != d || columns[j].spec() != spec)
      throw std::invalid_argument("ragged column list");
    for (std::size_t i = 0; i < d; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& spec,
                         const std::vector<std::vector<long long>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw std::invalid_argument("empty matrix literal");
  Matrix m(spec, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.front().size())
      throw std::invalid_argument("ragged matrix literal");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(i, j) = FieldElem::from_int(spec, rows[i][j]);
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  std::vector<FieldElem> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return Vector(spec_, std::move(out));
}

Vector Matrix::row(std::size_t i) const {
  std::vector<FieldElem> out(entries_.begin() + i * cols_,
                             entries_.begin() + (i + 1) * cols_);
  return Vector(spec_, std::move(out));
}

void Matrix::require_same_shape(const Matrix& other) const {
  if (spec_ != other.spec_ || rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix shape or field mismatch");
}

Matrix Matrix::operator+(const Matrix& other) const {
  require_same_shape(other);
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] += other.entries_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  require_same_shape(other);
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] -= other.entries_[i];
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (spec_ != other.spec_ || cols_ != other.rows_)
    throw std::invalid_argument("matrix product shape mismatch");

  // Fast path for prime fields: raw residues with a wide accumulator,
  // one reduction per output entry.
  if (spec_.is_prime_field()) {
    const std::uint64_t p = spec_.modulus();
    std::vector<std::uint64_t> a(entries_.size()), b(other.entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) a[i] = entries_[i].residue();
    for (std::size_t i = 0; i < other.entries_.size(); ++i)
      b[i] = other.entries_[i].residue();
    Matrix out(spec_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < other.cols_; ++j) {
        unsigned __int128 acc = 0;
        for (std::size_t k = 0; k < cols_; ++k)
          acc += static_cast<unsigned __int128>(a[i * cols_ + k]) *
                 b[k * other.cols_ + j];
        out.at(i, j) = FieldElem::from_int(
            spec_, static_cast<long long>(acc % p));
      }
    }
    return out;
  }

  // Rationals: clear denominators once per factor and multiply integer
  // matrices, so the gcd work is one canonicalization per output entry
  // instead of one per multiply-add.
  const auto scale_to_integers = [](const Matrix& m, mpz_class& denom) {
    denom = 1;
    for (const auto& e : m.entries_)
      mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(),
              e.rational().get_den().get_mpz_t());
    std::vector<mpz_class> out(m.entries_.size());
    for (std::size_t i = 0; i < m.entries_.size(); ++i) {
      const mpq_class& q = m.entries_[i].rational();
      out[i] = q.get_num() * mpz_class(denom / q.get_den());
    }
    return out;
  };
  mpz_class da, db;
  const std::vector<mpz_class> a = scale_to_integers(*this, da);
  const std::vector<mpz_class> b = scale_to_integers(other, db);
  const mpz_class denom = da * db;
  Matrix out(spec_, rows_, other.cols_);
  mpz_class acc;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < other.cols_; ++j) {
      acc = 0;
      for (std::size_t k = 0; k < cols_; ++k)
        acc += a[i * cols_ + k] * b[k * other.cols_ + j];
      out.at(i, j) = FieldElem::from_mpq(mpq_class(acc, denom));
    }
  }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (spec_ != v.spec() || cols_ != v.size())
    throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out = Vector::zero(spec_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    FieldElem acc = FieldElem::zero(spec_);
    for (std::size_t k = 0; k < cols_; ++k) acc += at(i, k) * v[k];
    out[i] = acc;
  }
  return out;
}

Matrix Matrix::operator*(const FieldElem& scalar) const {
  Matrix out = *this;
  for (auto& e : out.entries_) e *= scalar;
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

bool Matrix::operator==(const Matrix& other) const {
  return spec_ == other.spec_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

Matrix Matrix::transpose() const {
  Matrix out(spec_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Matrix Matrix::pow(std::size_t k) const {
  if (!is_square()) throw std::invalid_argument("pow on non-square matrix");
  Matrix acc = identity(spec_, rows_);
  for (std::size_t i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  return is_square() && *this == identity(spec_, rows_);
}

FieldElem Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  FieldElem acc = FieldElem::zero(spec_);
  for (std::size_t i = 0; i < rows_; ++i) acc += at(i, i);
  return acc;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivot_columns) const {
  Matrix m = *this;
  if (pivot_columns) pivot_columns->clear();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
    // topmost row at or below pivot_row with a nonzero entry in this column
    std::size_t r = pivot_row;
    while (r < rows_ && m.at(r, col).is_zero()) ++r;
    if (r == rows_) continue;
    if (r != pivot_row) {
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(m.at(r, j), m.at(pivot_row, j));
    }
    const FieldElem inv = m.at(pivot_row, col).inverse();
    for (std::size_t j = col; j < cols_; ++j) m.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == pivot_row || m.at(i, col).is_zero()) continue;
      const FieldElem factor = m.at(i, col);
      for (std::size_t j = col; j < cols_; ++j)
        m.at(i, j) -= factor * m.at(pivot_row, j);
    }
    if (pivot_columns) pivot_columns->push_back(col);
    ++pivot_row;
  }
  return m;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(&pivots);
  return pivots.size();
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
  Matrix aug(spec_, rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = FieldElem::one(spec_);
  }
  std::vector<std::size_t> pivots;
  const Matrix red = aug.rref(&pivots);
  if (pivots.size() != rows_ || pivots.back() >= cols_)
    throw std::domain_error("matrix is singular");
  Matrix out(spec_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = red.at(i, cols_ + j);
  return out;
}

Vector Matrix::vectorized() const {
  return Vector(spec_, entries_);
}

std::string Matrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += " ";
      out += at(i, j).to_string();
    }
    out += "]";
    if (i + 1 < rows_) out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Free operations

std::vector<Vector> kernel_basis(const Matrix& A) {
  std::vector<std::size_t> pivots;
  const Matrix red = A.rref(&pivots);
  const std::size_t c = A.cols();
  std::vector<bool> is_pivot(c, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free_col = 0; free_col < c; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vector v = Vector::zero(A.spec(), c);
    v[free_col] = FieldElem::one(A.spec());
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -red.at(k, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector poly_apply(const Poly& f, const Matrix& A, const Vector& u) {
  if (!A.is_square() || A.rows() != u.size() || A.spec() != u.spec() ||
      f.spec() != A.spec())
    throw std::invalid_argument("poly_apply dimension or field mismatch");
  Vector acc = Vector::zero(A.spec(), u.size());
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = A * acc;
    if (!c[i].is_zero()) acc = acc + u * c[i];
  }
  return acc;
}

Matrix poly_eval_matrix(const Poly& f, const Matrix& A) {
  if (!A.is_square() || f.spec() != A.spec())
    throw std::invalid_argument("poly_eval_matrix mismatch");
  Matrix acc = Matrix::zero(A.spec(), A.rows(), A.cols());
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = A * acc;
    if (!c[i].is_zero())
      acc = acc + Matrix::identity(A.spec(), A.rows()) * c[i];
  }
  return acc;
}

std::vector<Matrix> commutant_oracle(const Matrix& A) {
  if (!A.is_square()) throw std::invalid_argument("commutant of non-square matrix");
  const std::size_t d = A.rows();
  const FieldSpec& spec = A.spec();
  // Row-major vectorization: vec(AX - XA) = (A (x) I - I (x) A^T) vec(X).
  Matrix op(spec, d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t row = i * d + j;
      for (std::size_t k = 0; k < d; ++k) {
        op.at(row, k * d + j) += A.at(i, k);   // (AX)_{ij}
        op.at(row, i * d + k) -= A.at(k, j);   // (XA)_{ij}
      }
    }
  }
  std::vector<Matrix> basis;
  for (const Vector& v : kernel_basis(op))
    basis.emplace_back(spec, d, d, v.entries());
  return basis;
}

Poly minimal_polynomial(const Matrix& A) {
  if (!A.is_square()) throw std::invalid_argument("minimal polynomial of non-square matrix");
  const std::size_t d = A.rows();
  const FieldSpec& spec = A.spec();

  std::vector<Matrix> powers = {Matrix::identity(spec, d)};
  for (std::size_t k = 1; k <= d; ++k) {
    powers.push_back(powers.back() * A);
    // Solve sum_{i<k} a_i vec(A^i) = vec(A^k); the first consistent system
    // gives the monic minimal polynomial t^k - sum a_i t^i.
    Matrix sys(spec, d * d, k + 1);
    for (std::size_t i = 0; i < k; ++i) {
      const Vector vi = powers[i].vectorized();
      for (std::size_t r = 0; r < d * d; ++r) sys.at(r, i) = vi[r];
    }
    const Vector rhs = powers[k].vectorized();
    for (std::size_t r = 0; r < d * d; ++r) sys.at(r, k) = rhs[r];

    std::vector<std::size_t> pivots;
    const Matrix red = sys.rref(&pivots);
    if (!pivots.empty() && pivots.back() == k) continue;  // inconsistent
    // Powers I..A^{k-1} are independent, so the solution is unique.
    std::vector<FieldElem> coeffs(k + 1, FieldElem::zero(spec));
    for (std::size_t r = 0; r < pivots.size(); ++r)
      coeffs[pivots[r]] = -red.at(r, k);
    coeffs[k] = FieldElem::one(spec);
    return Poly(spec, std::move(coeffs));
  }
  throw std::logic_error("minimal polynomial not found below dimension bound");
}

Matrix solve_exact(const Matrix& B, const Matrix& Y) {
  if (B.rows() != Y.rows() || B.spec() != Y.spec())
    throw std::invalid_argument("solve_exact shape mismatch");
  const std::size_t n = B.cols();
  Matrix aug(B.spec(), B.rows(), n + Y.cols());
  for (std::size_t i = 0; i < B.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = B.at(i, j);
    for (std::size_t j = 0; j < Y.cols(); ++j) aug.at(i, n + j) = Y.at(i, j);
  }
  std::vector<std::size_t> pivots;
  const Matrix red = aug.rref(&pivots);
  std::size_t lhs_pivots = 0;
  for (std::size_t p : pivots) {
    if (p < n) ++lhs_pivots;
  }
  if (lhs_pivots != n) throw std::domain_error("solve_exact: rank-deficient system");
  if (lhs_pivots != pivots.size())
    throw std::domain_error("solve_exact: inconsistent system");
  Matrix X(B.spec(), n, Y.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < Y.cols(); ++j) X.at(r, j) = red.at(r, n + j);
  return X;
}

std::size_t span_rank(const std::vector<Matrix>& mats) {
  if (mats.empty()) return 0;
  const Matrix& first = mats.front();
  Matrix stacked(first.spec(), mats.size(), first.rows() * first.cols());
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const Vector v = mats[i].vectorized();
    if (v.size() != stacked.cols())
      throw std::invalid_argument("span_rank shape mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) stacked.at(i, j) = v[j];
  }
  return stacked.rank();
}

bool spans_equal(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  if (a.empty() && b.empty()) return true;
  if (a.empty() || b.empty()) return span_rank(a) == 0 && span_rank(b) == 0;
  std::vector<Matrix> joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  const std::size_t ra = span_rank(a);
  const std::size_t rb = span_rank(b);
  return ra == rb && span_rank(joint) == ra;
}

// ---------------------------------------------------------------------------
// RowSpan

RowSpan::RowSpan(const FieldSpec& spec, std::size_t width)
    : spec_(spec), width_(width) {}

void RowSpan::reduce(Vector& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const FieldElem& c = v[pivots_[k]];
    if (c.is_zero()) continue;
    const FieldElem factor = c;  // rows are monic at their pivot
    for (std::size_t j = 0; j < width_; ++j) v[j] -= factor * rows_[k][j];
  }
}

bool RowSpan::try_add(Vector v) {
  if (v.size() != width_ || v.spec() != spec_)
    throw std::invalid_argument("RowSpan width mismatch");
  reduce(v);
  std::size_t pivot = width_;
  for (std::size_t j = 0; j < width_; ++j) {
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot == width_) return false;
  const FieldElem inv = v[pivot].inverse();
  for (std::size_t j = pivot; j < width_; ++j) v[j] *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool RowSpan::contains(Vector v) const {
  reduce(v);
  return v.is_zero();
}

}  // namespace centra
