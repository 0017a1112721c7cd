#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "centra/field.hpp"
#include "centra/poly.hpp"

namespace centra {

/// Column vector over an exact field.
class Vector {
 public:
  Vector(const FieldSpec& spec, std::vector<FieldElem> entries);
  static Vector zero(const FieldSpec& spec, std::size_t d);
  static Vector unit(const FieldSpec& spec, std::size_t d, std::size_t i);

  const FieldSpec& spec() const { return spec_; }
  std::size_t size() const { return entries_.size(); }
  const FieldElem& operator[](std::size_t i) const { return entries_[i]; }
  FieldElem& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<FieldElem>& entries() const { return entries_; }

  Vector operator+(const Vector& other) const;
  Vector operator-(const Vector& other) const;
  Vector operator*(const FieldElem& scalar) const;
  bool operator==(const Vector& other) const;
  bool operator!=(const Vector& other) const { return !(*this == other); }
  bool is_zero() const;

  std::string to_string() const;

 private:
  FieldSpec spec_;
  std::vector<FieldElem> entries_;
};

/// Dense row-major matrix over an exact field. Endomorphisms act on the
/// left on column vectors.
class Matrix {
 public:
  /// Zero-filled r x c matrix.
  Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols);
  Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols,
         std::vector<FieldElem> entries);

  static Matrix identity(const FieldSpec& spec, std::size_t n);
  static Matrix zero(const FieldSpec& spec, std::size_t rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns);
  /// Entries given row by row as integer literals (reduced into the field).
  static Matrix from_ints(const FieldSpec& spec,
                          const std::vector<std::vector<long long>>& rows);

  const FieldSpec& spec() const { return spec_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const FieldElem& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  FieldElem& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<FieldElem>& entries() const { return entries_; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  Vector operator*(const Vector& v) const;
  Matrix operator*(const FieldElem& scalar) const;
  Matrix operator-() const;
  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  Matrix transpose() const;
  Matrix pow(std::size_t k) const;
  bool is_zero() const;
  bool is_identity() const;
  FieldElem trace() const;

  /// Reduced row echelon form with deterministic pivoting: columns are
  /// scanned left to right and the topmost unused row with a nonzero entry
  /// becomes the pivot. Kernel bases computed from this are reproducible.
  Matrix rref(std::vector<std::size_t>* pivot_columns = nullptr) const;
  std::size_t rank() const;
  Matrix inverse() const;  // throws std::domain_error if singular

  /// Flatten to a length rows*cols row vector (row-major).
  Vector vectorized() const;

  std::string to_string() const;

 private:
  void require_same_shape(const Matrix& other) const;

  FieldSpec spec_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElem> entries_;
};

/// Basis of the null space {x : A x = 0}, via RREF with deterministic
/// pivot order; one basis vector per free column, in ascending column order.
std::vector<Vector> kernel_basis(const Matrix& A);

/// f(A) u = sum_i coeff(i) A^i u, evaluated by Horner iteration (no powers
/// of A are formed).
Vector poly_apply(const Poly& f, const Matrix& A, const Vector& u);

/// f(A), by Horner iteration on matrices.
Matrix poly_eval_matrix(const Poly& f, const Matrix& A);

/// Basis of the commutant {X : AX = XA}, computed independently of any
/// structure theory as the kernel of the d^2 x d^2 operator
/// X -> AX - XA (Kronecker form). Serves as the brute-force oracle.
std::vector<Matrix> commutant_oracle(const Matrix& A);

/// Monic generator of {f : f(A) = 0}: the first linear dependency among
/// I, A, A^2, ... under deterministic elimination.
Poly minimal_polynomial(const Matrix& A);

/// Solve B X = Y exactly, requiring a unique solution (B of full column
/// rank and the system consistent); throws std::domain_error otherwise.
Matrix solve_exact(const Matrix& B, const Matrix& Y);

/// Rank of the span of the given matrices inside the full matrix space.
std::size_t span_rank(const std::vector<Matrix>& mats);

/// Mutual containment of spans, decided by rank computations.
bool spans_equal(const std::vector<Matrix>& a, const std::vector<Matrix>& b);

/// Incremental row space in echelon form; used for membership tests while
/// building bases. Rows are kept monic with recorded pivot columns.
class RowSpan {
 public:
  explicit RowSpan(const FieldSpec& spec, std::size_t width);

  /// Adds v to the span; returns false (and leaves the span unchanged)
  /// if v was already a member.
  bool try_add(Vector v);
  bool contains(Vector v) const;
  std::size_t dimension() const { return rows_.size(); }

 private:
  void reduce(Vector& v) const;

  FieldSpec spec_;
  std::size_t width_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace centra
