#pragma once

// Exact rational linear algebra: sparse vectors and matrices over Q, reduced
// row-echelon forms, kernels and the subspace lattice (sum, intersection,
// membership). Everything is exact; there are no tolerances anywhere.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gha {

// Always stored reduced with a positive denominator (GMP canonicalizes after
// every arithmetic operation).
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

// "p/q", or "p" when q = 1.
std::string to_string(const Scalar& value);

// Parses the canonical form produced by to_string. Non-reduced input such as
// "2/4", "3/1", "+1" or "-0" is rejected with ParseError.
Scalar parse_scalar(std::string_view text);

struct Entry {
  std::size_t index;
  Scalar value;

  friend bool operator==(const Entry& a, const Entry& b) {
    return a.index == b.index && a.value == b.value;
  }
};

/// Sparse vector with strictly increasing indices and no stored zeros.
class SparseVector {
 public:
  SparseVector() = default;

  static SparseVector from_dense(std::span<const Scalar> values);
  static SparseVector unit(std::size_t index, Scalar value = 1);

  std::span<const Entry> entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nonzeros() const { return entries_.size(); }

  // Zero when the index is absent.
  Scalar at(std::size_t index) const;
  // Index of the first nonzero entry. Precondition: !empty().
  std::size_t lead() const { return entries_.front().index; }
  // One past the largest stored index, 0 when empty.
  std::size_t extent() const { return empty() ? 0 : entries_.back().index + 1; }

  // Appends an entry; indices must increase. Zero values are skipped.
  void push_back(std::size_t index, Scalar value);

  // this += factor * other
  void add_scaled(const SparseVector& other, const Scalar& factor);
  void scale(const Scalar& factor);
  SparseVector shifted(std::size_t offset) const;

  Vector to_dense(std::size_t size) const;

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry> entries_;
};

SparseVector operator+(SparseVector a, const SparseVector& b);
SparseVector operator-(SparseVector a, const SparseVector& b);
SparseVector operator*(const Scalar& factor, SparseVector v);

/// Row-sparse matrix: each row is a SparseVector, absent entries are zero.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix from_rows(std::size_t cols, std::vector<SparseVector> rows);
  static Matrix from_dense(std::size_t cols, const std::vector<Vector>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  const SparseVector& row(std::size_t r) const { return rows_[r]; }
  void append_row(SparseVector row);

  std::size_t nonzeros() const;
  Matrix transpose() const;
  std::vector<Vector> to_dense() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<SparseVector> rows_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
// Row vector times matrix: v * m.
SparseVector multiply(const SparseVector& v, const Matrix& m);
// Matrix times column vector.
Vector apply(const Matrix& m, const Vector& column);

struct RrefResult {
  Matrix reduced;  // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Throws PreconditionError when m is not square or singular.
Matrix inverse(const Matrix& m);

// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// A linear subspace of Q^ambient held as its canonical RREF basis, so two
/// subspaces are equal exactly when their basis matrices are equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0);

  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, std::span<const SparseVector> vectors);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  const Matrix& basis() const { return basis_; }
  std::span<const std::size_t> pivots() const { return pivots_; }
  // Coordinates that are not pivots; their unit vectors span a complement.
  std::vector<std::size_t> free_columns() const;

  bool contains(const SparseVector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  // Residual of v modulo this subspace; zero on every pivot column.
  SparseVector reduce(SparseVector v) const;
  // Coefficients of a member v in the RREF basis (its pivot-column entries).
  Vector coordinates(const SparseVector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  friend class EchelonBuilder;

  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Incremental fully-reduced echelon basis. Used wherever a span is grown
/// one vector at a time (psi2 images, bracket spans, rref itself).
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient);

  // Returns true when v was independent of the rows already held.
  bool insert(const SparseVector& v);
  SparseVector reduce(SparseVector v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }

  Subspace finish() &&;

 private:
  std::size_t ambient_;
  std::vector<SparseVector> rows_;
  std::vector<std::ptrdiff_t> row_of_pivot_;
};

Subspace kernel_basis(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
// Zassenhaus: reduce [a | a ; b | 0] and read off the rows with zero left half.
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Vector& v);

}  // namespace gha
