#include "gha/exactla.hpp"

#include <algorithm>
#include <utility>

#include "gha/errors.hpp"

namespace gha {

std::string to_string(const Scalar& value) {
  Scalar copy = value;
  copy.canonicalize();
  return copy.get_str();
}

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const bool ok = slash == std::string_view::npos
                      ? is_digits(body)
                      : is_digits(body.substr(0, slash)) && is_digits(body.substr(slash + 1));
  if (!ok) throw ParseError("not a rational: \"" + std::string(text) + "\"");

  Scalar value;
  if (slash != std::string_view::npos && body.substr(slash + 1).find_first_not_of('0') == std::string_view::npos) {
    throw ParseError("zero denominator: \"" + std::string(text) + "\"");
  }
  if (value.set_str(std::string(text), 10) != 0) {
    throw ParseError("not a rational: \"" + std::string(text) + "\"");
  }
  value.canonicalize();
  if (value.get_str() != text) {
    throw ParseError("rational not in reduced form: \"" + std::string(text) + "\"");
  }
  return value;
}

// ---------------------------------------------------------------------------
// SparseVector

SparseVector SparseVector::from_dense(std::span<const Scalar> values) {
  SparseVector v;
  for (std::size_t i = 0; i < values.size(); ++i) v.push_back(i, values[i]);
  return v;
}

SparseVector SparseVector::unit(std::size_t index, Scalar value) {
  SparseVector v;
  v.push_back(index, std::move(value));
  return v;
}

Scalar SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) return it->value;
  return 0;
}

void SparseVector::push_back(std::size_t index, Scalar value) {
  if (value == 0) return;
  entries_.push_back({index, std::move(value)});
}

void SparseVector::add_scaled(const SparseVector& other, const Scalar& factor) {
  if (factor == 0 || other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->index < a->index) {
      merged.push_back({b->index, factor * b->value});
      ++b;
    } else {
      Scalar sum = a->value + factor * b->value;
      if (sum != 0) merged.push_back({a->index, std::move(sum)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Scalar& factor) {
  if (factor == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.value *= factor;
}

SparseVector SparseVector::shifted(std::size_t offset) const {
  SparseVector v = *this;
  for (auto& e : v.entries_) e.index += offset;
  return v;
}

Vector SparseVector::to_dense(std::size_t size) const {
  Vector out(size);
  for (const auto& e : entries_) {
    if (e.index >= size) throw DimensionMismatch("sparse index out of range");
    out[e.index] = e.value;
  }
  return out;
}

SparseVector operator+(SparseVector a, const SparseVector& b) {
  a.add_scaled(b, 1);
  return a;
}

SparseVector operator-(SparseVector a, const SparseVector& b) {
  a.add_scaled(b, -1);
  return a;
}

SparseVector operator*(const Scalar& factor, SparseVector v) {
  v.scale(factor);
  return v;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

Matrix Matrix::from_rows(std::size_t cols, std::vector<SparseVector> rows) {
  for (const auto& r : rows) {
    if (r.extent() > cols) throw DimensionMismatch("row entry beyond column count");
  }
  Matrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

Matrix Matrix::from_dense(std::size_t cols, const std::vector<Vector>& rows) {
  std::vector<SparseVector> sparse;
  sparse.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("ragged dense matrix");
    sparse.push_back(SparseVector::from_dense(r));
  }
  return from_rows(cols, std::move(sparse));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i] = SparseVector::unit(i);
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows() || c >= cols_) throw DimensionMismatch("matrix index out of range");
  SparseVector updated;
  bool placed = false;
  for (const auto& e : rows_[r].entries()) {
    if (!placed && e.index >= c) {
      updated.push_back(c, value);
      placed = true;
      if (e.index == c) continue;
    }
    updated.push_back(e.index, e.value);
  }
  if (!placed) updated.push_back(c, value);
  rows_[r] = std::move(updated);
}

void Matrix::append_row(SparseVector row) {
  if (row.extent() > cols_) throw DimensionMismatch("row entry beyond column count");
  rows_.push_back(std::move(row));
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.nonzeros();
  return n;
}

Matrix Matrix::transpose() const {
  std::vector<SparseVector> cols(cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& e : rows_[r].entries()) cols[e.index].push_back(r, e.value);
  }
  return from_rows(rows_.size(), std::move(cols));
}

std::vector<Vector> Matrix::to_dense() const {
  std::vector<Vector> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.to_dense(cols_));
  return out;
}

SparseVector multiply(const SparseVector& v, const Matrix& m) {
  if (v.extent() > m.rows()) throw DimensionMismatch("vector length exceeds matrix rows");
  SparseVector out;
  for (const auto& e : v.entries()) out.add_scaled(m.row(e.index), e.value);
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  std::vector<SparseVector> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(multiply(a.row(r), b));
  return Matrix::from_rows(b.cols(), std::move(rows));
}

Vector apply(const Matrix& m, const Vector& column) {
  if (column.size() != m.cols()) throw DimensionMismatch("vector length differs from matrix columns");
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r).entries()) out[r] += e.value * column[e.index];
  }
  return out;
}

// ---------------------------------------------------------------------------
// EchelonBuilder

EchelonBuilder::EchelonBuilder(std::size_t ambient) : ambient_(ambient), row_of_pivot_(ambient, -1) {}

SparseVector EchelonBuilder::reduce(SparseVector v) const {
  // Held rows are zero on every other pivot column, so one pass over the
  // pivot entries of the original v clears all of them.
  std::vector<std::pair<std::size_t, Scalar>> hits;
  for (const auto& e : v.entries()) {
    if (e.index >= ambient_) throw DimensionMismatch("vector longer than ambient space");
    if (row_of_pivot_[e.index] >= 0) hits.emplace_back(e.index, e.value);
  }
  for (const auto& [col, coeff] : hits) v.add_scaled(rows_[row_of_pivot_[col]], -coeff);
  return v;
}

bool EchelonBuilder::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  const std::size_t pivot = r.lead();
  r.scale(1 / r.entries().front().value);
  for (auto& row : rows_) {
    Scalar c = row.at(pivot);
    if (c != 0) row.add_scaled(r, -c);
  }
  row_of_pivot_[pivot] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

Subspace EchelonBuilder::finish() && {
  std::sort(rows_.begin(), rows_.end(), [](const SparseVector& a, const SparseVector& b) { return a.lead() < b.lead(); });
  Subspace s(ambient_);
  s.pivots_.reserve(rows_.size());
  for (const auto& r : rows_) s.pivots_.push_back(r.lead());
  s.basis_ = Matrix::from_rows(ambient_, std::move(rows_));
  return s;
}

// ---------------------------------------------------------------------------
// rref and friends

RrefResult rref(const Matrix& m) {
  EchelonBuilder builder(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) builder.insert(m.row(r));
  Subspace s = std::move(builder).finish();
  RrefResult result;
  result.rank = s.dim();
  result.pivots.assign(s.pivots().begin(), s.pivots().end());
  std::vector<SparseVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(s.basis().row(r));
  rows.resize(m.rows());
  result.reduced = Matrix::from_rows(m.cols(), std::move(rows));
  return result;
}

std::size_t rank(const Matrix& m) { return Subspace::row_space(m).dim(); }

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw PreconditionError("inverse of a non-square matrix");
  // Reduce [m | I]; the right half of the RREF is the inverse when the left is I.
  std::vector<SparseVector> augmented;
  augmented.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    SparseVector row = m.row(r);
    row.push_back(n + r, 1);
    augmented.push_back(std::move(row));
  }
  Subspace s = Subspace::span(2 * n, augmented);
  if (s.dim() != n || (n > 0 && s.pivots().back() != n - 1)) throw PreconditionError("singular matrix");
  std::vector<SparseVector> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    SparseVector right;
    for (const auto& e : s.basis().row(r).entries()) {
      if (e.index >= n) right.push_back(e.index - n, e.value);
    }
    rows.push_back(std::move(right));
  }
  return Matrix::from_rows(n, std::move(rows));
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length differs from matrix rows");
  const std::size_t n = m.cols();
  // Row-reduce [m | b]; a pivot in the last column means no solution.
  std::vector<SparseVector> augmented;
  augmented.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVector row = m.row(r);
    row.push_back(n, b[r]);
    augmented.push_back(std::move(row));
  }
  Subspace s = Subspace::span(n + 1, augmented);
  Vector x(n);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const std::size_t p = s.pivots()[r];
    if (p == n) return std::nullopt;
    x[p] = s.basis().row(r).at(n);
  }
  return x;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::full(std::size_t ambient) { return row_space(Matrix::identity(ambient)); }

Subspace Subspace::span(std::size_t ambient, std::span<const SparseVector> vectors) {
  EchelonBuilder builder(ambient);
  for (const auto& v : vectors) builder.insert(v);
  return std::move(builder).finish();
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  EchelonBuilder builder(ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw DimensionMismatch("spanning vector has wrong length");
    builder.insert(SparseVector::from_dense(v));
  }
  return std::move(builder).finish();
}

Subspace Subspace::row_space(const Matrix& m) {
  EchelonBuilder builder(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) builder.insert(m.row(r));
  return std::move(builder).finish();
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  out.reserve(ambient_ - dim());
  auto p = pivots_.begin();
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (p != pivots_.end() && *p == c) {
      ++p;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

SparseVector Subspace::reduce(SparseVector v) const {
  if (v.extent() > ambient_) throw DimensionMismatch("vector longer than ambient space");
  std::vector<std::pair<std::size_t, Scalar>> hits;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    Scalar c = v.at(pivots_[r]);
    if (c != 0) hits.emplace_back(r, std::move(c));
  }
  for (const auto& [r, c] : hits) v.add_scaled(basis_.row(r), -c);
  return v;
}

bool Subspace::contains(const SparseVector& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
  return contains(SparseVector::from_dense(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Vector Subspace::coordinates(const SparseVector& v) const {
  if (!contains(v)) throw PreconditionError("vector is not in the subspace");
  Vector out(dim());
  for (std::size_t r = 0; r < dim(); ++r) out[r] = v.at(pivots_[r]);
  return out;
}

Subspace kernel_basis(const Matrix& m) {
  const Subspace rows = Subspace::row_space(m);
  std::vector<SparseVector> vectors;
  for (std::size_t f : rows.free_columns()) {
    // x_f = 1, x_p = -R[p][f] for each pivot row, all other free vars zero.
    std::vector<std::pair<std::size_t, Scalar>> entries{{f, 1}};
    for (std::size_t r = 0; r < rows.dim(); ++r) {
      Scalar c = rows.basis().row(r).at(f);
      if (c != 0) entries.emplace_back(rows.pivots()[r], -c);
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector v;
    for (auto& [i, c] : entries) v.push_back(i, std::move(c));
    vectors.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), vectors);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace sum across different ambient spaces");
  EchelonBuilder builder(a.ambient_dim());
  for (std::size_t r = 0; r < a.dim(); ++r) builder.insert(a.basis().row(r));
  for (std::size_t r = 0; r < b.dim(); ++r) builder.insert(b.basis().row(r));
  return std::move(builder).finish();
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace intersection across different ambient spaces");
  const std::size_t n = a.ambient_dim();
  EchelonBuilder builder(2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    const SparseVector& row = a.basis().row(r);
    builder.insert(row + row.shifted(n));
  }
  for (std::size_t r = 0; r < b.dim(); ++r) builder.insert(b.basis().row(r));
  Subspace zassenhaus = std::move(builder).finish();
  std::vector<SparseVector> meet;
  for (std::size_t r = 0; r < zassenhaus.dim(); ++r) {
    if (zassenhaus.pivots()[r] < n) continue;
    SparseVector right;
    for (const auto& e : zassenhaus.basis().row(r).entries()) right.push_back(e.index - n, e.value);
    meet.push_back(std::move(right));
  }
  return Subspace::span(n, meet);
}

bool contains(const Subspace& a, const Vector& v) { return a.contains(v); }

}  // namespace gha
