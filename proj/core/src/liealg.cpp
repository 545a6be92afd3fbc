#include "gha/liealg.hpp"

#include <algorithm>

#include "gha/errors.hpp"

namespace gha {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels, const BracketTable& brackets)
    : dim_(dim), labels_(std::move(labels)) {
  if (labels_.size() > dim_) throw DimensionMismatch("more labels than basis vectors");
  for (std::size_t i = labels_.size(); i < dim_; ++i) labels_.push_back("b" + std::to_string(i + 1));

  for (const auto& [key, value] : brackets) {
    auto [i, j] = key;
    if (i >= dim_ || j >= dim_ || value.extent() > dim_) throw DimensionMismatch("bracket index out of range");
    if (value.empty()) continue;
    if (i == j) throw PreconditionError("nonzero self-bracket [b_i, b_i]");
    SparseVector v = value;
    if (i > j) {
      std::swap(i, j);
      v.scale(-1);
    }
    auto& slot = table_[{i, j}];
    slot.add_scaled(v, 1);
    if (slot.empty()) table_.erase({i, j});
  }
}

SparseVector LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  const bool flip = i > j;
  auto it = table_.find(flip ? std::pair{j, i} : std::pair{i, j});
  if (it == table_.end()) return {};
  return flip ? Scalar(-1) * it->second : it->second;
}

SparseVector LieAlgebra::bracket(const SparseVector& u, const SparseVector& v) const {
  if (u.extent() > dim_ || v.extent() > dim_) throw DimensionMismatch("bracket argument longer than algebra dimension");
  SparseVector out;
  for (const auto& a : u.entries()) {
    for (const auto& b : v.entries()) {
      if (a.index == b.index) continue;
      const bool flip = a.index > b.index;
      auto it = table_.find(flip ? std::pair{b.index, a.index} : std::pair{a.index, b.index});
      if (it == table_.end()) continue;
      Scalar c = a.value * b.value;
      out.add_scaled(it->second, flip ? Scalar(-c) : c);
    }
  }
  return out;
}

Vector bracket_vectors(const LieAlgebra& a, const Vector& u, const Vector& v) {
  if (u.size() != a.dim() || v.size() != a.dim()) throw DimensionMismatch("bracket argument has wrong length");
  return a.bracket(SparseVector::from_dense(u), SparseVector::from_dense(v)).to_dense(a.dim());
}

std::vector<std::array<std::size_t, 3>> jacobi_check(const LieAlgebra& a) {
  std::vector<std::array<std::size_t, 3>> bad;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const SparseVector ij = a.bracket(i, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        SparseVector sum = a.bracket(ij, SparseVector::unit(k));
        sum.add_scaled(a.bracket(a.bracket(j, k), SparseVector::unit(i)), 1);
        sum.add_scaled(a.bracket(a.bracket(k, i), SparseVector::unit(j)), 1);
        if (!sum.empty()) bad.push_back({i, j, k});
      }
    }
  }
  return bad;
}

Subspace derived_subalgebra(const LieAlgebra& a) {
  EchelonBuilder builder(a.dim());
  for (const auto& [key, value] : a.table()) builder.insert(value);
  return std::move(builder).finish();
}

Subspace center(const LieAlgebra& a) {
  // Column i of the stacked adjoint is ([b_i, b_0], ..., [b_i, b_{n-1}]).
  const std::size_t n = a.dim();
  std::vector<SparseVector> columns(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) columns[i].add_scaled(a.bracket(i, j).shifted(j * n), 1);
  }
  return kernel_basis(Matrix::from_rows(n * n, std::move(columns)).transpose());
}

Subspace bracket_with_algebra(const LieAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw DimensionMismatch("subspace does not live in the algebra");
  EchelonBuilder builder(a.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) {
    for (std::size_t i = 0; i < a.dim(); ++i) builder.insert(a.bracket(s.basis().row(r), SparseVector::unit(i)));
  }
  return std::move(builder).finish();
}

std::vector<Subspace> lower_central_series(const LieAlgebra& a) {
  std::vector<Subspace> series{Subspace::full(a.dim())};
  while (!series.back().is_zero()) {
    Subspace next = bracket_with_algebra(a, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> nilpotency_class(const LieAlgebra& a) {
  const auto series = lower_central_series(a);
  if (!series.back().is_zero()) return std::nullopt;
  return series.size() - 1;
}

SparseVector Quotient::project(const SparseVector& v) const {
  SparseVector residual = ideal.reduce(v);
  SparseVector out;
  for (const auto& e : residual.entries()) {
    auto it = std::lower_bound(kept.begin(), kept.end(), e.index);
    out.push_back(static_cast<std::size_t>(it - kept.begin()), e.value);
  }
  return out;
}

Quotient quotient(const LieAlgebra& a, const Subspace& ideal) {
  if (ideal.ambient_dim() != a.dim()) throw DimensionMismatch("ideal does not live in the algebra");
  if (!ideal.contains(bracket_with_algebra(a, ideal))) throw NotAnIdeal("subspace is not an ideal");

  Quotient q{LieAlgebra{}, ideal, ideal.free_columns()};
  std::vector<std::string> labels;
  for (std::size_t c : q.kept) labels.push_back(a.labels()[c]);
  BracketTable table;
  for (std::size_t p = 0; p < q.kept.size(); ++p) {
    for (std::size_t r = p + 1; r < q.kept.size(); ++r) {
      SparseVector v = q.project(a.bracket(q.kept[p], q.kept[r]));
      if (!v.empty()) table[{p, r}] = std::move(v);
    }
  }
  q.algebra = LieAlgebra(q.kept.size(), std::move(labels), table);
  return q;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  BracketTable table = a.table();
  for (const auto& [key, value] : b.table()) {
    table[{key.first + a.dim(), key.second + a.dim()}] = value.shifted(a.dim());
  }
  return LieAlgebra(a.dim() + b.dim(), std::move(labels), table);
}

LieAlgebra abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  return LieAlgebra(n, std::move(labels), {});
}

LieAlgebra heisenberg(std::size_t m) {
  if (m == 0) throw PreconditionError("heisenberg(m) needs m >= 1");
  const std::size_t z = 2 * m;
  std::vector<std::string> labels;
  BracketTable table;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back("x" + std::to_string(2 * i + 1));
    labels.push_back("x" + std::to_string(2 * i + 2));
    table[{2 * i, 2 * i + 1}] = SparseVector::unit(z);
  }
  labels.push_back("z");
  return LieAlgebra(z + 1, std::move(labels), table);
}

LieAlgebra change_basis(const LieAlgebra& a, const Matrix& basis) {
  if (basis.rows() != a.dim() || basis.cols() != a.dim()) throw DimensionMismatch("basis matrix must be dim x dim");
  const Matrix to_new = inverse(basis);
  BracketTable table;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      SparseVector v = multiply(a.bracket(basis.row(i), basis.row(j)), to_new);
      if (!v.empty()) table[{i, j}] = std::move(v);
    }
  }
  return LieAlgebra(a.dim(), {}, table);
}

bool has_generators_first_basis(const LieAlgebra& a) {
  const Subspace derived = derived_subalgebra(a);
  const std::size_t n = a.dim() - derived.dim();
  for (std::size_t r = 0; r < derived.dim(); ++r) {
    if (derived.pivots()[r] != n + r || derived.basis().row(r).nonzeros() != 1) return false;
  }
  return true;
}

Rebased generators_first(const LieAlgebra& a) {
  if (has_generators_first_basis(a)) return {a, Matrix::identity(a.dim())};
  const Subspace derived = derived_subalgebra(a);
  std::vector<SparseVector> rows;
  for (std::size_t c : derived.free_columns()) rows.push_back(SparseVector::unit(c));
  for (std::size_t r = 0; r < derived.dim(); ++r) rows.push_back(derived.basis().row(r));
  Matrix basis = Matrix::from_rows(a.dim(), std::move(rows));
  LieAlgebra rebased = change_basis(a, basis);
  return {std::move(rebased), std::move(basis)};
}

std::size_t wedge_index(std::size_t d, std::size_t i, std::size_t j) {
  if (!(i < j && j < d)) throw PreconditionError("wedge_index needs i < j < d");
  // Pairs (0,1), (0,2), ..., (0,d-1), (1,2), ...
  return i * d - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> wedge_pair(std::size_t d, std::size_t index) {
  for (std::size_t i = 0; i + 1 < d; ++i) {
    const std::size_t row = d - i - 1;
    if (index < row) return {i, i + 1 + index};
    index -= row;
  }
  throw PreconditionError("wedge index out of range");
}

LieAlgebra class2_quotient(std::size_t d, const Subspace& relations) {
  const std::size_t w = wedge_dim(d);
  if (relations.ambient_dim() != w) throw DimensionMismatch("relation subspace must live in the wedge coordinates");
  const std::vector<std::size_t> kept = relations.free_columns();

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("x" + std::to_string(i + 1));
  for (std::size_t c : kept) {
    auto [i, j] = wedge_pair(d, c);
    labels.push_back("[x" + std::to_string(i + 1) + ",x" + std::to_string(j + 1) + "]");
  }

  BracketTable table;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const SparseVector residual = relations.reduce(SparseVector::unit(wedge_index(d, i, j)));
      SparseVector v;
      for (const auto& e : residual.entries()) {
        auto it = std::lower_bound(kept.begin(), kept.end(), e.index);
        v.push_back(d + static_cast<std::size_t>(it - kept.begin()), e.value);
      }
      if (!v.empty()) table[{i, j}] = std::move(v);
    }
  }
  return LieAlgebra(d + kept.size(), std::move(labels), table);
}

Subspace random_relation_subspace(std::size_t d, std::size_t codim, std::mt19937_64& rng) {
  const std::size_t w = wedge_dim(d);
  if (codim > w) throw PreconditionError("relation subspace larger than the wedge space");
  EchelonBuilder builder(w);
  while (builder.rank() < codim) {
    SparseVector v;
    for (std::size_t c = 0; c < w; ++c) v.push_back(c, static_cast<long>(rng() % 7) - 3);
    builder.insert(v);
  }
  return std::move(builder).finish();
}

LieAlgebra gh_construct(const GhSpec& spec) {
  const std::size_t w = wedge_dim(spec.d);
  if (spec.d < 3) throw PreconditionError("generalized Heisenberg construction needs d >= 3");
  if (spec.rank < 1 || spec.rank > w) throw PreconditionError("rank must lie in 1..d(d-1)/2");
  const std::size_t codim = w - spec.rank;

  if (spec.relation_subspace) {
    const Subspace& s = *spec.relation_subspace;
    if (s.ambient_dim() != w || s.dim() != codim) throw PreconditionError("relation subspace has the wrong dimension");
    LieAlgebra a = class2_quotient(spec.d, s);
    if (!is_generalized_heisenberg(a)) throw CenterViolation("relation subspace makes a generator combination central");
    return a;
  }
  if (!spec.seed) {
    if (codim != 0) throw PreconditionError("rank below d(d-1)/2 needs relations or a seed");
    return class2_quotient(spec.d, Subspace(w));
  }
  std::mt19937_64 rng(*spec.seed);
  for (int attempt = 0; attempt < kGhRetryBudget; ++attempt) {
    LieAlgebra a = class2_quotient(spec.d, random_relation_subspace(spec.d, codim, rng));
    if (is_generalized_heisenberg(a)) return a;
  }
  throw CenterViolation("no generalized Heisenberg algebra found within the retry budget");
}

bool is_generalized_heisenberg(const LieAlgebra& a) { return derived_subalgebra(a) == center(a); }

std::size_t minimal_generators(const LieAlgebra& a) { return a.dim() - derived_subalgebra(a).dim(); }

std::string_view to_string(Variant v) { return v == Variant::generic ? "generic" : "deficient"; }

}  // namespace gha
