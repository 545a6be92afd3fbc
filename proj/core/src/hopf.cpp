#include "gha/hopf.hpp"

#include "gha/errors.hpp"

namespace gha {

HallBasis::HallBasis(std::size_t d) : d_(d), triple_index_(d * d * d, -1) {
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = i; k < d; ++k) {
        triple_index_[(i * d + j) * d + k] = static_cast<std::ptrdiff_t>(triples_.size());
        triples_.push_back({i, j, k});
      }
    }
  }
}

std::size_t HallBasis::triple(std::size_t i, std::size_t j, std::size_t k) const {
  const std::ptrdiff_t t = (i < d_ && j < d_ && k < d_) ? triple_index_[(i * d_ + j) * d_ + k] : -1;
  if (t < 0) throw PreconditionError("not a basic commutator of length 3");
  return grade3_offset() + static_cast<std::size_t>(t);
}

std::size_t HallBasis::grade(std::size_t index) const {
  if (index < grade2_offset()) return 1;
  if (index < grade3_offset()) return 2;
  if (index < size()) return 3;
  throw DimensionMismatch("Hall index out of range");
}

std::string HallBasis::label(std::size_t index) const {
  auto x = [](std::size_t i) { return "x" + std::to_string(i + 1); };
  switch (grade(index)) {
    case 1:
      return x(index);
    case 2: {
      auto [i, j] = wedge_pair(d_, index - grade2_offset());
      return "[" + x(i) + "," + x(j) + "]";
    }
    default: {
      const auto& t = triples_[index - grade3_offset()];
      return "[[" + x(t[0]) + "," + x(t[1]) + "]," + x(t[2]) + "]";
    }
  }
}

SparseVector HallBasis::rewrite(std::size_t i, std::size_t j, std::size_t k) const {
  if (k >= i) return SparseVector::unit(triple(i, j, k));
  // k < i < j: Jacobi gives [[x_i,x_j],x_k] = [[x_k,x_j],x_i] - [[x_k,x_i],x_j].
  std::size_t plus = triple(k, j, i);
  std::size_t minus = triple(k, i, j);
  SparseVector v;
  if (plus < minus) {
    v.push_back(plus, 1);
    v.push_back(minus, -1);
  } else {
    v.push_back(minus, -1);
    v.push_back(plus, 1);
  }
  return v;
}

SparseVector HallBasis::bracket(std::size_t a, std::size_t b) const {
  const std::size_t ga = grade(a);
  const std::size_t gb = grade(b);
  if (a == b || ga + gb > 3) return {};
  if (ga == 1 && gb == 1) {
    return a < b ? SparseVector::unit(pair(a, b)) : SparseVector::unit(pair(b, a), -1);
  }
  if (ga == 2) {
    auto [i, j] = wedge_pair(d_, a - grade2_offset());
    return rewrite(i, j, b);
  }
  auto [i, j] = wedge_pair(d_, b - grade2_offset());
  return Scalar(-1) * rewrite(i, j, a);
}

SparseVector free_bracket(const HallBasis& h, const SparseVector& u, const SparseVector& v) {
  if (u.extent() > h.size() || v.extent() > h.size()) throw DimensionMismatch("vector longer than the Hall basis");
  SparseVector out;
  for (const auto& a : u.entries()) {
    if (h.grade(a.index) == 3) break;
    for (const auto& b : v.entries()) {
      if (h.grade(a.index) + h.grade(b.index) > 3) break;
      out.add_scaled(h.bracket(a.index, b.index), a.value * b.value);
    }
  }
  return out;
}

Vector free_bracket(const HallBasis& h, const Vector& u, const Vector& v) {
  if (u.size() != h.size() || v.size() != h.size()) throw DimensionMismatch("vector length differs from the Hall basis");
  return free_bracket(h, SparseVector::from_dense(u), SparseVector::from_dense(v)).to_dense(h.size());
}

LieAlgebra free_nilpotent_algebra(const HallBasis& h) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < h.size(); ++i) labels.push_back(h.label(i));
  BracketTable table;
  for (std::size_t a = 0; a < h.grade3_offset(); ++a) {
    for (std::size_t b = a + 1; b < h.grade3_offset(); ++b) {
      SparseVector v = h.bracket(a, b);
      if (!v.empty()) table[{a, b}] = std::move(v);
    }
  }
  return LieAlgebra(h.size(), std::move(labels), table);
}

namespace {

// Grade-3 part of a full-coordinate vector, re-indexed from 0.
SparseVector grade3_part(const HallBasis& h, const SparseVector& v) {
  SparseVector out;
  for (const auto& e : v.entries()) {
    if (e.index >= h.grade3_offset()) out.push_back(e.index - h.grade3_offset(), e.value);
  }
  return out;
}

}  // namespace

FreePresentation presentation_from_class2(const LieAlgebra& a) {
  Rebased rebased = generators_first(a);
  FreePresentation p;
  p.data = class2_data(rebased.algebra);
  p.target = std::move(rebased.algebra);
  p.basis = std::move(rebased.basis);
  const std::size_t d = p.data.n;
  p.hall = HallBasis(d);

  // phi: grade-2 coordinates -> L^2, x_i ^ x_j |-> [x_i, x_j].
  const Matrix phi = Matrix::from_rows(p.data.r, p.data.pair_brackets).transpose();
  p.rel2 = kernel_basis(phi);

  EchelonBuilder bracket_span(p.hall.grade3_dim());
  for (std::size_t row = 0; row < p.rel2.dim(); ++row) {
    const SparseVector s = p.rel2.basis().row(row).shifted(p.hall.grade2_offset());
    for (std::size_t k = 0; k < d; ++k) {
      bracket_span.insert(grade3_part(p.hall, free_bracket(p.hall, s, SparseVector::unit(k))));
    }
  }
  p.rel2_bracket = std::move(bracket_span).finish();

  for (std::size_t s = 0; s < p.data.r; ++s) {
    Vector unit(p.data.r);
    unit[s] = 1;
    auto lift = solve(phi, unit);
    if (!lift) throw Error("derived basis vector has no grade-2 lift");
    p.derived_lifts.push_back(SparseVector::from_dense(*lift));
  }
  return p;
}

std::size_t hopf_multiplier_dim(const FreePresentation& p) {
  return p.rel2.dim() + p.hall.grade3_dim() - p.rel2_bracket.dim();
}

std::size_t exterior_square_oracle(const FreePresentation& p) {
  return p.hall.grade2_dim() + p.hall.grade3_dim() - p.rel2_bracket.dim();
}

Subspace ker_beta(const FreePresentation& p) {
  const Class2Data& c = p.data;
  std::vector<SparseVector> columns(c.tensor_dim());
  for (std::size_t s = 0; s < c.r; ++s) {
    const SparseVector lift = p.derived_lifts[s].shifted(p.hall.grade2_offset());
    for (std::size_t k = 0; k < c.n; ++k) {
      const SparseVector image = grade3_part(p.hall, free_bracket(p.hall, lift, SparseVector::unit(k)));
      columns[c.tensor_index(s, k)] = p.rel2_bracket.reduce(image);
    }
  }
  return kernel_basis(Matrix::from_rows(p.hall.grade3_dim(), std::move(columns)).transpose());
}

Subspace exterior_center(const FreePresentation& p) {
  const HallBasis& h = p.hall;
  const std::size_t d = p.data.n;
  const std::size_t block = h.size();

  std::vector<SparseVector> lifts;
  for (std::size_t i = 0; i < d; ++i) lifts.push_back(SparseVector::unit(i));
  for (const auto& w : p.derived_lifts) lifts.push_back(w.shifted(h.grade2_offset()));

  // Column for each target basis vector: its brackets with every generator,
  // the grade-3 part taken modulo [rel2, F]. A kernel vector is exactly an
  // element whose lift brackets F into [R, F].
  std::vector<SparseVector> columns;
  for (const auto& lift : lifts) {
    SparseVector column;
    for (std::size_t k = 0; k < d; ++k) {
      const SparseVector v = free_bracket(h, lift, SparseVector::unit(k));
      SparseVector low;
      for (const auto& e : v.entries()) {
        if (e.index < h.grade3_offset()) low.push_back(e.index, e.value);
      }
      SparseVector high = p.rel2_bracket.reduce(grade3_part(h, v)).shifted(h.grade3_offset());
      column.add_scaled((low + high).shifted(k * block), 1);
    }
    columns.push_back(std::move(column));
  }
  return kernel_basis(Matrix::from_rows(d * block, std::move(columns)).transpose());
}

Cover cover_construct(const FreePresentation& p) {
  const HallBasis& h = p.hall;
  const LieAlgebra free = free_nilpotent_algebra(h);

  std::vector<SparseVector> ideal_rows;
  for (std::size_t r = 0; r < p.rel2_bracket.dim(); ++r) {
    ideal_rows.push_back(p.rel2_bracket.basis().row(r).shifted(h.grade3_offset()));
  }
  const Quotient q = quotient(free, Subspace::span(h.size(), ideal_rows));

  std::vector<SparseVector> b_rows;
  for (std::size_t r = 0; r < p.rel2.dim(); ++r) {
    b_rows.push_back(q.project(p.rel2.basis().row(r).shifted(h.grade2_offset())));
  }
  for (std::size_t t = h.grade3_offset(); t < h.size(); ++t) b_rows.push_back(q.project(SparseVector::unit(t)));
  return {q.algebra, Subspace::span(q.algebra.dim(), b_rows)};
}

ExtensionWitness extension_witness(const LieAlgebra& a) {
  const Class2Data c = class2_data(a);
  const Subspace k = psi2_image(c).image;
  const std::vector<std::size_t> kept = k.free_columns();
  const std::size_t n = c.n;
  const std::size_t r = c.r;
  const std::size_t w = wedge_dim(n);
  const std::size_t y0 = n;
  const std::size_t e0 = n + r;
  const std::size_t a0 = n + r + w;

  auto tensor_class = [&](std::size_t s, std::size_t i) {
    SparseVector out;
    const SparseVector residual = k.reduce(SparseVector::unit(c.tensor_index(s, i)));
    for (const auto& e : residual.entries()) {
      auto it = std::lower_bound(kept.begin(), kept.end(), e.index);
      out.push_back(a0 + static_cast<std::size_t>(it - kept.begin()), e.value);
    }
    return out;
  };

  BracketTable table;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      SparseVector v = c.pair(i, j).shifted(y0);
      v.push_back(e0 + wedge_index(n, i, j), 1);
      table[{i, j}] = std::move(v);
    }
  }
  for (std::size_t s = 0; s < r; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      SparseVector v = tensor_class(s, i);
      // table keys need i < j: [x_i, y_s] = -[y_s, x_i]
      if (!v.empty()) table[{i, y0 + s}] = Scalar(-1) * std::move(v);
    }
  }
  const std::size_t dim = a0 + kept.size();
  const LieAlgebra star(dim, {}, table);

  ExtensionWitness witness;
  witness.dim = dim;
  witness.jacobi_ok = jacobi_check(star).empty();
  std::vector<SparseVector> mstar;
  for (std::size_t i = e0; i < dim; ++i) mstar.push_back(SparseVector::unit(i));
  witness.multiplier = subspace_intersect(Subspace::span(dim, mstar), derived_subalgebra(star)).dim();
  const auto series = lower_central_series(star);
  witness.cube_dim = series.size() > 2 ? series[2].dim() : 0;
  witness.s = witness.multiplier - witness.cube_dim;
  return witness;
}

CoverReport verify_cover(const LieAlgebra& a, const LieAlgebra& cover, const Subspace& B) {
  if (B.ambient_dim() != cover.dim()) throw DimensionMismatch("central ideal does not live in the cover");
  const Subspace z = center(cover);
  const Subspace derived = derived_subalgebra(cover);
  if (!z.contains(B)) throw PreconditionError("B is not central in the cover");
  if (!derived.contains(B)) throw PreconditionError("B is not contained in the derived subalgebra of the cover");

  const LieAlgebra target = generators_first(a).algebra;
  const Dimensions dims = compute_dimensions(target);

  CoverReport report;
  const auto series = lower_central_series(cover);
  report.nilpotency_class = series.back().is_zero() ? series.size() - 1 : 0;
  report.class_three = report.nilpotency_class == 3;
  report.center_in_derived = derived.contains(z);
  report.ideal_dim = B.dim();
  report.dim_matches = B.dim() == dims.multiplier && cover.dim() == target.dim() + B.dim();

  const Subspace cube = series.size() > 2 ? series[2] : Subspace(cover.dim());
  report.cube_dim = cube.dim();
  report.cube_in_ideal = B.contains(cube);
  report.s = report.cube_in_ideal ? B.dim() - cube.dim() : 0;
  report.defect = wedge_dim(dims.n) - dims.r;
  report.branch_ok = report.cube_in_ideal && report.s <= report.defect;

  // cover/B against target: send the images of the cover generators and
  // their brackets to the generators of target and theirs, and check the
  // assignment is a well-defined linear bijection.
  const Quotient q = quotient(cover, B);
  const std::size_t qd = q.algebra.dim();
  const std::size_t td = target.dim();
  const std::size_t n = dims.n;
  if (qd == td && n <= cover.dim()) {
    std::vector<SparseVector> source, graph;
    std::vector<SparseVector> gens_q, gens_t;
    for (std::size_t i = 0; i < n; ++i) {
      gens_q.push_back(q.project(SparseVector::unit(i)));
      gens_t.push_back(SparseVector::unit(i));
    }
    auto add = [&](const SparseVector& s, const SparseVector& t) {
      source.push_back(s);
      graph.push_back(s + t.shifted(qd));
    };
    std::vector<SparseVector> images;
    for (std::size_t i = 0; i < n; ++i) {
      add(gens_q[i], gens_t[i]);
      images.push_back(gens_t[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        add(q.algebra.bracket(gens_q[i], gens_q[j]), target.bracket(i, j));
        images.push_back(target.bracket(i, j));
      }
    }
    const std::size_t src_rank = Subspace::span(qd, source).dim();
    const std::size_t img_rank = Subspace::span(td, images).dim();
    const std::size_t graph_rank = Subspace::span(qd + td, graph).dim();
    const auto qclass = nilpotency_class(q.algebra);
    report.quotient_matches = src_rank == qd && img_rank == td && graph_rank == qd && qclass && *qclass <= 2;
  }

  report.witness = extension_witness(target);
  report.witness_agrees = report.witness.jacobi_ok && report.witness.multiplier == B.dim() &&
                          report.witness.cube_dim == cube.dim() && report.witness.s == report.s;
  return report;
}

}  // namespace gha
