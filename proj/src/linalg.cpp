#include "homjordan/linalg.hpp"

namespace homjordan {

RrefResult rref(const Mat& m) {
  RrefResult res;
  res.rref = m;
  Mat& a = res.rref;
  const Index rows = a.rows(), cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i) {
      if (!a(i, c).is_zero()) { pivot = i; break; }
    }
    if (pivot < 0) continue;
    a.row(r).swap(a.row(pivot));
    Scalar inv = a(r, c).inverse();
    for (Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar factor = a(i, c);
      for (Index j = c; j < cols; ++j) a(i, j) -= factor * a(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

Index rank(const Mat& m) { return rref(m).rank; }

bool is_invertible(const Mat& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

Mat invert(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatchError("invert: matrix not square");
  const Index n = m.rows();
  if (n == 0) return m;
  FieldDescriptor f = field_of(m);
  Mat aug = zeros(f, n, 2 * n);
  aug.block(0, 0, n, n) = m;
  aug.block(0, n, n, n) = identity(f, n);
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivot_cols[n - 1] != n - 1)
    throw SingularMatrixError("invert: matrix is singular");
  return r.rref.block(0, n, n, n);
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  const Index rows = a.rows(), cols = a.cols();
  if (b.rows() != rows) throw DimensionMismatchError("solve: size mismatch");
  FieldDescriptor f = rows > 0 && cols > 0 ? field_of(a) : field_of(Mat(b));
  Mat aug = zeros(f, rows, cols + 1);
  if (cols > 0) aug.block(0, 0, rows, cols) = a;
  for (Index i = 0; i < rows; ++i) aug(i, cols) = b(i);
  RrefResult r = rref(aug);
  // Inconsistent iff some pivot lands in the last column.
  for (Index c : r.pivot_cols)
    if (c == cols) return std::nullopt;
  Vec x = zero_vector(f, cols);
  for (Index t = 0; t < static_cast<Index>(r.pivot_cols.size()); ++t)
    x(r.pivot_cols[t]) = r.rref(t, cols);
  return x;
}

Subspace Subspace::zero(const FieldDescriptor& f, Index ambient) {
  return Subspace{f, ambient, zeros(f, 0, ambient)};
}

Subspace Subspace::full(const FieldDescriptor& f, Index ambient) {
  return Subspace{f, ambient, identity(f, ambient)};
}

Subspace Subspace::span(const FieldDescriptor& f, const Mat& generators) {
  RrefResult r = rref(generators);
  Subspace s{f, generators.cols(), r.rref.topRows(r.rank)};
  return s;
}

Subspace Subspace::span_vectors(const FieldDescriptor& f, Index ambient,
                                const std::vector<Vec>& generators) {
  Mat g = zeros(f, static_cast<Index>(generators.size()), ambient);
  for (Index i = 0; i < g.rows(); ++i) {
    if (generators[i].rows() != ambient)
      throw DimensionMismatchError("span_vectors: generator has wrong length");
    g.row(i) = generators[i].transpose();
  }
  return span(f, g);
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.rows() != ambient) throw DimensionMismatchError("Subspace::reduce: wrong length");
  Vec w = v;
  for (Index t = 0; t < dim(); ++t) {
    // The basis is RREF, so row t's pivot is its first nonzero entry.
    Index pc = -1;
    for (Index j = 0; j < ambient; ++j)
      if (!basis(t, j).is_zero()) { pc = j; break; }
    if (pc < 0 || w(pc).is_zero()) continue;
    Scalar factor = w(pc);
    for (Index j = pc; j < ambient; ++j) w(j) -= factor * basis(t, j);
  }
  return w;
}

bool Subspace::contains(const Vec& v) const {
  Vec w = reduce(v);
  for (Index j = 0; j < ambient; ++j)
    if (!w(j).is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient != ambient) throw DimensionMismatchError("contains: ambient mismatch");
  for (Index i = 0; i < other.dim(); ++i)
    if (!contains(other.basis.row(i).transpose())) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  auto x = solve(basis.transpose(), v);
  if (!x) throw PreconditionError("coordinates: vector not in subspace");
  return *x;
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  if (u.ambient != w.ambient || !(u.field == w.field))
    throw DimensionMismatchError("subspace_sum: ambient/field mismatch");
  Mat stacked = zeros(u.field, u.dim() + w.dim(), u.ambient);
  if (u.dim() > 0) stacked.topRows(u.dim()) = u.basis;
  if (w.dim() > 0) stacked.bottomRows(w.dim()) = w.basis;
  return Subspace::span(u.field, stacked);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient != w.ambient || !(u.field == w.field))
    throw DimensionMismatchError("subspace_intersect: ambient/field mismatch");
  const Index n = u.ambient;
  // Zassenhaus: rref of [U U; W 0]; rows with zero left half carry the
  // intersection in their right half.
  Mat block = zeros(u.field, u.dim() + w.dim(), 2 * n);
  block.block(0, 0, u.dim(), n) = u.basis;
  block.block(0, n, u.dim(), n) = u.basis;
  block.block(u.dim(), 0, w.dim(), n) = w.basis;
  RrefResult r = rref(block);
  std::vector<Vec> gens;
  for (Index i = 0; i < r.rank; ++i) {
    bool left_zero = true;
    for (Index j = 0; j < n; ++j)
      if (!r.rref(i, j).is_zero()) { left_zero = false; break; }
    if (left_zero) gens.push_back(r.rref.row(i).segment(n, n).transpose());
  }
  return Subspace::span_vectors(u.field, n, gens);
}

Subspace image(const Mat& m, const FieldDescriptor& f) {
  return Subspace::span(f, Mat(m.transpose()));
}

Subspace kernel(const Mat& m, const FieldDescriptor& f) {
  const Index cols = m.cols();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (Index c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> gens;
  for (Index j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    Vec v = zero_vector(f, cols);
    v(j) = Scalar::one(f);
    for (Index t = 0; t < r.rank; ++t) v(r.pivot_cols[t]) = -r.rref(t, j);
    gens.push_back(v);
  }
  return Subspace::span_vectors(f, cols, gens);
}

Subspace apply_map(const Mat& m, const Subspace& s) {
  Mat rows = zeros(s.field, s.dim(), m.rows());
  for (Index i = 0; i < s.dim(); ++i)
    rows.row(i) = (m * s.basis.row(i).transpose()).transpose();
  Subspace out = Subspace::span(s.field, rows);
  out.ambient = m.rows();
  return out;
}

Mat restrict_map(const Mat& m, const Subspace& s) {
  Mat out = zeros(s.field, s.dim(), s.dim());
  for (Index t = 0; t < s.dim(); ++t) {
    Vec img = m * s.basis.row(t).transpose();
    if (!s.contains(img))
      throw PreconditionError("restrict_map: subspace is not invariant");
    out.col(t) = s.coordinates(img);
  }
  return out;
}

std::vector<Index> complement_columns(const Subspace& s) {
  std::vector<bool> pivot(s.ambient, false);
  RrefResult r = rref(s.basis);
  for (Index c : r.pivot_cols) pivot[c] = true;
  std::vector<Index> reps;
  for (Index j = 0; j < s.ambient; ++j)
    if (!pivot[j]) reps.push_back(j);
  return reps;
}

Mat complement_projection(const Subspace& s, const std::vector<Index>& rep_cols) {
  const Index n = s.ambient;
  const Index q = n - s.dim();
  if (static_cast<Index>(rep_cols.size()) != q)
    throw PreconditionError("complement_projection: wrong representative count");
  Mat basis = zeros(s.field, n, n);
  for (Index t = 0; t < s.dim(); ++t) basis.col(t) = s.basis.row(t).transpose();
  for (Index t = 0; t < q; ++t) basis.col(s.dim() + t) = unit_vector(s.field, n, rep_cols[t]);
  Mat inv;
  try {
    inv = invert(basis);
  } catch (const SingularMatrixError&) {
    throw PreconditionError("representatives do not complement the subspace");
  }
  return inv.bottomRows(q);
}

Mat representative_embedding(const Subspace& s, const std::vector<Index>& rep_cols) {
  const Index n = s.ambient;
  Mat emb = zeros(s.field, n, static_cast<Index>(rep_cols.size()));
  for (Index t = 0; t < static_cast<Index>(rep_cols.size()); ++t)
    emb(rep_cols[t], t) = Scalar::one(s.field);
  return emb;
}

}  // namespace homjordan
