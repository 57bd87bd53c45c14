#pragma once

#include <optional>
#include <vector>

#include "homjordan/matrix.hpp"

namespace homjordan {

// ---------------------------------------------------------------------------
// Exact dense linear algebra over Q and GF(p). Pivoting selects the first
// nonzero entry (there is no rounding, so no pivot-size concerns) and rows
// are normalized to leading 1, giving the canonical reduced row-echelon form.
// ---------------------------------------------------------------------------

struct RrefResult {
  Mat rref;
  Index rank = 0;
  std::vector<Index> pivot_cols;
};

RrefResult rref(const Mat& m);
Index rank(const Mat& m);

Mat invert(const Mat& m);  // SingularMatrixError when rank < n
bool is_invertible(const Mat& m);

// Unique or any-one solution of a x = b; nullopt when inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Canonical subspace of F^ambient: basis rows in RREF with no zero rows, so
// subspace equality is plain matrix equality.
struct Subspace {
  FieldDescriptor field;
  Index ambient = 0;
  Mat basis;  // dim x ambient, RREF

  Index dim() const { return basis.rows(); }
  bool is_zero() const { return basis.rows() == 0; }
  bool is_full() const { return basis.rows() == ambient; }

  static Subspace zero(const FieldDescriptor& f, Index ambient);
  static Subspace full(const FieldDescriptor& f, Index ambient);
  // Row space of an arbitrary generator matrix.
  static Subspace span(const FieldDescriptor& f, const Mat& generators);
  static Subspace span_vectors(const FieldDescriptor& f, Index ambient,
                               const std::vector<Vec>& generators);

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Remainder of v after eliminating this subspace's pivots; zero iff member.
  Vec reduce(const Vec& v) const;
  // Coordinates of a member vector in the basis rows (throws if not a member).
  Vec coordinates(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient == b.ambient && a.field == b.field && matrices_equal(a.basis, b.basis);
  }
};

Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_intersect(const Subspace& u, const Subspace& w);

// Column space and null space of a matrix, as canonical subspaces.
Subspace image(const Mat& m, const FieldDescriptor& f);
Subspace kernel(const Mat& m, const FieldDescriptor& f);

// Image of a subspace under a linear map (rows transform by m on the right^T).
Subspace apply_map(const Mat& m, const Subspace& s);

// Matrix of m restricted to an m-invariant subspace, in the subspace's basis.
// Throws PreconditionError if s is not invariant under m.
Mat restrict_map(const Mat& m, const Subspace& s);

// Ambient coordinates not holding a pivot of s: the default coset
// representatives for the quotient by s.
std::vector<Index> complement_columns(const Subspace& s);
// Projection F^ambient -> F^(ambient - dim s) onto the span of the chosen
// representative coordinates along s. rep_cols must complement s.
Mat complement_projection(const Subspace& s, const std::vector<Index>& rep_cols);
// Embedding of the representatives back into the ambient space (columns are
// the representative unit vectors); complement_projection * embedding = I.
Mat representative_embedding(const Subspace& s, const std::vector<Index>& rep_cols);

}  // namespace homjordan
