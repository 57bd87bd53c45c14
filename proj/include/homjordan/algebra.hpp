#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homjordan/linalg.hpp"

namespace homjordan {

// ---------------------------------------------------------------------------
// Structure-constant model of a finite-dimensional commutative algebra with a
// twist map: mu(e_i, e_j) = sum_k c[i][j][k] e_k, stored per output
// coordinate as bilinear forms B_k with B_k(i,j) = c[i][j][k] (all symmetric),
// and alpha as an n x n matrix in the column convention
// alpha(e_j) = sum_i alpha(i,j) e_i, so coordinate vectors transform as
// x -> alpha * x.
// ---------------------------------------------------------------------------

class StructureTensor {
 public:
  StructureTensor() = default;
  static StructureTensor zero(const FieldDescriptor& f, Index n);

  Index dim() const { return n_; }
  const FieldDescriptor& field() const { return field_; }

  const Scalar& c(Index i, Index j, Index k) const { return component_[k](i, j); }
  // Sets c[i][j][k] and c[j][i][k] together.
  void set(Index i, Index j, Index k, const Scalar& v);
  // Adds a (possibly one-sided) table entry; rejects conflicting duplicates.
  void add_entry(Index i, Index j, Index k, const Scalar& v);

  // mu(e_i, e_j) as a coordinate vector.
  Vec basis_product(Index i, Index j) const;
  const Mat& output_form(Index k) const { return component_[k]; }

  bool is_symmetric() const;
  friend bool operator==(const StructureTensor& a, const StructureTensor& b);
  friend bool operator!=(const StructureTensor& a, const StructureTensor& b) { return !(a == b); }

 private:
  FieldDescriptor field_;
  Index n_ = 0;
  std::vector<Mat> component_;                 // component_[k](i,j) = c[i][j][k]
  std::vector<std::vector<std::vector<bool>>> explicit_entry_;  // add_entry bookkeeping
};

struct HomAlgebra {
  FieldDescriptor field;
  StructureTensor mu;
  Mat alpha;
  bool jordan_mode = false;  // plain Jordan algebra: alpha is the identity

  Index dim() const { return mu.dim(); }
};

HomAlgebra make_hom_algebra(const FieldDescriptor& f, StructureTensor mu, Mat alpha);
HomAlgebra make_jordan_algebra(const FieldDescriptor& f, StructureTensor mu);
HomAlgebra zero_algebra(const FieldDescriptor& f, Index n);
// Entry-wise field change (e.g. reduce an integer fixture mod p).
HomAlgebra map_algebra_to_field(const HomAlgebra& a, const FieldDescriptor& target);

// Tensor of (x, y) -> m(mu(x, y)); the basic building block for twisting a
// product by a linear map or undoing such a twist.
StructureTensor compose_with_map(const StructureTensor& t, const Mat& m);

Vec multiply(const HomAlgebra& a, const Vec& x, const Vec& y);
// Matrix of x -> mu(e_i, x).
Mat left_mult_matrix(const HomAlgebra& a, Index i);
// Matrix of x -> mu(z, x) for an arbitrary element z.
Mat left_mult_matrix(const HomAlgebra& a, const Vec& z);

// ---------------------------------------------------------------------------
// Verification verdicts. Fails always carries a witness whose re-evaluation
// reproduces the unequal sides; Undecidable carries the reason.
// ---------------------------------------------------------------------------

enum class Verdict { Holds, Fails, Undecidable };

std::string verdict_str(Verdict v);

struct Witness {
  std::vector<std::pair<std::string, Vec>> inputs;
  Vec lhs, rhs;
};

struct CheckResult {
  std::string check;
  Verdict verdict = Verdict::Holds;
  std::optional<Witness> witness = std::nullopt;
  std::string reason = {};  // Undecidable only

  bool holds() const { return verdict == Verdict::Holds; }
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  Verdict overall() const;
  const CheckResult* find(const std::string& name) const;
  bool all_hold() const { return overall() == Verdict::Holds; }
};

struct CheckOptions {
  // Cap on the number of points enumerated when an identity must be checked
  // exhaustively (characteristic 2 or 3); p^n beyond this is Undecidable.
  std::uint64_t enumeration_budget = 1ull << 16;
};

// Two sides of the defining identities at a concrete point, for witness
// re-evaluation and for the exhaustive oracle.
std::pair<Vec, Vec> hom_jordan_sides(const HomAlgebra& a, const Vec& x, const Vec& y);
std::pair<Vec, Vec> jordan_sides(const HomAlgebra& a, const Vec& x, const Vec& y);
std::pair<Vec, Vec> multiplicative_sides(const HomAlgebra& a, const Vec& x, const Vec& y);

CheckResult check_commutative(const HomAlgebra& a);

// Decides the defining identity for ALL x, y: full polarization on basis
// tuples in characteristic 0 or p >= 5, exhaustive point enumeration in
// characteristic 2 / 3 (within budget), Undecidable otherwise.
CheckResult check_hom_jordan(const HomAlgebra& a, const CheckOptions& opts = {});
CheckResult check_hom_jordan_polarized(const HomAlgebra& a);
CheckResult check_hom_jordan_exhaustive(const HomAlgebra& a, std::uint64_t budget = 1ull << 16);

CheckResult check_jordan(const HomAlgebra& a, const CheckOptions& opts = {});
CheckResult check_jordan_polarized(const HomAlgebra& a);
CheckResult check_jordan_exhaustive(const HomAlgebra& a, std::uint64_t budget = 1ull << 16);

CheckResult check_multiplicative(const HomAlgebra& a);

// commutative + hom_jordan + multiplicative (the `verify` surface).
VerificationReport verify_algebra(const HomAlgebra& a, const CheckOptions& opts = {});

// phi as an algebra map a -> b: product compatibility, twist intertwining,
// and invertibility (the latter only matters for isomorphism claims).
VerificationReport check_homomorphism(const Mat& phi, const HomAlgebra& a, const HomAlgebra& b);
bool is_homomorphism(const Mat& phi, const HomAlgebra& a, const HomAlgebra& b);
bool is_isomorphism(const Mat& phi, const HomAlgebra& a, const HomAlgebra& b);

// Checks one map two ways: directly as a twisted-algebra isomorphism, and as
// an isomorphism of the induced plain algebras intertwining the twists. The
// two verdicts provably agree when the twists are invertible; `agree`
// records whether they did.
struct InducedIsoReport {
  VerificationReport direct;
  VerificationReport induced;
  bool direct_iso = false;
  bool induced_iso = false;
  bool agree = false;
};
InducedIsoReport check_hom_isomorphism_via_induced(const Mat& phi, const HomAlgebra& a,
                                                   const HomAlgebra& b);

}  // namespace homjordan
