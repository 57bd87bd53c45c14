#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homjordan/algebra.hpp"
#include "homjordan/poly.hpp"

namespace homjordan {

// ---------------------------------------------------------------------------
// Twisting and untwisting
// ---------------------------------------------------------------------------

// (V, mu) plain + endomorphism alpha  ->  (V, alpha o mu, alpha).
// Requires alpha to be an endomorphism of j (NotEndomorphismError). With
// certify, the result is checked to satisfy the twisted identity and
// multiplicativity; a Fails verdict raises CertificationError (an
// Undecidable verdict passes through -- honesty over optimism).
HomAlgebra yau_twist(const HomAlgebra& j, const Mat& alpha, bool certify = true);

// Multiplicative algebra with invertible twist  ->  (V, alpha^{-1} o mu),
// plain. Exact round trip: yau_twist(induced_jordan(a), a.alpha) == a.
HomAlgebra induced_jordan(const HomAlgebra& a, bool certify = true);

// ---------------------------------------------------------------------------
// Quotients, sums, splits
// ---------------------------------------------------------------------------

// Quotient by a two-sided twist-stable ideal. Coset representatives default
// to the ambient coordinates complementary to the ideal's pivot columns; an
// explicit complement can be supplied to exercise representative
// independence.
HomAlgebra quotient_algebra(const HomAlgebra& a, const Subspace& ideal, bool certify = true);
HomAlgebra quotient_algebra_with_representatives(const HomAlgebra& a, const Subspace& ideal,
                                                 const std::vector<Index>& rep_cols,
                                                 bool certify = true);
// The projection V -> V/I realized on coordinates for a given representative
// choice (rows = quotient dim).
Mat quotient_projection(const HomAlgebra& a, const Subspace& ideal,
                        const std::vector<Index>& rep_cols);
std::vector<Index> default_representatives(const Subspace& ideal);

HomAlgebra direct_sum(const HomAlgebra& a, const HomAlgebra& b);
// Embedding of the i-th summand (i in {0,1}) as a subspace of the sum.
Subspace summand_subspace(const HomAlgebra& a, const HomAlgebra& b, int which);

// For multiplicative a with alpha^2 = alpha and mu(Im alpha, V) <= Im alpha:
// V decomposes as (V/Ker alpha) (+) Ker alpha, with a certified isomorphism.
struct SplitResult {
  HomAlgebra summand_quotient;  // on V/Ker(alpha), invertible induced twist
  HomAlgebra summand_kernel;    // on Ker(alpha), zero twist
  HomAlgebra combined;          // their direct sum
  Mat iso;                      // V -> combined
  VerificationReport iso_report;
};
SplitResult split_idempotent_alpha(const HomAlgebra& a);

// ---------------------------------------------------------------------------
// Example families and fixtures. The families reproduce their documented
// tables verbatim and assert nothing; callers run the verifiers (the
// discrepancy log exists precisely because some claimed properties fail).
// ---------------------------------------------------------------------------

HomAlgebra family_dim1(const FieldDescriptor& f, const Scalar& k);
HomAlgebra family_dim2(const FieldDescriptor& f, const Scalar& p, const Scalar& q);
HomAlgebra family_cyclic(const FieldDescriptor& f, Index n, const Mat& alpha);

// Two basis vectors with mu(e1,e1)=e2, mu(e2,e2)=e1, mu(e1,e2)=0 and the
// swap twist; equivalently the Yau twist of F x F by the coordinate swap.
HomAlgebra fixture_swap_pair(const FieldDescriptor& f);

// Plain algebra x o y = (xy + yx)/2 from an associative table
// (NotAssociativeError / CharacteristicError in characteristic two).
HomAlgebra special_jordan_from_associative(const FieldDescriptor& f,
                                           const StructureTensor& assoc);

// ---------------------------------------------------------------------------
// Classification data for simple multiplicative algebras: a minimal ideal X
// of the induced plain algebra, the twist-orbit length n, and the similarity
// data of alpha^n restricted to X.
// ---------------------------------------------------------------------------

struct ClassificationSignature {
  StructureTensor ideal_tensor;      // product of the chosen ideal, in its basis
  Mat ideal_basis;                   // rows: the recorded basis of the ideal
  Index orbit_length = 0;            // n
  Mat a1;                            // alpha^n restricted to the ideal
  std::vector<Poly> a1_invariants;   // invariant factors of a1
  Index total_dim = 0;
};

ClassificationSignature classification_signature(const HomAlgebra& a, std::uint64_t seed = 0);
// Assemble a signature from raw parts (for externally-given or hypothetical
// data); computes the similarity invariants.
ClassificationSignature signature_from_parts(StructureTensor ideal_tensor, Index orbit_length,
                                             Mat a1, Index total_dim);

struct SignatureComparison {
  bool possibly_isomorphic = false;
  std::string distinction;  // which necessary condition failed
};
SignatureComparison compare_signatures(const ClassificationSignature& s,
                                       const ClassificationSignature& t);

// Extends an isomorphism m1 between the chosen ideals (in the signatures'
// recorded bases, intertwining a1/b1) to a certified isomorphism of the full
// algebras along the twist orbits. IntertwiningError / NotIdealIsoError when
// m1 does not qualify; CertificationError if the extension fails its checks.
Mat lift_ideal_isomorphism(const ClassificationSignature& sa, const ClassificationSignature& sb,
                           const Mat& m1, const HomAlgebra& a, const HomAlgebra& b);

struct IsoSearchResult {
  bool found = false;
  Mat iso;                        // certified isomorphism when found
  std::uint64_t candidates = 0;   // candidates examined
  std::string method;             // "ideal_maps" or "full_maps"
};
// Exhaustive certified isomorphism search over a small prime field. When both
// algebras expose signature data the search runs over ideal maps and lifts;
// otherwise it falls back to all linear maps. NotFound (found == false) after
// an exhaustive sweep certifies non-isomorphism. BudgetExceededError when the
// candidate space is too large.
IsoSearchResult iso_search_smallfield(const HomAlgebra& a, const HomAlgebra& b,
                                      std::uint64_t budget = 1ull << 16,
                                      std::uint64_t seed = 0);

}  // namespace homjordan
