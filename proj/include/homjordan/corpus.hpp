#pragma once

#include <string>
#include <vector>

#include "homjordan/constructions.hpp"

namespace homjordan {

// ---------------------------------------------------------------------------
// Named fixture corpus shared by the test suites. All tables have integer
// entries, so every fixture also makes sense reduced modulo a prime.
// ---------------------------------------------------------------------------

// k pairwise-orthogonal idempotents: mu(e_i, e_i) = e_i.
HomAlgebra diagonal_algebra(const FieldDescriptor& f, Index k);
// mu(e0, e1) = e2, everything else zero (nilpotent, solvable).
HomAlgebra nil3_algebra(const FieldDescriptor& f);
// Unit element plus two orthogonal vectors squaring to the unit.
HomAlgebra spin3_algebra(const FieldDescriptor& f);
// 2x2 matrices under the symmetrized product (characteristic != 2).
HomAlgebra m2_special_jordan(const FieldDescriptor& f);
// Strictly upper triangular 3x3 matrices under the symmetrized product.
HomAlgebra strict_upper3_special_jordan(const FieldDescriptor& f);

// Matrix of x -> s x s^{-1} on the 2x2 matrix-unit basis (E11,E12,E21,E22).
Mat m2_conjugation_map(const FieldDescriptor& f, const Mat& s);
// Matrix of x -> x^T on the same basis.
Mat m2_transpose_map(const FieldDescriptor& f);
// Matrix of u_ij -> (d_i/d_j) u_ij on the strict-upper basis (u12,u13,u23).
Mat strict_upper3_conjugation_map(const FieldDescriptor& f, const Scalar& d1, const Scalar& d2,
                                  const Scalar& d3);

struct JordanTwistFixture {
  std::string name;
  HomAlgebra jordan;  // plain algebra
  Mat alpha;          // invertible endomorphism of it
};
// Plain fixtures paired with invertible endomorphisms (>= 20 pairs over Q).
std::vector<JordanTwistFixture> jordan_twist_corpus(const FieldDescriptor& f);

struct NamedAlgebra {
  std::string name;
  HomAlgebra algebra;
};
// Twisted algebras of dimension <= 3 (direct sums and kernel-bearing twists
// included); instantiated over small prime fields for the enumeration oracle.
std::vector<NamedAlgebra> small_hom_corpus(const FieldDescriptor& f);
// Wider corpus over Q used by the structure and bimodule suites.
std::vector<NamedAlgebra> rational_hom_corpus();

}  // namespace homjordan
