#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homjordan/linalg.hpp"

namespace homjordan {

// Univariate polynomials over the scalar field, coefficients low-to-high,
// trailing zeros trimmed (zero polynomial has empty coefficient list).
struct Poly {
  FieldDescriptor field;
  std::vector<Scalar> coeff;

  static Poly zero(const FieldDescriptor& f) { return Poly{f, {}}; }
  static Poly constant(const Scalar& c);
  static Poly x(const FieldDescriptor& f);
  static Poly from_coeffs(const FieldDescriptor& f, std::vector<Scalar> c);

  Index degree() const { return static_cast<Index>(coeff.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeff.empty(); }
  Scalar leading() const;
  Poly monic() const;
  std::string str() const;  // e.g. "x^2 - 3x + 1"

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Scalar& c, const Poly& a);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);  // quotient, remainder
Poly poly_gcd(const Poly& a, const Poly& b);                 // monic gcd

// Invariant factors d_1 | d_2 | ... | d_k (monic, degree >= 1) of a square
// matrix, i.e. the nonunit diagonal of the Smith normal form of xI - m over
// F[x]. Two square matrices are similar iff their lists coincide.
std::vector<Poly> invariant_factors(const Mat& m);

// Companion-block canonical form assembled from the invariant factors;
// similar matrices and only those share it.
Mat rational_canonical_form(const Mat& m);

bool similar(const Mat& a, const Mat& b);

Mat companion_matrix(const Poly& monic);

}  // namespace homjordan
