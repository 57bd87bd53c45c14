#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "homjordan/field.hpp"

namespace homjordan {

// ---------------------------------------------------------------------------
// Exact field element. A Scalar is either
//   * an integer literal (no field attached yet; produced by Scalar(0),
//     Scalar(1), ... which Eigen and generic code emit),
//   * a rational (arbitrary-precision, always in lowest terms, positive
//     denominator -- mpq_class canonicalizes), or
//   * a residue in [0, p) of a prime field GF(p), p < 2^62.
// Literals coerce into whichever field they first meet; combining elements of
// two different fields throws FieldMismatchError. All arithmetic is exact.
// ---------------------------------------------------------------------------

class Scalar {
 public:
  Scalar() : rep_(Rep::Literal), q_(0) {}
  Scalar(int v) : rep_(Rep::Literal), q_(v) {}                 // NOLINT(runtime/explicit)
  Scalar(long v) : rep_(Rep::Literal), q_(static_cast<long>(v)) {}  // NOLINT
  Scalar(long long v) : rep_(Rep::Literal), q_(mpz_class(std::to_string(v))) {}  // NOLINT

  static Scalar rational(mpq_class v);
  static Scalar rational(long num, long den);
  static Scalar residue(std::uint64_t value, std::uint64_t p);
  // Integer literal v interpreted in `field`.
  static Scalar in_field(long v, const FieldDescriptor& field);
  static Scalar zero(const FieldDescriptor& field) { return in_field(0, field); }
  static Scalar one(const FieldDescriptor& field) { return in_field(1, field); }

  // Text forms: "-3/7", "4" over the rationals; "3" (any integer, reduced)
  // over GF(p). Fractions "a/b" are accepted over GF(p) when b is invertible.
  static Scalar parse(const std::string& text, const FieldDescriptor& field);
  std::string str() const;

  bool is_literal() const { return rep_ == Rep::Literal; }
  bool is_zero() const;
  bool is_one() const;
  // Throws for literals; every fielded value knows its field.
  FieldDescriptor field() const;

  // Value accessors (rationals/literals only).
  const mpq_class& rational_value() const;
  std::uint64_t residue_value() const { return r_; }

  Scalar inverse() const;  // DivisionByZeroError on zero
  Scalar pow(std::uint64_t e) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  enum class Rep { Literal, Rational, Residue };

  Rep rep_;
  mpq_class q_;           // Literal / Rational payload
  std::uint64_t r_ = 0;   // Residue payload
  std::uint64_t p_ = 0;   // Residue modulus

  std::uint64_t lift_residue(std::uint64_t p) const;
  static void require_same_field(const Scalar& a, const Scalar& b);
};

}  // namespace homjordan

namespace Eigen {

template <>
struct NumTraits<homjordan::Scalar> {
  using Real = homjordan::Scalar;
  using NonInteger = homjordan::Scalar;
  using Literal = homjordan::Scalar;
  using Nested = homjordan::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 30,
  };
  static inline Real epsilon() { return homjordan::Scalar(0); }
  static inline Real dummy_precision() { return homjordan::Scalar(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
