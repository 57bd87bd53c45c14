#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homjordan {

// ---------------------------------------------------------------------------
// Ground fields: exact rationals or a prime field GF(p), p a word-sized prime.
// ---------------------------------------------------------------------------

enum class FieldKind { Rationals, PrimeField };

bool is_prime_u64(std::uint64_t n);

struct FieldDescriptor {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;  // modulus, PrimeField only

  static FieldDescriptor rationals() { return FieldDescriptor{FieldKind::Rationals, 0}; }
  static FieldDescriptor prime(std::uint64_t p);

  bool operator==(const FieldDescriptor&) const = default;

  // 0 for the rationals, p for GF(p).
  std::uint64_t characteristic() const {
    return kind == FieldKind::PrimeField ? p : 0;
  }
  std::string str() const;
};

// ---------------------------------------------------------------------------
// Error taxonomy. Everything derives from Error so callers can catch broadly;
// the concrete types signal which contract was violated.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatchError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct DivisionByZeroError : Error { using Error::Error; };
struct SingularMatrixError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct NotAnIdealError : PreconditionError { using PreconditionError::PreconditionError; };
struct NotEndomorphismError : PreconditionError { using PreconditionError::PreconditionError; };
struct NotAutomorphismError : PreconditionError { using PreconditionError::PreconditionError; };
struct NotMultiplicativeError : PreconditionError { using PreconditionError::PreconditionError; };
struct NotJordanTypeError : PreconditionError { using PreconditionError::PreconditionError; };
struct NotAssociativeError : PreconditionError { using PreconditionError::PreconditionError; };
struct CharacteristicError : PreconditionError { using PreconditionError::PreconditionError; };
struct RadicalNonzeroError : PreconditionError { using PreconditionError::PreconditionError; };
struct NotSimpleError : PreconditionError { using PreconditionError::PreconditionError; };
struct IntertwiningError : PreconditionError { using PreconditionError::PreconditionError; };
struct NotIdealIsoError : PreconditionError { using PreconditionError::PreconditionError; };
struct EquivarianceError : PreconditionError { using PreconditionError::PreconditionError; };
struct BudgetExceededError : Error { using Error::Error; };
// Internal consistency violation: a certified construction failed its own
// certification. Must never occur; tests assert it does not.
struct CertificationError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InvariantViolationError : Error { using Error::Error; };

}  // namespace homjordan
