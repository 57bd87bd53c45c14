#include "homjordan/scalar.hpp"

#include <ostream>

namespace homjordan {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime(std::uint64_t p) {
  if (p >= (1ull << 62)) throw PreconditionError("prime field modulus too large (must fit a machine word)");
  if (!is_prime_u64(p)) throw PreconditionError("prime field modulus " + std::to_string(p) + " is not prime");
  return FieldDescriptor{FieldKind::PrimeField, p};
}

std::string FieldDescriptor::str() const {
  return kind == FieldKind::Rationals ? "Q" : "GF(" + std::to_string(p) + ")";
}

Scalar Scalar::rational(mpq_class v) {
  Scalar s;
  s.rep_ = Rep::Rational;
  v.canonicalize();
  s.q_ = std::move(v);
  return s;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  return rational(mpq_class(num, den));
}

Scalar Scalar::residue(std::uint64_t value, std::uint64_t p) {
  FieldDescriptor f = FieldDescriptor::prime(p);
  Scalar s;
  s.rep_ = Rep::Residue;
  s.p_ = f.p;
  s.r_ = value % p;
  return s;
}

Scalar Scalar::in_field(long v, const FieldDescriptor& field) {
  if (field.kind == FieldKind::Rationals) return rational(mpq_class(v));
  long m = static_cast<long>(v % static_cast<long>(field.p));
  if (m < 0) m += static_cast<long>(field.p);
  Scalar s;
  s.rep_ = Rep::Residue;
  s.p_ = field.p;
  s.r_ = static_cast<std::uint64_t>(m);
  return s;
}

Scalar Scalar::parse(const std::string& text, const FieldDescriptor& field) {
  if (text.empty()) throw ParseError("empty scalar");
  std::string num = text, den = "1";
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (den.empty()) throw ParseError("scalar '" + text + "': missing denominator");
  }
  auto check_int = [&](const std::string& t) {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw ParseError("scalar '" + text + "': not an integer part");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw ParseError("scalar '" + text + "': unexpected character '" + t[i] + "'");
  };
  check_int(num);
  check_int(den);
  mpz_class num_z(num), den_z(den);
  if (den_z == 0) throw ParseError("scalar '" + text + "': zero denominator");
  mpq_class q(num_z, den_z);
  q.canonicalize();
  if (field.kind == FieldKind::Rationals) return rational(q);
  Scalar lit;
  lit.rep_ = Rep::Literal;
  lit.q_ = q;
  std::uint64_t r = lit.lift_residue(field.p);
  Scalar s;
  s.rep_ = Rep::Residue;
  s.p_ = field.p;
  s.r_ = r;
  return s;
}

std::string Scalar::str() const {
  if (rep_ == Rep::Residue) return std::to_string(r_);
  return q_.get_str();
}

bool Scalar::is_zero() const {
  return rep_ == Rep::Residue ? r_ == 0 : sgn(q_) == 0;
}

bool Scalar::is_one() const {
  return rep_ == Rep::Residue ? r_ == 1 : q_ == 1;
}

FieldDescriptor Scalar::field() const {
  switch (rep_) {
    case Rep::Rational:
      return FieldDescriptor::rationals();
    case Rep::Residue:
      return FieldDescriptor{FieldKind::PrimeField, p_};
    default:
      throw FieldMismatchError("integer literal has no field");
  }
}

const mpq_class& Scalar::rational_value() const {
  if (rep_ == Rep::Residue) throw FieldMismatchError("residue scalar has no rational value");
  return q_;
}

std::uint64_t Scalar::lift_residue(std::uint64_t p) const {
  if (rep_ == Rep::Residue) {
    if (p_ != p) throw FieldMismatchError("residues of different prime fields combined");
    return r_;
  }
  std::uint64_t num = mpz_fdiv_ui(q_.get_num().get_mpz_t(), p);
  std::uint64_t den = mpz_fdiv_ui(q_.get_den().get_mpz_t(), p);
  if (den == 0) throw FieldMismatchError("literal denominator vanishes modulo " + std::to_string(p));
  if (den == 1) return num;
  return mulmod_u64(num, powmod_u64(den, p - 2, p), p);
}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
  if (a.rep_ == Rep::Literal || b.rep_ == Rep::Literal) return;
  if (a.rep_ != b.rep_) throw FieldMismatchError("rational and prime-field scalars combined");
  if (a.rep_ == Rep::Residue && a.p_ != b.p_)
    throw FieldMismatchError("GF(" + std::to_string(a.p_) + ") and GF(" + std::to_string(b.p_) + ") scalars combined");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (rep_ == Rep::Residue) {
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  } else {
    s.q_ = -q_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(*this, o);
  if (rep_ == Rep::Residue || o.rep_ == Rep::Residue) {
    std::uint64_t p = rep_ == Rep::Residue ? p_ : o.p_;
    std::uint64_t a = lift_residue(p), b = o.lift_residue(p);
    rep_ = Rep::Residue;
    p_ = p;
    r_ = (a + b) % p;
    q_ = 0;
    return *this;
  }
  if (o.rep_ == Rep::Rational) rep_ = Rep::Rational;
  q_ += o.q_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(*this, o);
  if (rep_ == Rep::Residue || o.rep_ == Rep::Residue) {
    std::uint64_t p = rep_ == Rep::Residue ? p_ : o.p_;
    std::uint64_t a = lift_residue(p), b = o.lift_residue(p);
    rep_ = Rep::Residue;
    p_ = p;
    r_ = mulmod_u64(a, b, p);
    q_ = 0;
    return *this;
  }
  if (o.rep_ == Rep::Rational) rep_ = Rep::Rational;
  q_ *= o.q_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  Scalar s = *this;
  if (rep_ == Rep::Residue) {
    s.r_ = powmod_u64(r_, p_ - 2, p_);
    return s;
  }
  s.q_ = 1 / q_;
  return s;
}

Scalar Scalar::pow(std::uint64_t e) const {
  if (rep_ == Rep::Residue) {
    Scalar s = *this;
    s.r_ = powmod_u64(r_, e, p_);
    return s;
  }
  Scalar s = *this;
  mpq_class acc(1);
  mpq_class base = q_;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  s.q_ = acc;
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  Scalar::require_same_field(a, b);
  if (a.rep_ == Scalar::Rep::Residue || b.rep_ == Scalar::Rep::Residue) {
    std::uint64_t p = a.rep_ == Scalar::Rep::Residue ? a.p_ : b.p_;
    return a.lift_residue(p) == b.lift_residue(p);
  }
  return a.q_ == b.q_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace homjordan
