#include "homjordan/poly.hpp"

#include <algorithm>
#include <sstream>

namespace homjordan {

namespace {

void trim(std::vector<Scalar>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

Poly Poly::constant(const Scalar& c) {
  Poly p{c.field(), {c}};
  trim(p.coeff);
  return p;
}

Poly Poly::x(const FieldDescriptor& f) {
  return Poly{f, {Scalar::zero(f), Scalar::one(f)}};
}

Poly Poly::from_coeffs(const FieldDescriptor& f, std::vector<Scalar> c) {
  Poly p{f, std::move(c)};
  trim(p.coeff);
  return p;
}

Scalar Poly::leading() const {
  if (is_zero()) throw PreconditionError("leading coefficient of zero polynomial");
  return coeff.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * *this;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (Index d = degree(); d >= 0; --d) {
    const Scalar& c = coeff[d];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) { os << "-"; cs = cs.substr(1); }
    } else {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    first = false;
    bool unit_coeff = cs == "1";
    if (d == 0) {
      os << cs;
    } else {
      if (!unit_coeff) os << cs << "*";
      os << "x";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.coeff.size() != b.coeff.size()) return false;
  for (std::size_t i = 0; i < a.coeff.size(); ++i)
    if (a.coeff[i] != b.coeff[i]) return false;
  return true;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r{a.field, {}};
  r.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), Scalar::zero(a.field));
  for (std::size_t i = 0; i < a.coeff.size(); ++i) r.coeff[i] += a.coeff[i];
  for (std::size_t i = 0; i < b.coeff.size(); ++i) r.coeff[i] += b.coeff[i];
  trim(r.coeff);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (Scalar(-1) * b); }

Poly operator*(const Scalar& c, const Poly& a) {
  Poly r = a;
  for (auto& x : r.coeff) x *= c;
  trim(r.coeff);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field);
  Poly r{a.field, std::vector<Scalar>(a.coeff.size() + b.coeff.size() - 1, Scalar::zero(a.field))};
  for (std::size_t i = 0; i < a.coeff.size(); ++i)
    for (std::size_t j = 0; j < b.coeff.size(); ++j) r.coeff[i + j] += a.coeff[i] * b.coeff[j];
  trim(r.coeff);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  Poly rem = a;
  Poly quot = Poly::zero(a.field);
  const Scalar lead_inv = b.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    Index shift = rem.degree() - b.degree();
    Scalar c = rem.leading() * lead_inv;
    std::vector<Scalar> qc(static_cast<std::size_t>(shift) + 1, Scalar::zero(a.field));
    qc.back() = c;
    Poly term = Poly::from_coeffs(a.field, std::move(qc));
    quot = quot + term;
    rem = rem - term * b;
  }
  return {quot, rem};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

namespace {

// Smith normal form over F[x], specialized to what invariant_factors needs:
// returns the monic diagonal entries d_1 | d_2 | ... (including units).
std::vector<Poly> smith_diagonal(std::vector<std::vector<Poly>> a, const FieldDescriptor& f) {
  const Index n = static_cast<Index>(a.size());
  std::vector<Poly> diag;
  for (Index t = 0; t < n; ++t) {
    // Find a nonzero entry of minimal degree in the trailing submatrix.
    auto find_pivot = [&]() -> std::pair<Index, Index> {
      Index bi = -1, bj = -1;
      for (Index i = t; i < n; ++i)
        for (Index j = t; j < n; ++j) {
          if (a[i][j].is_zero()) continue;
          if (bi < 0 || a[i][j].degree() < a[bi][bj].degree()) { bi = i; bj = j; }
        }
      return {bi, bj};
    };
    auto [pi, pj] = find_pivot();
    if (pi < 0) {
      for (Index k = t; k < n; ++k) diag.push_back(Poly::zero(f));
      break;
    }
    std::swap(a[t], a[pi]);
    for (Index i = 0; i < n; ++i) std::swap(a[i][t], a[i][pj]);

    bool settled = false;
    while (!settled) {
      settled = true;
      // Clear column t with division; a nonzero remainder becomes the new,
      // lower-degree pivot.
      for (Index i = t + 1; i < n; ++i) {
        if (a[i][t].is_zero()) continue;
        auto [q, r] = divmod(a[i][t], a[t][t]);
        for (Index j = t; j < n; ++j) a[i][j] = a[i][j] - q * a[t][j];
        if (!r.is_zero()) {
          std::swap(a[t], a[i]);
          settled = false;
        }
      }
      for (Index j = t + 1; j < n; ++j) {
        if (a[t][j].is_zero()) continue;
        auto [q, r] = divmod(a[t][j], a[t][t]);
        for (Index i = t; i < n; ++i) a[i][j] = a[i][j] - q * a[i][t];
        if (!r.is_zero()) {
          for (Index i = 0; i < n; ++i) std::swap(a[i][t], a[i][j]);
          settled = false;
        }
      }
      if (!settled) continue;
      // Pivot must divide every remaining entry; if not, fold the offending
      // row into row t and start over.
      for (Index i = t + 1; i < n && settled; ++i)
        for (Index j = t + 1; j < n && settled; ++j) {
          if (a[i][j].is_zero()) continue;
          if (!divmod(a[i][j], a[t][t]).second.is_zero()) {
            for (Index c = t; c < n; ++c) a[t][c] = a[t][c] + a[i][c];
            settled = false;
          }
        }
    }
    diag.push_back(a[t][t].monic());
  }
  return diag;
}

}  // namespace

std::vector<Poly> invariant_factors(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatchError("invariant_factors: not square");
  const Index n = m.rows();
  if (n == 0) return {};
  FieldDescriptor f = field_of(m);
  std::vector<std::vector<Poly>> xi_minus_m(n, std::vector<Poly>(n, Poly::zero(f)));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      std::vector<Scalar> c{-m(i, j)};
      if (i == j) c.push_back(Scalar::one(f));
      xi_minus_m[i][j] = Poly::from_coeffs(f, std::move(c));
    }
  std::vector<Poly> diag = smith_diagonal(std::move(xi_minus_m), f);
  std::vector<Poly> nontrivial;
  for (const Poly& d : diag) {
    if (d.is_zero())
      throw InvariantViolationError("characteristic matrix has zero invariant factor");
    if (d.degree() >= 1) nontrivial.push_back(d);
  }
  return nontrivial;
}

Mat companion_matrix(const Poly& monic) {
  const Index d = monic.degree();
  if (d < 1) throw PreconditionError("companion_matrix: degree must be >= 1");
  FieldDescriptor f = monic.field;
  Mat c = zeros(f, d, d);
  for (Index i = 0; i + 1 < d; ++i) c(i + 1, i) = Scalar::one(f);
  for (Index i = 0; i < d; ++i) c(i, d - 1) = -monic.coeff[i];
  return c;
}

Mat rational_canonical_form(const Mat& m) {
  const Index n = m.rows();
  if (n == 0) return m;
  FieldDescriptor f = field_of(m);
  std::vector<Poly> factors = invariant_factors(m);
  Mat out = zeros(f, n, n);
  Index at = 0;
  for (const Poly& p : factors) {
    Index d = p.degree();
    out.block(at, at, d, d) = companion_matrix(p);
    at += d;
  }
  if (at != n) throw InvariantViolationError("invariant factor degrees do not sum to n");
  return out;
}

bool similar(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) return false;
  auto fa = invariant_factors(a);
  auto fb = invariant_factors(b);
  if (fa.size() != fb.size()) return false;
  for (std::size_t i = 0; i < fa.size(); ++i)
    if (fa[i] != fb[i]) return false;
  return true;
}

}  // namespace homjordan
