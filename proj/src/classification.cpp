#include "homjordan/constructions.hpp"
#include "homjordan/structure.hpp"

namespace homjordan {

namespace {

// Minimal nonzero product ideal of a plain algebra. Over Q: first ideal of
// the certified decomposition (deterministically ordered). Over GF(p):
// exhaustive enumeration, smallest dimension first.
Subspace minimal_ideal(const HomAlgebra& plain, std::uint64_t seed) {
  if (plain.field.kind == FieldKind::Rationals) {
    DecompositionResult dec = decompose_semisimple(plain, seed);
    if (dec.ideals.empty()) throw PreconditionError("minimal_ideal: zero algebra");
    return dec.ideals.front();
  }
  std::optional<Subspace> best;
  enumerate_subspaces(plain.field, plain.dim(), [&](const Subspace& s) {
    if (s.dim() == 0) return;
    if (best && best->dim() <= s.dim()) return;
    if (is_product_ideal(plain, s)) best = s;
  });
  if (!best) throw PreconditionError("minimal_ideal: no nonzero ideal found");
  return *best;
}

Vec tensor_product(const StructureTensor& t, const Vec& x, const Vec& y) {
  Vec out = zero_vector(t.field(), t.dim());
  for (Index k = 0; k < t.dim(); ++k) out(k) = (x.transpose() * t.output_form(k) * y)(0, 0);
  return out;
}

}  // namespace

ClassificationSignature signature_from_parts(StructureTensor ideal_tensor, Index orbit_length,
                                             Mat a1, Index total_dim) {
  ClassificationSignature sig;
  sig.ideal_tensor = std::move(ideal_tensor);
  sig.orbit_length = orbit_length;
  sig.a1_invariants = invariant_factors(a1);
  sig.a1 = std::move(a1);
  sig.total_dim = total_dim;
  const Index m = sig.ideal_tensor.dim();
  sig.ideal_basis = identity(sig.ideal_tensor.field(), m);
  if (!is_invertible(sig.a1))
    throw PreconditionError("signature: restricted twist power must be invertible");
  return sig;
}

ClassificationSignature classification_signature(const HomAlgebra& a, std::uint64_t seed) {
  SimplicityResult simple = is_simple(a, seed);
  if (simple.verdict != SimpleVerdict::Simple)
    throw NotSimpleError("classification_signature: algebra is not verified simple (" +
                         simple.reason + ")");
  HomAlgebra induced = induced_jordan(a);
  Subspace v1 = simple.induced_decomposition && !simple.induced_decomposition->ideals.empty()
                    ? simple.induced_decomposition->ideals.front()
                    : minimal_ideal(induced, seed);

  ClassificationSignature sig;
  sig.total_dim = a.dim();
  sig.ideal_basis = v1.basis;
  sig.ideal_tensor = restrict_to_subspace(induced, v1).mu;

  // Orbit of the ideal under the twist; simplicity makes it exhaust V.
  std::vector<Subspace> orbit{v1};
  Subspace img = apply_map(a.alpha, v1);
  while (!(img == v1)) {
    orbit.push_back(img);
    if (static_cast<Index>(orbit.size()) > a.dim())
      throw CertificationError("classification_signature: twist orbit does not close");
    img = apply_map(a.alpha, img);
  }
  sig.orbit_length = static_cast<Index>(orbit.size());
  Subspace total = Subspace::zero(a.field, a.dim());
  Index dim_sum = 0;
  for (const Subspace& s : orbit) {
    total = subspace_sum(total, s);
    dim_sum += s.dim();
  }
  if (dim_sum != a.dim() || !total.is_full())
    throw CertificationError(
        "classification_signature: the twist orbit of the minimal ideal does not span");

  Mat alpha_n = identity(a.field, a.dim());
  for (Index i = 0; i < sig.orbit_length; ++i) alpha_n = Mat(a.alpha * alpha_n);
  try {
    sig.a1 = restrict_map(alpha_n, v1);
  } catch (const PreconditionError&) {
    throw CertificationError("classification_signature: alpha^n does not preserve the ideal");
  }
  if (!is_invertible(sig.a1))
    throw CertificationError("classification_signature: restricted twist power is singular");
  sig.a1_invariants = invariant_factors(sig.a1);
  return sig;
}

SignatureComparison compare_signatures(const ClassificationSignature& s,
                                       const ClassificationSignature& t) {
  SignatureComparison cmp;
  if (s.total_dim != t.total_dim) {
    cmp.distinction = "total_dim";
    return cmp;
  }
  if (s.ideal_tensor.dim() != t.ideal_tensor.dim()) {
    cmp.distinction = "ideal_dim";
    return cmp;
  }
  if (s.orbit_length != t.orbit_length) {
    cmp.distinction = "orbit_length";
    return cmp;
  }
  if (s.a1_invariants.size() != t.a1_invariants.size()) {
    cmp.distinction = "similarity";
    return cmp;
  }
  for (std::size_t i = 0; i < s.a1_invariants.size(); ++i)
    if (s.a1_invariants[i] != t.a1_invariants[i]) {
      cmp.distinction = "similarity";
      return cmp;
    }
  cmp.possibly_isomorphic = true;
  return cmp;
}

Mat lift_ideal_isomorphism(const ClassificationSignature& sa, const ClassificationSignature& sb,
                           const Mat& m1, const HomAlgebra& a, const HomAlgebra& b) {
  const Index m = sa.ideal_tensor.dim();
  if (sb.ideal_tensor.dim() != m || m1.rows() != m || m1.cols() != m)
    throw DimensionMismatchError("lift: ideal map shape mismatch");
  if (sa.orbit_length != sb.orbit_length)
    throw PreconditionError("lift: orbit lengths differ");
  if (!is_invertible(m1)) throw NotIdealIsoError("lift: ideal map is singular");
  if (!matrices_equal(Mat(m1 * sa.a1), Mat(sb.a1 * m1)))
    throw IntertwiningError("lift: ideal map does not intertwine the restricted twist powers");
  for (Index i = 0; i < m; ++i)
    for (Index j = i; j < m; ++j) {
      Vec lhs = m1 * sa.ideal_tensor.basis_product(i, j);
      Vec rhs = tensor_product(sb.ideal_tensor, Vec(m1.col(i)), Vec(m1.col(j)));
      if (!matrices_equal(lhs, rhs))
        throw NotIdealIsoError("lift: ideal map is not a product isomorphism");
    }

  const Index n_orbit = sa.orbit_length;
  const Index dim = a.dim();
  const FieldDescriptor& f = a.field;
  // Domain orbit basis alpha^i(x_t) and its image beta^i(m1 x_t).
  Mat domain = zeros(f, dim, dim), target = zeros(f, dim, dim);
  Mat xa = sa.ideal_basis.transpose();          // columns: basis of the source ideal
  Mat xb = Mat(sb.ideal_basis.transpose() * m1);  // columns: m1-image in ambient coords
  Mat ai = identity(f, dim), bi = identity(f, dim);
  for (Index i = 0; i < n_orbit; ++i) {
    domain.block(0, i * m, dim, m) = ai * xa;
    target.block(0, i * m, dim, m) = bi * xb;
    ai = Mat(a.alpha * ai);
    bi = Mat(b.alpha * bi);
  }
  Mat phi;
  try {
    phi = Mat(target * invert(domain));
  } catch (const SingularMatrixError&) {
    throw CertificationError("lift: orbit images do not form a basis");
  }
  if (!check_homomorphism(phi, a, b).all_hold())
    throw CertificationError("lift: extended map failed isomorphism certification");
  return phi;
}

IsoSearchResult iso_search_smallfield(const HomAlgebra& a, const HomAlgebra& b,
                                      std::uint64_t budget, std::uint64_t seed) {
  if (!(a.field == b.field)) throw FieldMismatchError("iso_search: field mismatch");
  if (a.field.kind != FieldKind::PrimeField)
    throw PreconditionError("iso_search: exhaustive search needs a finite field");
  IsoSearchResult res;
  if (a.dim() != b.dim()) {
    res.method = "dimension_gate";
    return res;
  }
  const std::uint64_t p = a.field.p;
  const Index dim = a.dim();

  std::optional<ClassificationSignature> sa, sb;
  try {
    sa = classification_signature(a, seed);
    sb = classification_signature(b, seed);
  } catch (const Error&) {
    // One side has no signature (not simple / not multiplicative / singular
    // twist): fall back to the full search below.
  }

  if (sa && sb) {
    SignatureComparison cmp = compare_signatures(*sa, *sb);
    if (!cmp.possibly_isomorphic) {
      res.method = "signature_gate:" + cmp.distinction;
      return res;
    }
    const Index m = sa->ideal_tensor.dim();
    std::uint64_t space = 1;
    for (Index i = 0; i < m * m; ++i) {
      if (space > budget / p + 1) throw BudgetExceededError("iso_search: ideal map space too large");
      space *= p;
    }
    if (space > budget) throw BudgetExceededError("iso_search: ideal map space too large");
    res.method = "ideal_maps";
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(m * m), 0);
    for (std::uint64_t c = 0; c < space; ++c) {
      Mat m1 = zeros(a.field, m, m);
      for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j)
          m1(i, j) = Scalar::residue(digits[static_cast<std::size_t>(i * m + j)], p);
      ++res.candidates;
      try {
        Mat phi = lift_ideal_isomorphism(*sa, *sb, m1, a, b);
        res.found = true;
        res.iso = phi;
        return res;
      } catch (const Error&) {
        // not a qualifying ideal map; keep searching
      }
      for (std::size_t d = 0; d < digits.size(); ++d) {
        digits[d] = (digits[d] + 1) % p;
        if (digits[d] != 0) break;
      }
    }
    return res;
  }

  // Full certified search over all linear maps.
  std::uint64_t space = 1;
  for (Index i = 0; i < dim * dim; ++i) {
    if (space > budget / p + 1) throw BudgetExceededError("iso_search: full map space too large");
    space *= p;
  }
  if (space > budget) throw BudgetExceededError("iso_search: full map space too large");
  res.method = "full_maps";
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(dim * dim), 0);
  for (std::uint64_t c = 0; c < space; ++c) {
    Mat phi = zeros(a.field, dim, dim);
    for (Index i = 0; i < dim; ++i)
      for (Index j = 0; j < dim; ++j)
        phi(i, j) = Scalar::residue(digits[static_cast<std::size_t>(i * dim + j)], p);
    ++res.candidates;
    if (check_homomorphism(phi, a, b).all_hold()) {
      res.found = true;
      res.iso = phi;
      return res;
    }
    for (std::size_t d = 0; d < digits.size(); ++d) {
      digits[d] = (digits[d] + 1) % p;
      if (digits[d] != 0) break;
    }
  }
  return res;
}

}  // namespace homjordan
