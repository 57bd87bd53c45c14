#include "homjordan/constructions.hpp"

#include <algorithm>

#include "homjordan/structure.hpp"

namespace homjordan {

namespace {

void certify_hom_algebra(const HomAlgebra& a, const std::string& what) {
  CheckResult hj = check_hom_jordan(a);
  if (hj.verdict == Verdict::Fails)
    throw CertificationError(what + ": result violates the twisted identity");
  CheckResult mult = check_multiplicative(a);
  if (mult.verdict == Verdict::Fails)
    throw CertificationError(what + ": result is not multiplicative");
}

}  // namespace

HomAlgebra yau_twist(const HomAlgebra& j, const Mat& alpha, bool certify) {
  const Index n = j.dim();
  if (alpha.rows() != n || alpha.cols() != n)
    throw DimensionMismatchError("yau_twist: twist map shape mismatch");
  // alpha must be an endomorphism of j's product.
  for (Index i = 0; i < n; ++i)
    for (Index k = i; k < n; ++k) {
      Vec lhs = alpha * j.mu.basis_product(i, k);
      Vec rhs = multiply(j, alpha.col(i), alpha.col(k));
      if (!matrices_equal(lhs, rhs))
        throw NotEndomorphismError("yau_twist: map is not an endomorphism of the base product");
    }
  HomAlgebra out = make_hom_algebra(j.field, compose_with_map(j.mu, alpha), alpha);
  if (certify) certify_hom_algebra(out, "yau_twist");
  return out;
}

HomAlgebra induced_jordan(const HomAlgebra& a, bool certify) {
  Mat alpha_inv;
  try {
    alpha_inv = invert(a.alpha);
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("induced_jordan: twist map is singular");
  }
  if (check_multiplicative(a).verdict != Verdict::Holds)
    throw NotMultiplicativeError("induced_jordan: algebra is not multiplicative");
  HomAlgebra out = make_jordan_algebra(a.field, compose_with_map(a.mu, alpha_inv));
  if (certify) {
    CheckResult cj = check_jordan(out);
    if (cj.verdict == Verdict::Fails)
      throw CertificationError("induced_jordan: induced product violates the plain identity");
  }
  return out;
}

std::vector<Index> default_representatives(const Subspace& ideal) {
  return complement_columns(ideal);
}

Mat quotient_projection(const HomAlgebra& a, const Subspace& ideal,
                        const std::vector<Index>& rep_cols) {
  if (ideal.ambient != a.dim()) throw DimensionMismatchError("quotient: ambient mismatch");
  return complement_projection(ideal, rep_cols);
}

HomAlgebra quotient_algebra_with_representatives(const HomAlgebra& a, const Subspace& ideal,
                                                 const std::vector<Index>& rep_cols,
                                                 bool certify) {
  const Index n = a.dim();
  if (ideal.ambient != n) throw DimensionMismatchError("quotient: ambient mismatch");
  if (!is_hom_ideal(a, ideal))
    throw NotAnIdealError("quotient_algebra: subspace is not a twist-stable ideal");
  Mat proj = quotient_projection(a, ideal, rep_cols);
  const Index q = proj.rows();
  StructureTensor t = StructureTensor::zero(a.field, q);
  for (Index i = 0; i < q; ++i) {
    Vec ri = unit_vector(a.field, n, rep_cols[i]);
    for (Index j = i; j < q; ++j) {
      Vec rj = unit_vector(a.field, n, rep_cols[j]);
      Vec prod = proj * multiply(a, ri, rj);
      for (Index k = 0; k < q; ++k) t.set(i, j, k, prod(k));
    }
  }
  Mat alpha_bar = zeros(a.field, q, q);
  for (Index j = 0; j < q; ++j)
    alpha_bar.col(j) = proj * (a.alpha * unit_vector(a.field, n, rep_cols[j]));
  HomAlgebra out = make_hom_algebra(a.field, std::move(t), std::move(alpha_bar));
  if (certify) certify_hom_algebra(out, "quotient_algebra");
  return out;
}

HomAlgebra quotient_algebra(const HomAlgebra& a, const Subspace& ideal, bool certify) {
  return quotient_algebra_with_representatives(a, ideal, default_representatives(ideal), certify);
}

HomAlgebra direct_sum(const HomAlgebra& a, const HomAlgebra& b) {
  if (!(a.field == b.field)) throw FieldMismatchError("direct_sum: field mismatch");
  const Index na = a.dim(), nb = b.dim(), n = na + nb;
  StructureTensor t = StructureTensor::zero(a.field, n);
  for (Index i = 0; i < na; ++i)
    for (Index j = i; j < na; ++j)
      for (Index k = 0; k < na; ++k) t.set(i, j, k, a.mu.c(i, j, k));
  for (Index i = 0; i < nb; ++i)
    for (Index j = i; j < nb; ++j)
      for (Index k = 0; k < nb; ++k) t.set(na + i, na + j, na + k, b.mu.c(i, j, k));
  Mat alpha = zeros(a.field, n, n);
  alpha.block(0, 0, na, na) = a.alpha;
  alpha.block(na, na, nb, nb) = b.alpha;
  HomAlgebra out = make_hom_algebra(a.field, std::move(t), std::move(alpha));
  out.jordan_mode = a.jordan_mode && b.jordan_mode;
  return out;
}

Subspace summand_subspace(const HomAlgebra& a, const HomAlgebra& b, int which) {
  const Index na = a.dim(), n = na + b.dim();
  std::vector<Vec> gens;
  if (which == 0) {
    for (Index i = 0; i < na; ++i) gens.push_back(unit_vector(a.field, n, i));
  } else {
    for (Index i = na; i < n; ++i) gens.push_back(unit_vector(a.field, n, i));
  }
  return Subspace::span_vectors(a.field, n, gens);
}

SplitResult split_idempotent_alpha(const HomAlgebra& a) {
  const Index n = a.dim();
  const FieldDescriptor& f = a.field;
  if (!matrices_equal(Mat(a.alpha * a.alpha), a.alpha))
    throw PreconditionError("split: twist map is not idempotent (alpha^2 != alpha)");
  if (check_multiplicative(a).verdict != Verdict::Holds)
    throw PreconditionError("split: algebra is not multiplicative");
  Subspace im = image(a.alpha, f);
  for (Index t = 0; t < im.dim(); ++t)
    for (Index j = 0; j < n; ++j) {
      Vec prod = multiply(a, im.basis.row(t).transpose(), unit_vector(f, n, j));
      if (!im.contains(prod))
        throw PreconditionError("split: image of the twist map is not an ideal");
    }
  Subspace ker = kernel(a.alpha, f);

  // Quotient by the kernel (a twist-stable ideal here), kernel as a
  // subalgebra with zero twist.
  HomAlgebra quot = quotient_algebra(a, ker);
  const Index kq = quot.dim(), kk = ker.dim();
  StructureTensor kt = StructureTensor::zero(f, kk);
  for (Index i = 0; i < kk; ++i)
    for (Index j = i; j < kk; ++j) {
      Vec prod = multiply(a, ker.basis.row(i).transpose(), ker.basis.row(j).transpose());
      Vec coords = ker.coordinates(prod);
      for (Index k = 0; k < kk; ++k) kt.set(i, j, k, coords(k));
    }
  HomAlgebra kernel_alg = make_hom_algebra(f, std::move(kt), zeros(f, kk, kk));

  SplitResult res{quot, kernel_alg, direct_sum(quot, kernel_alg), Mat(), {}};

  // v  ->  (class of v, v - alpha(v)) is the claimed isomorphism.
  Mat proj = quotient_projection(a, ker, default_representatives(ker));
  Mat iso = zeros(f, n, n);
  for (Index j = 0; j < n; ++j) {
    Vec ej = unit_vector(f, n, j);
    Vec upper = proj * ej;
    Vec lower = ker.coordinates(Vec(ej - a.alpha * ej));
    for (Index i = 0; i < kq; ++i) iso(i, j) = upper(i);
    for (Index i = 0; i < kk; ++i) iso(kq + i, j) = lower(i);
  }
  res.iso = iso;
  res.iso_report = check_homomorphism(iso, a, res.combined);
  if (!res.iso_report.all_hold())
    throw CertificationError("split: constructed map failed isomorphism certification");
  return res;
}

HomAlgebra family_dim1(const FieldDescriptor& f, const Scalar& k) {
  StructureTensor t = StructureTensor::zero(f, 1);
  t.set(0, 0, 0, Scalar::one(f));
  Mat alpha = zeros(f, 1, 1);
  alpha(0, 0) = Scalar::one(f) * k;  // coerce literal parameters into the field
  return make_hom_algebra(f, std::move(t), std::move(alpha));
}

HomAlgebra family_dim2(const FieldDescriptor& f, const Scalar& p, const Scalar& q) {
  StructureTensor t = StructureTensor::zero(f, 2);
  t.set(0, 0, 0, Scalar::one(f));
  t.set(1, 1, 1, Scalar::one(f));
  t.set(0, 1, 0, Scalar::one(f));
  t.set(0, 1, 1, Scalar::one(f));
  Mat alpha = zeros(f, 2, 2);
  alpha(0, 0) = Scalar::one(f) * p;
  alpha(1, 1) = Scalar::one(f) * q;
  return make_hom_algebra(f, std::move(t), std::move(alpha));
}

HomAlgebra family_cyclic(const FieldDescriptor& f, Index n, const Mat& alpha) {
  if (n < 3) throw PreconditionError("family_cyclic: dimension must be at least 3");
  if (alpha.rows() != n || alpha.cols() != n)
    throw DimensionMismatchError("family_cyclic: twist map shape mismatch");
  StructureTensor t = StructureTensor::zero(f, n);
  for (Index i = 0; i < n; ++i) t.set(i, (i + 1) % n, (i + 2) % n, Scalar::one(f));
  return make_hom_algebra(f, std::move(t), alpha);
}

HomAlgebra fixture_swap_pair(const FieldDescriptor& f) {
  StructureTensor t = StructureTensor::zero(f, 2);
  t.set(0, 0, 1, Scalar::one(f));
  t.set(1, 1, 0, Scalar::one(f));
  Mat alpha = zeros(f, 2, 2);
  alpha(0, 1) = Scalar::one(f);
  alpha(1, 0) = Scalar::one(f);
  return make_hom_algebra(f, std::move(t), std::move(alpha));
}

HomAlgebra special_jordan_from_associative(const FieldDescriptor& f,
                                           const StructureTensor& assoc) {
  if (f.characteristic() == 2)
    throw CharacteristicError("special product needs 2 to be invertible");
  const Index n = assoc.dim();
  // Associativity on basis triples.
  auto prod = [&](const Vec& x, const Vec& y) {
    Vec out = zero_vector(f, n);
    for (Index k = 0; k < n; ++k) out(k) = (x.transpose() * assoc.output_form(k) * y)(0, 0);
    return out;
  };
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        Vec ei = unit_vector(f, n, i), ej = unit_vector(f, n, j), ek = unit_vector(f, n, k);
        if (!matrices_equal(prod(prod(ei, ej), ek), prod(ei, prod(ej, ek))))
          throw NotAssociativeError("special_jordan_from_associative: table is not associative");
      }
  Scalar half = Scalar::in_field(2, f).inverse();
  StructureTensor t = StructureTensor::zero(f, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        t.set(i, j, k, half * (assoc.c(i, j, k) + assoc.c(j, i, k)));
  HomAlgebra out = make_jordan_algebra(f, std::move(t));
  CheckResult cj = check_jordan(out);
  if (cj.verdict == Verdict::Fails)
    throw CertificationError("special_jordan_from_associative: symmetrized product not Jordan");
  return out;
}

}  // namespace homjordan
