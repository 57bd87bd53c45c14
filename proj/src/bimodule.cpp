#include "homjordan/bimodule.hpp"

#include "homjordan/constructions.hpp"
#include "homjordan/rng.hpp"

namespace homjordan {

BimoduleRep make_bimodule(HomAlgebra algebra, Mat alpha_w, std::vector<Mat> lambda) {
  const Index n = algebra.dim();
  const Index m = alpha_w.rows();
  if (alpha_w.cols() != m) throw DimensionMismatchError("make_bimodule: alpha_w not square");
  if (static_cast<Index>(lambda.size()) != n)
    throw DimensionMismatchError("make_bimodule: need one action matrix per basis element");
  for (const Mat& l : lambda)
    if (l.rows() != m || l.cols() != m)
      throw DimensionMismatchError("make_bimodule: action matrix shape mismatch");
  return BimoduleRep{std::move(algebra), m, std::move(alpha_w), std::move(lambda)};
}

JordanModuleRep make_jordan_module(HomAlgebra algebra, std::vector<Mat> lambda_prime,
                                   std::optional<Mat> alpha_w) {
  const Index n = algebra.dim();
  Index m = lambda_prime.empty() ? (alpha_w ? alpha_w->rows() : 0) : lambda_prime[0].rows();
  if (static_cast<Index>(lambda_prime.size()) != n)
    throw DimensionMismatchError("make_jordan_module: need one action matrix per basis element");
  for (const Mat& l : lambda_prime)
    if (l.rows() != m || l.cols() != m)
      throw DimensionMismatchError("make_jordan_module: action matrix shape mismatch");
  return JordanModuleRep{std::move(algebra), m, std::move(lambda_prime), std::move(alpha_w)};
}

Vec act(const std::vector<Mat>& lambda, const Vec& z, const Vec& w) {
  if (static_cast<Index>(lambda.size()) != z.rows())
    throw DimensionMismatchError("act: algebra coordinate length mismatch");
  Vec out(w.rows());
  out.setConstant(Scalar(0));  // literal zeros; they coerce on the first addition
  for (Index i = 0; i < z.rows(); ++i) {
    if (z(i).is_zero()) continue;
    out += z(i) * (lambda[i] * w);
  }
  return out;
}

namespace {

struct QuadrupleSides {
  Vec lhs, rhs;
};

// Shared left side of both twisted compatibility conditions:
// a_W(w.a) . a(mu(b,c)) + cyclic.
Vec twisted_cyclic_lhs(const BimoduleRep& r, const Vec& a, const Vec& b, const Vec& c,
                       const Vec& w) {
  const HomAlgebra& alg = r.algebra;
  auto dot = [&](const Vec& z, const Vec& u) { return act(r.lambda, z, u); };
  Vec lhs = dot(alg.alpha * multiply(alg, b, c), r.alpha_w * dot(a, w));
  lhs += dot(alg.alpha * multiply(alg, c, a), r.alpha_w * dot(b, w));
  lhs += dot(alg.alpha * multiply(alg, a, b), r.alpha_w * dot(c, w));
  return lhs;
}

QuadrupleSides cyclic_condition_sides(const BimoduleRep& r, const Vec& a, const Vec& b,
                                      const Vec& c, const Vec& w) {
  const HomAlgebra& alg = r.algebra;
  auto dot = [&](const Vec& z, const Vec& u) { return act(r.lambda, z, u); };
  Mat alpha2 = alg.alpha * alg.alpha;
  Vec aww = r.alpha_w * w;
  Vec rhs = dot(alpha2 * a, dot(multiply(alg, b, c), aww));
  rhs += dot(alpha2 * b, dot(multiply(alg, c, a), aww));
  rhs += dot(alpha2 * c, dot(multiply(alg, a, b), aww));
  return {twisted_cyclic_lhs(r, a, b, c, w), rhs};
}

QuadrupleSides associator_condition_sides(const BimoduleRep& r, const Vec& a, const Vec& b,
                                          const Vec& c, const Vec& w) {
  const HomAlgebra& alg = r.algebra;
  auto dot = [&](const Vec& z, const Vec& u) { return act(r.lambda, z, u); };
  Mat alpha2 = alg.alpha * alg.alpha;
  Vec ab = alg.alpha * b;
  Vec rhs = dot(alpha2 * c, dot(ab, dot(a, w)));
  rhs += dot(alpha2 * a, dot(ab, dot(c, w)));
  rhs += dot(multiply(alg, multiply(alg, a, c), ab), r.alpha_w * (r.alpha_w * w));
  return {twisted_cyclic_lhs(r, a, b, c, w), rhs};
}

using QuadFn = QuadrupleSides (*)(const BimoduleRep&, const Vec&, const Vec&, const Vec&,
                                  const Vec&);

CheckResult quadruple_check(const BimoduleRep& r, const std::string& name, QuadFn sides) {
  CheckResult res{name};
  const Index n = r.algebra.dim(), m = r.m;
  const FieldDescriptor& f = r.algebra.field;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        for (Index w = 0; w < m; ++w) {
          Vec va = unit_vector(f, n, a), vb = unit_vector(f, n, b), vc = unit_vector(f, n, c);
          Vec vw = unit_vector(f, m, w);
          QuadrupleSides s = sides(r, va, vb, vc, vw);
          if (matrices_equal(s.lhs, s.rhs)) continue;
          res.verdict = Verdict::Fails;
          Witness wit;
          wit.inputs = {{"a", va}, {"b", vb}, {"c", vc}, {"w", vw}};
          wit.lhs = s.lhs;
          wit.rhs = s.rhs;
          res.witness = std::move(wit);
          return res;
        }
  return res;
}

}  // namespace

std::pair<Vec, Vec> bimodule_cyclic_sides(const BimoduleRep& r, const Vec& a, const Vec& b,
                                          const Vec& c, const Vec& w) {
  QuadrupleSides s = cyclic_condition_sides(r, a, b, c, w);
  return {s.lhs, s.rhs};
}

std::pair<Vec, Vec> bimodule_associator_sides(const BimoduleRep& r, const Vec& a, const Vec& b,
                                              const Vec& c, const Vec& w) {
  QuadrupleSides s = associator_condition_sides(r, a, b, c, w);
  return {s.lhs, s.rhs};
}

CheckResult check_bimodule_cyclic(const BimoduleRep& r) {
  return quadruple_check(r, "bimodule_cyclic", &cyclic_condition_sides);
}

CheckResult check_bimodule_associator(const BimoduleRep& r) {
  return quadruple_check(r, "bimodule_associator", &associator_condition_sides);
}

VerificationReport check_bimodule(const BimoduleRep& r) {
  VerificationReport rep;
  rep.checks.push_back(check_bimodule_cyclic(r));
  rep.checks.push_back(check_bimodule_associator(r));
  return rep;
}

BimoduleRep regular_bimodule(const HomAlgebra& a) {
  std::vector<Mat> lambda;
  lambda.reserve(a.dim());
  for (Index i = 0; i < a.dim(); ++i) lambda.push_back(left_mult_matrix(a, i));
  return make_bimodule(a, a.alpha, std::move(lambda));
}

CheckResult check_equivariance(const std::vector<Mat>& lambda, const Mat& alpha_w,
                               const Mat& alpha, const FieldDescriptor& f) {
  CheckResult res{"equivariance"};
  const Index n = static_cast<Index>(lambda.size());
  const Index m = alpha_w.rows();
  for (Index a = 0; a < n; ++a) {
    Mat lhs = alpha_w * lambda[a];
    Mat twisted_action = zeros(f, m, m);
    for (Index i = 0; i < n; ++i) {
      if (alpha(i, a).is_zero()) continue;
      twisted_action += alpha(i, a) * lambda[i];
    }
    Mat rhs = twisted_action * alpha_w;
    for (Index j = 0; j < m; ++j) {
      if (matrices_equal(Mat(lhs.col(j)), Mat(rhs.col(j)))) continue;
      res.verdict = Verdict::Fails;
      Witness wit;
      wit.inputs = {{"a", unit_vector(f, n, a)}, {"w", unit_vector(f, m, j)}};
      wit.lhs = lhs.col(j);
      wit.rhs = rhs.col(j);
      res.witness = std::move(wit);
      return res;
    }
  }
  return res;
}

CheckResult check_equivariance(const BimoduleRep& r) {
  return check_equivariance(r.lambda, r.alpha_w, r.algebra.alpha, r.algebra.field);
}

namespace {

struct ModuleQuad {
  Vec lhs, rhs;
};

ModuleQuad module_cyclic_sides(const JordanModuleRep& r, const Vec& a, const Vec& b, const Vec& c,
                               const Vec& x) {
  const HomAlgebra& alg = r.algebra;
  auto dot = [&](const Vec& z, const Vec& u) { return act(r.lambda_prime, z, u); };
  Vec lhs = dot(multiply(alg, b, c), dot(a, x));
  lhs += dot(multiply(alg, c, a), dot(b, x));
  lhs += dot(multiply(alg, a, b), dot(c, x));
  Vec rhs = dot(a, dot(multiply(alg, b, c), x));
  rhs += dot(b, dot(multiply(alg, c, a), x));
  rhs += dot(c, dot(multiply(alg, a, b), x));
  return {lhs, rhs};
}

ModuleQuad module_associator_sides(const JordanModuleRep& r, const Vec& a, const Vec& b,
                                   const Vec& c, const Vec& x) {
  const HomAlgebra& alg = r.algebra;
  auto dot = [&](const Vec& z, const Vec& u) { return act(r.lambda_prime, z, u); };
  // a o c o b associates to the left: (a o c) o b.
  Vec lhs = dot(c, dot(b, dot(a, x)));
  lhs += dot(a, dot(b, dot(c, x)));
  lhs += dot(multiply(alg, multiply(alg, a, c), b), x);
  Vec rhs = dot(multiply(alg, b, c), dot(a, x));
  rhs += dot(multiply(alg, c, a), dot(b, x));
  rhs += dot(multiply(alg, a, b), dot(c, x));
  return {lhs, rhs};
}

}  // namespace

VerificationReport check_jordan_module(const JordanModuleRep& r) {
  VerificationReport rep;
  const Index n = r.algebra.dim(), m = r.m;
  const FieldDescriptor& f = r.algebra.field;
  auto run = [&](const std::string& name,
                 ModuleQuad (*sides)(const JordanModuleRep&, const Vec&, const Vec&, const Vec&,
                                     const Vec&)) {
    CheckResult res{name};
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c)
          for (Index w = 0; w < m; ++w) {
            Vec va = unit_vector(f, n, a), vb = unit_vector(f, n, b), vc = unit_vector(f, n, c);
            Vec vw = unit_vector(f, m, w);
            ModuleQuad s = sides(r, va, vb, vc, vw);
            if (matrices_equal(s.lhs, s.rhs)) continue;
            res.verdict = Verdict::Fails;
            Witness wit;
            wit.inputs = {{"a", va}, {"b", vb}, {"c", vc}, {"x", vw}};
            wit.lhs = s.lhs;
            wit.rhs = s.rhs;
            res.witness = std::move(wit);
            return res;
          }
    return res;
  };
  rep.checks.push_back(run("module_cyclic", &module_cyclic_sides));
  rep.checks.push_back(run("module_associator", &module_associator_sides));
  return rep;
}

JordanModuleRep bimodule_to_module(const BimoduleRep& r) {
  Mat alpha_w_inv;
  try {
    alpha_w_inv = invert(r.alpha_w);
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("bimodule_to_module: alpha_w is singular");
  }
  if (check_equivariance(r).verdict != Verdict::Holds)
    throw EquivarianceError("bimodule_to_module: alpha_w is not equivariant");
  HomAlgebra induced = induced_jordan(r.algebra);
  std::vector<Mat> lambda_prime;
  lambda_prime.reserve(r.lambda.size());
  for (const Mat& l : r.lambda) lambda_prime.push_back(alpha_w_inv * l);
  JordanModuleRep out = make_jordan_module(std::move(induced), std::move(lambda_prime), r.alpha_w);
  VerificationReport cert = check_jordan_module(out);
  if (cert.overall() == Verdict::Fails)
    throw CertificationError(
        "bimodule_to_module: transported actions violate the plain module axioms "
        "(the input does not satisfy the bimodule conditions)");
  return out;
}

BimoduleRep module_to_bimodule(const JordanModuleRep& r, const Mat& alpha_w, const Mat& alpha) {
  if (check_equivariance(r.lambda_prime, alpha_w, alpha, r.algebra.field).verdict !=
      Verdict::Holds)
    throw EquivarianceError("module_to_bimodule: alpha_w is not compatible with alpha");
  HomAlgebra twisted = yau_twist(r.algebra, alpha);
  std::vector<Mat> lambda;
  lambda.reserve(r.lambda_prime.size());
  for (const Mat& l : r.lambda_prime) lambda.push_back(alpha_w * l);
  BimoduleRep out = make_bimodule(std::move(twisted), alpha_w, std::move(lambda));
  VerificationReport cert = check_bimodule(out);
  if (cert.overall() == Verdict::Fails)
    throw CertificationError(
        "module_to_bimodule: twisted actions violate the bimodule conditions "
        "(the input does not satisfy the plain module axioms)");
  return out;
}

Subspace submodule_closure(const BimoduleRep& r, const std::vector<Vec>& generators) {
  const FieldDescriptor& f = r.algebra.field;
  Subspace w = Subspace::span_vectors(f, r.m, generators);
  for (;;) {
    std::vector<Vec> next;
    for (Index i = 0; i < w.dim(); ++i) {
      Vec row = w.basis.row(i).transpose();
      next.push_back(r.alpha_w * row);
      for (const Mat& l : r.lambda) next.push_back(l * row);
    }
    Subspace grown = subspace_sum(w, Subspace::span_vectors(f, r.m, next));
    if (grown.dim() == w.dim()) return w;
    w = grown;
  }
}

bool is_submodule(const BimoduleRep& r, const Subspace& u) {
  if (u.ambient != r.m) throw DimensionMismatchError("is_submodule: ambient mismatch");
  for (Index i = 0; i < u.dim(); ++i) {
    Vec row = u.basis.row(i).transpose();
    if (!u.contains(Vec(r.alpha_w * row))) return false;
    for (const Mat& l : r.lambda)
      if (!u.contains(Vec(l * row))) return false;
  }
  return true;
}

namespace {

IrreducibilityResult irreducibility_by_closures(
    const FieldDescriptor& f, Index m, std::uint64_t seed, const StructureOptions& opts,
    const std::function<Subspace(const Vec&)>& closure_of,
    const std::function<bool(const Subspace&)>& submodule_test) {
  IrreducibilityResult res;
  if (m == 0) {
    // A zero module has one submodule, not two.
    res.verdict = Irreducibility::Reducible;
    res.exhaustive = true;
    return res;
  }
  if (m == 1) {
    res.verdict = Irreducibility::Irreducible;
    res.exhaustive = true;
    return res;
  }
  if (f.kind == FieldKind::PrimeField) {
    if (count_points(f, m) <= opts.enumeration_budget) {
      res.exhaustive = true;
      res.verdict = Irreducibility::Irreducible;
      IrreducibilityResult* out = &res;
      bool found = false;
      enumerate_subspaces(f, m, [&](const Subspace& s) {
        if (found || s.dim() == 0 || s.dim() == m) return;
        if (submodule_test(s)) {
          out->verdict = Irreducibility::Reducible;
          out->witness = s;
          found = true;
        }
      });
      return res;
    }
    // Too large to enumerate: fall through to the randomized probe.
  }
  Rng rng(seed);
  for (std::uint64_t t = 0; t < opts.trial_limit + static_cast<std::uint64_t>(m); ++t) {
    Vec v = t < static_cast<std::uint64_t>(m) ? unit_vector(f, m, static_cast<Index>(t))
                                              : rng.nonzero_vector(f, m);
    if (is_zero_matrix(v)) continue;
    Subspace w = closure_of(v);
    if (w.dim() > 0 && w.dim() < m) {
      res.verdict = Irreducibility::Reducible;
      res.witness = w;
      res.exhaustive = false;
      return res;
    }
  }
  res.verdict = Irreducibility::ProbablyIrreducible;
  res.exhaustive = false;
  return res;
}

}  // namespace

IrreducibilityResult is_irreducible(const BimoduleRep& r, std::uint64_t seed,
                                    const StructureOptions& opts) {
  return irreducibility_by_closures(
      r.algebra.field, r.m, seed, opts,
      [&](const Vec& v) { return submodule_closure(r, {v}); },
      [&](const Subspace& s) { return is_submodule(r, s); });
}

IrreducibilityResult is_module_irreducible(const JordanModuleRep& r, std::uint64_t seed,
                                           const StructureOptions& opts) {
  const FieldDescriptor& f = r.algebra.field;
  auto closure = [&](const Vec& v) {
    Subspace w = Subspace::span_vectors(f, r.m, {v});
    for (;;) {
      std::vector<Vec> next;
      for (Index i = 0; i < w.dim(); ++i)
        for (const Mat& l : r.lambda_prime) next.push_back(l * w.basis.row(i).transpose());
      Subspace grown = subspace_sum(w, Subspace::span_vectors(f, r.m, next));
      if (grown.dim() == w.dim()) return w;
      w = grown;
    }
  };
  auto submodule_test = [&](const Subspace& s) {
    for (Index i = 0; i < s.dim(); ++i)
      for (const Mat& l : r.lambda_prime)
        if (!s.contains(Vec(l * s.basis.row(i).transpose()))) return false;
    return true;
  };
  return irreducibility_by_closures(f, r.m, seed, opts, closure, submodule_test);
}

KernelImageReport kernel_image_analysis(const BimoduleRep& r) {
  if (check_equivariance(r).verdict != Verdict::Holds)
    throw EquivarianceError("kernel_image_analysis: alpha_w is not equivariant");
  const FieldDescriptor& f = r.algebra.field;
  KernelImageReport rep{kernel(r.alpha_w, f), image(r.alpha_w, f), false, false, Mat(), false,
                        false, false};
  rep.ker_is_submodule = is_submodule(r, rep.ker);
  rep.im_is_submodule = is_submodule(r, rep.im);

  // Quotient module on W/Ker and the induced map (class of w) -> alpha_w(w).
  std::vector<Index> reps = complement_columns(rep.ker);
  Mat proj = complement_projection(rep.ker, reps);
  Mat emb = representative_embedding(rep.ker, reps);
  const Index q = proj.rows();

  Mat induced = zeros(f, rep.im.dim(), q);
  for (Index t = 0; t < q; ++t)
    induced.col(t) = rep.im.coordinates(Vec(r.alpha_w * emb.col(t)));
  rep.induced_map = induced;
  rep.bijective = induced.rows() == induced.cols() && is_invertible(induced);

  // Structure maps intertwine: induced o (quotient alpha_w) = (alpha_w|Im) o induced.
  Mat quot_alpha = proj * r.alpha_w * emb;
  Mat im_alpha = restrict_map(r.alpha_w, rep.im);
  rep.intertwines_alpha_w = matrices_equal(Mat(induced * quot_alpha), Mat(im_alpha * induced));

  // Actions intertwine up to the algebra twist: the induced map sends the
  // quotient action of a to the image action of alpha(a).
  rep.intertwines_actions = true;
  const Index n = r.algebra.dim();
  for (Index a = 0; a < n && rep.intertwines_actions; ++a) {
    Mat quot_act = proj * r.lambda[a] * emb;
    Mat twisted = zeros(f, r.m, r.m);
    for (Index i = 0; i < n; ++i) {
      if (r.algebra.alpha(i, a).is_zero()) continue;
      twisted += r.algebra.alpha(i, a) * r.lambda[i];
    }
    Mat im_act = restrict_map(twisted, rep.im);
    if (!matrices_equal(Mat(induced * quot_act), Mat(im_act * induced)))
      rep.intertwines_actions = false;
  }
  return rep;
}

IrreducibilityTransferReport irreducibility_transfer_check(const BimoduleRep& r,
                                                           std::uint64_t seed,
                                                           const StructureOptions& opts) {
  if (check_multiplicative(r.algebra).verdict != Verdict::Holds)
    throw NotMultiplicativeError("irreducibility_transfer_check: algebra not multiplicative");
  SimplicityResult simple = is_simple(r.algebra, seed, opts);
  if (simple.verdict == SimpleVerdict::Unsupported)
    throw PreconditionError("irreducibility_transfer_check: simplicity undecided");
  if (simple.verdict != SimpleVerdict::Simple)
    throw PreconditionError("irreducibility_transfer_check: algebra is not simple");
  if (check_equivariance(r).verdict != Verdict::Holds)
    throw EquivarianceError("irreducibility_transfer_check: alpha_w is not equivariant");

  IrreducibilityTransferReport rep;
  rep.bimodule = is_irreducible(r, seed, opts);
  rep.alpha_w_invertible = r.m == 0 || is_invertible(r.alpha_w);

  if (rep.alpha_w_invertible) {
    JordanModuleRep module = bimodule_to_module(r);
    rep.module = is_module_irreducible(module, seed, opts);
    // A definitely irreducible induced module must give an irreducible
    // bimodule; a certified reducibility witness on the bimodule side would
    // be a counterexample.
    if (rep.module->verdict == Irreducibility::Irreducible &&
        rep.bimodule.verdict == Irreducibility::Reducible) {
      rep.transfer_consistent = false;
      rep.notes = "induced module irreducible but bimodule has a reducibility witness";
    }
  } else {
    rep.notes = "alpha_w singular: transport unavailable";
  }
  if (rep.bimodule.verdict == Irreducibility::Irreducible && !rep.alpha_w_invertible) {
    rep.invertibility_consistent = false;
    rep.notes = "irreducible bimodule with singular alpha_w";
  }
  return rep;
}

}  // namespace homjordan
