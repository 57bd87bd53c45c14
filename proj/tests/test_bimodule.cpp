#include <doctest.h>

#include "homjordan/bimodule.hpp"
#include "homjordan/constructions.hpp"
#include "homjordan/corpus.hpp"
#include "test_util.hpp"

using namespace homjordan;
using testutil::mat;
using testutil::vec;

namespace {
const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor GF2 = FieldDescriptor::prime(2);
const FieldDescriptor GF3 = FieldDescriptor::prime(3);

// One-dimensional module over the swap pair on which both basis elements act
// as the identity; a genuine bimodule exactly in characteristic two.
BimoduleRep line_module(const FieldDescriptor& f) {
  Mat one = identity(f, 1);
  return make_bimodule(fixture_swap_pair(f), one, {one, one});
}

// Rank-deficient transport fixture: the regular module of two orthogonal
// idempotents carried to the swap pair through a nilpotent alpha_w.
BimoduleRep rank_deficient_fixture(const FieldDescriptor& f) {
  HomAlgebra d2 = diagonal_algebra(f, 2);
  std::vector<Mat> actions{mat(f, {{"1", "0"}, {"0", "0"}}), mat(f, {{"0", "0"}, {"0", "1"}})};
  JordanModuleRep reg = make_jordan_module(d2, actions);
  Mat alpha_w = mat(f, {{"0", "1"}, {"0", "0"}});
  Mat swap = mat(f, {{"0", "1"}, {"1", "0"}});
  return module_to_bimodule(reg, alpha_w, swap);
}

}  // namespace

TEST_CASE("the regular bimodule satisfies both compatibility conditions") {
  for (const FieldDescriptor& f : {Q, GF2, GF3, FieldDescriptor::prime(5)}) {
    CAPTURE(f.str());
    CHECK(check_bimodule(regular_bimodule(fixture_swap_pair(f))).all_hold());
  }
  CHECK(check_bimodule(regular_bimodule(zero_algebra(Q, 2))).all_hold());
}

TEST_CASE("regular bimodules work across the whole identity-passing corpus") {
  for (const auto& named : rational_hom_corpus()) {
    CAPTURE(named.name);
    if (!check_hom_jordan(named.algebra).holds()) continue;
    CHECK(check_bimodule(regular_bimodule(named.algebra)).all_hold());
  }
}

TEST_CASE("small characteristic separates the pointwise identity from the module conditions") {
  // Over GF(2) the dim-2 family at (1,1) satisfies the defining identity at
  // every point (exhaustively verified) yet its regular rep violates the
  // bimodule conditions: those are partial linearizations, and linearizing
  // requires dividing by small factorials. The same algebra over Q fails the
  // identity outright, so no contradiction with the char-0 theory.
  HomAlgebra f2 = family_dim2(GF2, Scalar::one(GF2), Scalar::one(GF2));
  REQUIRE(check_hom_jordan(f2).holds());
  CHECK(check_bimodule(regular_bimodule(f2)).overall() == Verdict::Fails);
  CHECK(check_hom_jordan(family_dim2(Q, Scalar(1), Scalar(1))).verdict == Verdict::Fails);

  HomAlgebra cyc = family_cyclic(GF2, 3, mat(GF2, {{"0", "0", "1"}, {"1", "0", "0"}, {"0", "1", "0"}}));
  REQUIRE(check_hom_jordan(cyc).holds());
  CHECK(check_bimodule(regular_bimodule(cyc)).overall() == Verdict::Fails);
}

TEST_CASE("the line module fails the mixed condition in every characteristic") {
  // The documented claim is that this rep works in characteristic two. It
  // does not: at (a,b,c) = (e0,e0,e1) the cyclic side contributes one term
  // and the mixed side two, so the identity needs 1 = 2 in the ground field.
  // The cyclic condition does hold; the mixed one fails over GF(2) and Q
  // alike, with self-validating witnesses.
  for (const FieldDescriptor& f : {GF2, Q}) {
    CAPTURE(f.str());
    BimoduleRep r = line_module(f);
    VerificationReport rep = check_bimodule(r);
    CHECK(rep.find("bimodule_cyclic")->holds());
    const CheckResult* failing = rep.find("bimodule_associator");
    REQUIRE(failing != nullptr);
    CHECK(failing->verdict == Verdict::Fails);
    REQUIRE(failing->witness.has_value());
    CHECK_FALSE(matrices_equal(failing->witness->lhs, failing->witness->rhs));
    // Witness re-evaluation reproduces the stored unequal sides.
    auto [lhs, rhs] = bimodule_associator_sides(r, failing->witness->inputs[0].second,
                                                failing->witness->inputs[1].second,
                                                failing->witness->inputs[2].second,
                                                failing->witness->inputs[3].second);
    CHECK(matrices_equal(lhs, failing->witness->lhs));
    CHECK(matrices_equal(rhs, failing->witness->rhs));
    CHECK_FALSE(matrices_equal(lhs, rhs));
  }

  // Stronger: no one-dimensional rep with any action pair (s, t) is a
  // bimodule of the swap pair over GF(2), except the zero actions.
  int passing = 0;
  for (std::uint64_t s = 0; s < 2; ++s)
    for (std::uint64_t t = 0; t < 2; ++t) {
      Mat ls = zeros(GF2, 1, 1), lt = zeros(GF2, 1, 1);
      ls(0, 0) = Scalar::residue(s, 2);
      lt(0, 0) = Scalar::residue(t, 2);
      BimoduleRep r = make_bimodule(fixture_swap_pair(GF2), identity(GF2, 1), {ls, lt});
      if (check_bimodule(r).all_hold()) {
        ++passing;
        CHECK(s == 0);
        CHECK(t == 0);
      }
    }
  CHECK(passing == 1);
}

TEST_CASE("equivariance") {
  // For the regular bimodule equivariance is exactly multiplicativity.
  CHECK(check_equivariance(regular_bimodule(fixture_swap_pair(Q))).holds());
  CHECK(check_equivariance(line_module(GF2)).holds());

  // A zero structure map annihilates both sides of the condition.
  BimoduleRep zeroed = line_module(GF2);
  zeroed.alpha_w = zeros(GF2, 1, 1);
  CHECK(check_equivariance(zeroed).holds());

  // Asymmetric actions with the identity structure map break it.
  HomAlgebra sp = fixture_swap_pair(Q);
  BimoduleRep broken =
      make_bimodule(sp, identity(Q, 2), {zeros(Q, 2, 2), mat(Q, {{"0", "1"}, {"0", "0"}})});
  CheckResult r = check_equivariance(broken);
  CHECK(r.verdict == Verdict::Fails);
  CHECK(r.witness.has_value());

  // A non-multiplicative algebra's regular bimodule is not equivariant.
  HomAlgebra nm = family_dim1(Q, Scalar(2));
  REQUIRE(check_multiplicative(nm).verdict == Verdict::Fails);
  CHECK(check_equivariance(regular_bimodule(nm)).verdict == Verdict::Fails);
}

TEST_CASE("plain module axioms") {
  HomAlgebra d2 = diagonal_algebra(Q, 2);
  std::vector<Mat> reg{left_mult_matrix(d2, 0), left_mult_matrix(d2, 1)};
  CHECK(check_jordan_module(make_jordan_module(d2, reg)).all_hold());

  std::vector<Mat> zero_actions{zeros(Q, 3, 3), zeros(Q, 3, 3)};
  CHECK(check_jordan_module(make_jordan_module(d2, zero_actions)).all_hold());

  // Using the twisted algebra's actions over the plain algebra fails.
  HomAlgebra sp = fixture_swap_pair(Q);
  std::vector<Mat> twisted_actions{left_mult_matrix(sp, 0), left_mult_matrix(sp, 1)};
  VerificationReport bad = check_jordan_module(make_jordan_module(d2, twisted_actions));
  CHECK(bad.overall() == Verdict::Fails);
}

TEST_CASE("transport from bimodule to plain module") {
  HomAlgebra sp = fixture_swap_pair(Q);
  JordanModuleRep m = bimodule_to_module(regular_bimodule(sp));
  // The result is the regular module of the induced algebra.
  HomAlgebra ind = induced_jordan(sp);
  for (Index i = 0; i < 2; ++i)
    CHECK(matrices_equal(m.lambda_prime[i], left_mult_matrix(ind, i)));
  CHECK(check_jordan_module(m).all_hold());

  // Identity everything: actions unchanged.
  HomAlgebra d2 = diagonal_algebra(Q, 2);
  JordanModuleRep m2 = bimodule_to_module(regular_bimodule(d2));
  for (Index i = 0; i < 2; ++i)
    CHECK(matrices_equal(m2.lambda_prime[i], left_mult_matrix(d2, i)));

  // Singular alpha_w is rejected.
  BimoduleRep singular = regular_bimodule(d2);
  singular.alpha_w = zeros(Q, 2, 2);
  singular.lambda = {zeros(Q, 2, 2), zeros(Q, 2, 2)};
  CHECK_THROWS_AS(bimodule_to_module(singular), SingularMatrixError);
}

TEST_CASE("transport round trip is the identity on equivariant fixtures") {
  int count = 0;
  for (const auto& fix : jordan_twist_corpus(Q)) {
    CAPTURE(fix.name);
    HomAlgebra twisted = yau_twist(fix.jordan, fix.alpha);
    BimoduleRep r = regular_bimodule(twisted);
    REQUIRE(check_equivariance(r).holds());
    JordanModuleRep m = bimodule_to_module(r);
    CHECK(check_jordan_module(m).all_hold());
    BimoduleRep back = module_to_bimodule(m, r.alpha_w, twisted.alpha);
    CHECK(back.algebra.mu == r.algebra.mu);
    CHECK(matrices_equal(back.alpha_w, r.alpha_w));
    for (std::size_t i = 0; i < r.lambda.size(); ++i)
      CHECK(matrices_equal(back.lambda[i], r.lambda[i]));
    ++count;
  }
  CHECK(count >= 20);
}

TEST_CASE("transport from plain module to bimodule") {
  // The regular module of two idempotents with the swap as structure map
  // lands exactly on the regular bimodule of the swap pair.
  HomAlgebra d2 = diagonal_algebra(Q, 2);
  JordanModuleRep reg = make_jordan_module(d2, {left_mult_matrix(d2, 0), left_mult_matrix(d2, 1)});
  Mat swap = mat(Q, {{"0", "1"}, {"1", "0"}});
  BimoduleRep b = module_to_bimodule(reg, swap, swap);
  BimoduleRep expected = regular_bimodule(fixture_swap_pair(Q));
  CHECK(b.algebra.mu == expected.algebra.mu);
  for (Index i = 0; i < 2; ++i) CHECK(matrices_equal(b.lambda[i], expected.lambda[i]));
  CHECK(check_bimodule(b).all_hold());

  // Zero module transports to a zero bimodule.
  JordanModuleRep zm = make_jordan_module(d2, {zeros(Q, 2, 2), zeros(Q, 2, 2)});
  BimoduleRep zb = module_to_bimodule(zm, identity(Q, 2), identity(Q, 2));
  CHECK(check_bimodule(zb).all_hold());

  // Incompatible structure maps are rejected.
  CHECK_THROWS_AS(module_to_bimodule(reg, identity(Q, 2), swap), EquivarianceError);
}

TEST_CASE("submodule closure and membership") {
  BimoduleRep r = regular_bimodule(fixture_swap_pair(Q));
  CHECK(submodule_closure(r, {}).is_zero());
  CHECK(submodule_closure(r, {vec(Q, {"1", "0"})}).is_full());
  CHECK(is_submodule(r, Subspace::zero(Q, 2)));
  CHECK(is_submodule(r, Subspace::full(Q, 2)));
  CHECK_FALSE(is_submodule(r, Subspace::span(Q, mat(Q, {{"1", "0"}}))));

  BimoduleRep lm = line_module(GF2);
  CHECK(submodule_closure(lm, {vec(GF2, {"1"})}).is_full());
}

TEST_CASE("closure output is always a submodule, monotone and idempotent") {
  Rng rng(31);
  BimoduleRep r = rank_deficient_fixture(Q);
  for (int t = 0; t < 30; ++t) {
    Vec g = rng.vector(Q, 2);
    Subspace w = submodule_closure(r, {g});
    CHECK(is_submodule(r, w));
    std::vector<Vec> rows;
    for (Index i = 0; i < w.dim(); ++i) rows.push_back(w.basis.row(i).transpose());
    CHECK(submodule_closure(r, rows) == w);
  }
}

TEST_CASE("irreducibility") {
  // One-dimensional modules are definitely irreducible.
  IrreducibilityResult lm = is_irreducible(line_module(GF2));
  CHECK(lm.verdict == Irreducibility::Irreducible);
  CHECK(lm.exhaustive);

  // A doubled line module splits.
  HomAlgebra sp = fixture_swap_pair(GF2);
  Mat i2 = identity(GF2, 2);
  BimoduleRep doubled = make_bimodule(sp, i2, {i2, i2});
  IrreducibilityResult dr = is_irreducible(doubled);
  CHECK(dr.verdict == Irreducibility::Reducible);
  REQUIRE(dr.witness.has_value());
  CHECK(is_submodule(doubled, *dr.witness));

  // The regular bimodule of the swap pair over GF(3): exhaustive and
  // randomized routes agree.
  BimoduleRep reg3 = regular_bimodule(fixture_swap_pair(GF3));
  IrreducibilityResult exh = is_irreducible(reg3);
  CHECK(exh.exhaustive);
  CHECK(exh.verdict == Irreducibility::Irreducible);
  StructureOptions tight;
  tight.enumeration_budget = 1;  // force the randomized route
  IrreducibilityResult rnd = is_irreducible(reg3, 0, tight);
  CHECK_FALSE(rnd.exhaustive);
  CHECK(rnd.verdict == Irreducibility::ProbablyIrreducible);

  // Reducible case: both routes certify a witness.
  BimoduleRep regd = regular_bimodule(diagonal_algebra(GF3, 2));
  IrreducibilityResult exh2 = is_irreducible(regd);
  CHECK(exh2.verdict == Irreducibility::Reducible);
  IrreducibilityResult rnd2 = is_irreducible(regd, 0, tight);
  CHECK(rnd2.verdict == Irreducibility::Reducible);
  CHECK(is_submodule(regd, *rnd2.witness));
}

TEST_CASE("kernel and image of the structure map are submodules") {
  // Invertible structure map: kernel zero, image everything.
  BimoduleRep reg = regular_bimodule(fixture_swap_pair(Q));
  KernelImageReport inv = kernel_image_analysis(reg);
  CHECK(inv.ker.is_zero());
  CHECK(inv.im.is_full());
  CHECK(inv.ker_is_submodule);
  CHECK(inv.im_is_submodule);
  CHECK(inv.bijective);
  CHECK(inv.intertwines_actions);
  CHECK(inv.intertwines_alpha_w);

  // Zero structure map with zero actions.
  BimoduleRep zero_rep = make_bimodule(fixture_swap_pair(Q), zeros(Q, 2, 2),
                                       {zeros(Q, 2, 2), zeros(Q, 2, 2)});
  KernelImageReport z = kernel_image_analysis(zero_rep);
  CHECK(z.ker.is_full());
  CHECK(z.im.is_zero());
  CHECK(z.ker_is_submodule);
  CHECK(z.im_is_submodule);
  CHECK(z.bijective);  // the empty map

  // Rank-one structure map on a two-dimensional module.
  BimoduleRep rd = rank_deficient_fixture(Q);
  REQUIRE(check_bimodule(rd).all_hold());
  KernelImageReport r = kernel_image_analysis(rd);
  CHECK(r.ker.dim() == 1);
  CHECK(r.im.dim() == 1);
  CHECK(r.ker_is_submodule);
  CHECK(r.im_is_submodule);
  CHECK(r.bijective);
  CHECK(r.intertwines_actions);
  CHECK(r.intertwines_alpha_w);

  // Equivariance is a hard precondition.
  BimoduleRep broken = make_bimodule(fixture_swap_pair(Q), identity(Q, 2),
                                     {zeros(Q, 2, 2), mat(Q, {{"0", "1"}, {"0", "0"}})});
  CHECK_THROWS_AS(kernel_image_analysis(broken), EquivarianceError);
}

TEST_CASE("irreducibility transfer over a simple algebra") {
  // Regular bimodule of the swap pair over GF(2): invertible structure map,
  // irreducible both before and after the consistency bookkeeping.
  IrreducibilityTransferReport lm =
      irreducibility_transfer_check(regular_bimodule(fixture_swap_pair(GF2)));
  CHECK(lm.alpha_w_invertible);
  CHECK(lm.bimodule.verdict == Irreducibility::Irreducible);
  CHECK(lm.transfer_consistent);
  CHECK(lm.invertibility_consistent);

  // Regular bimodule of the swap pair over GF(3): bimodule irreducible while
  // the induced module splits -- the implication only runs one way.
  IrreducibilityTransferReport reg = irreducibility_transfer_check(regular_bimodule(fixture_swap_pair(GF3)));
  CHECK(reg.alpha_w_invertible);
  CHECK(reg.bimodule.verdict == Irreducibility::Irreducible);
  REQUIRE(reg.module.has_value());
  CHECK(reg.module->verdict == Irreducibility::Reducible);
  CHECK(reg.transfer_consistent);
  CHECK(reg.invertibility_consistent);

  // A visibly reducible bimodule keeps everything vacuously consistent:
  // two copies of the regular bimodule glued block-diagonally.
  HomAlgebra sp2 = fixture_swap_pair(GF2);
  BimoduleRep reg2 = regular_bimodule(sp2);
  Mat aw = zeros(GF2, 4, 4);
  aw.block(0, 0, 2, 2) = reg2.alpha_w;
  aw.block(2, 2, 2, 2) = reg2.alpha_w;
  std::vector<Mat> doubled_actions;
  for (const Mat& l : reg2.lambda) {
    Mat big = zeros(GF2, 4, 4);
    big.block(0, 0, 2, 2) = l;
    big.block(2, 2, 2, 2) = l;
    doubled_actions.push_back(big);
  }
  BimoduleRep dbl_rep = make_bimodule(sp2, aw, doubled_actions);
  REQUIRE(check_bimodule(dbl_rep).all_hold());
  IrreducibilityTransferReport dbl = irreducibility_transfer_check(dbl_rep);
  CHECK(dbl.bimodule.verdict == Irreducibility::Reducible);
  CHECK(dbl.transfer_consistent);
  CHECK(dbl.invertibility_consistent);

  // Non-simple algebras are rejected.
  CHECK_THROWS_AS(irreducibility_transfer_check(regular_bimodule(diagonal_algebra(Q, 2))),
                  PreconditionError);
}
