#include <doctest.h>

#include "homjordan/linalg.hpp"
#include "homjordan/poly.hpp"
#include "homjordan/rng.hpp"
#include "test_util.hpp"

using namespace homjordan;
using testutil::mat;
using testutil::vec;

namespace {
const FieldDescriptor Q = FieldDescriptor::rationals();
const FieldDescriptor GF2 = FieldDescriptor::prime(2);
const FieldDescriptor GF5 = FieldDescriptor::prime(5);
}  // namespace

TEST_CASE("scalar arithmetic is exact") {
  Scalar a = Scalar::parse("-3/7", Q);
  CHECK(a.str() == "-3/7");
  CHECK((a * a.inverse()).is_one());
  CHECK(Scalar::parse("4/2", Q).str() == "2");
  CHECK(Scalar::parse("-4/-6", Q).str() == "2/3");

  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    Scalar x = rng.scalar(Q);
    if (x.is_zero()) continue;
    CHECK((x * x.inverse()).is_one());
    CHECK((x / x).is_one());
  }
}

TEST_CASE("prime field scalars satisfy the Fermat inverse identity") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 97ull}) {
    FieldDescriptor f = FieldDescriptor::prime(p);
    for (std::uint64_t v = 1; v < p && v < 60; ++v) {
      Scalar x = Scalar::in_field(static_cast<long>(v), f);
      CHECK((x * x.pow(p - 2)).is_one());
      CHECK((x * x.inverse()).is_one());
    }
  }
}

TEST_CASE("field descriptor rejects non-primes") {
  CHECK_THROWS_AS(FieldDescriptor::prime(1), PreconditionError);
  CHECK_THROWS_AS(FieldDescriptor::prime(6), PreconditionError);
  CHECK(is_prime_u64(2147483647ull));
  CHECK_FALSE(is_prime_u64(2147483647ull * 3));
}

TEST_CASE("mixing fields throws") {
  Scalar q = Scalar::parse("1/2", Q);
  Scalar r = Scalar::residue(1, 3);
  CHECK_THROWS_AS((void)(q + r), FieldMismatchError);
  CHECK_THROWS_AS((void)(Scalar::residue(1, 3) + Scalar::residue(1, 5)), FieldMismatchError);
  // Literals coerce into either side.
  CHECK((Scalar(3) + r) == Scalar::residue(1, 3));
  CHECK((Scalar(-1) * r) == Scalar::residue(2, 3));
}

TEST_CASE("scalar parse errors carry context") {
  CHECK_THROWS_AS(Scalar::parse("", Q), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/0", Q), ParseError);
  CHECK_THROWS_AS(Scalar::parse("a", Q), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1.5", Q), ParseError);
  // 1/2 over GF(2): denominator vanishes.
  CHECK_THROWS_AS(Scalar::parse("1/2", GF2), FieldMismatchError);
  CHECK(Scalar::parse("1/2", FieldDescriptor::prime(3)) == Scalar::residue(2, 3));
}

TEST_CASE("rref canonicalizes") {
  Mat id = identity(Q, 2);
  RrefResult r1 = rref(id);
  CHECK(matrices_equal(r1.rref, id));
  CHECK(r1.rank == 2);

  RrefResult r2 = rref(mat(Q, {{"1", "2"}, {"2", "4"}}));
  CHECK(matrices_equal(r2.rref, mat(Q, {{"1", "2"}, {"0", "0"}})));
  CHECK(r2.rank == 1);

  RrefResult r3 = rref(mat(GF2, {{"1", "1"}, {"1", "1"}}));
  CHECK(matrices_equal(r3.rref, mat(GF2, {{"1", "1"}, {"0", "0"}})));
  CHECK(r3.rank == 1);
}

TEST_CASE("rref is idempotent and satisfies rank-nullity on random matrices") {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const FieldDescriptor& f = t % 2 ? Q : GF5;
    Index rows = 1 + static_cast<Index>(rng.below(4));
    Index cols = 1 + static_cast<Index>(rng.below(4));
    Mat m = testutil::random_matrix(rng, f, rows, cols);
    RrefResult r = rref(m);
    CHECK(matrices_equal(rref(r.rref).rref, r.rref));
    CHECK(kernel(m, f).dim() + r.rank == cols);
  }
}

TEST_CASE("kernel basics") {
  CHECK(kernel(identity(Q, 3), Q).dim() == 0);
  CHECK(kernel(zeros(Q, 2, 2), Q).dim() == 2);
  Subspace k = kernel(mat(Q, {{"1", "1"}, {"1", "1"}}), Q);
  CHECK(k.dim() == 1);
  CHECK(matrices_equal(k.basis, mat(Q, {{"1", "-1"}})));
}

TEST_CASE("subspace lattice operations") {
  Subspace e1 = Subspace::span(Q, mat(Q, {{"1", "0"}}));
  Subspace e2 = Subspace::span(Q, mat(Q, {{"0", "1"}}));
  Subspace diag = Subspace::span(Q, mat(Q, {{"1", "1"}}));
  CHECK(subspace_sum(e1, e2).is_full());
  CHECK(subspace_intersect(e1, e2).is_zero());
  CHECK(subspace_intersect(diag, e1).is_zero());
  CHECK(e1.contains(vec(Q, {"5", "0"})));
  CHECK_FALSE(e1.contains(vec(Q, {"5", "1"})));
}

TEST_CASE("modular dimension law on random subspaces") {
  Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    const FieldDescriptor& f = t % 2 ? Q : GF2;
    Index n = 2 + static_cast<Index>(rng.below(4));
    Subspace u = Subspace::span(f, testutil::random_matrix(rng, f, 1 + rng.below(3), n));
    Subspace w = Subspace::span(f, testutil::random_matrix(rng, f, 1 + rng.below(3), n));
    CHECK(subspace_sum(u, w).dim() + subspace_intersect(u, w).dim() == u.dim() + w.dim());
    CHECK(subspace_sum(u, w).contains(u));
    CHECK(u.contains(subspace_intersect(u, w)));
  }
}

TEST_CASE("invert") {
  CHECK(matrices_equal(invert(identity(Q, 3)), identity(Q, 3)));
  Mat swap = mat(Q, {{"0", "1"}, {"1", "0"}});
  CHECK(matrices_equal(invert(swap), swap));
  CHECK(matrices_equal(invert(mat(Q, {{"1", "1"}, {"0", "1"}})), mat(Q, {{"1", "-1"}, {"0", "1"}})));
  CHECK_THROWS_AS(invert(mat(Q, {{"1", "2"}, {"2", "4"}})), SingularMatrixError);

  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    const FieldDescriptor& f = t % 2 ? Q : GF5;
    Index n = 1 + static_cast<Index>(rng.below(4));
    Mat m = testutil::random_matrix(rng, f, n, n);
    if (rank(m) < n) {
      CHECK_THROWS_AS(invert(m), SingularMatrixError);
    } else {
      CHECK(matrices_equal(Mat(invert(m) * m), identity(f, n)));
    }
  }
}

TEST_CASE("solve") {
  Mat a = mat(Q, {{"1", "2"}, {"3", "4"}});
  Vec b = vec(Q, {"5", "6"});
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(matrices_equal(Vec(a * *x), b));
  // Inconsistent system.
  CHECK_FALSE(solve(mat(Q, {{"1", "1"}, {"1", "1"}}), vec(Q, {"0", "1"})).has_value());
}

TEST_CASE("rational canonical form distinguishes similarity classes") {
  CHECK(matrices_equal(rational_canonical_form(identity(Q, 2)), identity(Q, 2)));

  Mat d12 = mat(Q, {{"1", "0"}, {"0", "2"}});
  Mat upper = mat(Q, {{"1", "1"}, {"0", "2"}});
  CHECK(matrices_equal(rational_canonical_form(d12), rational_canonical_form(upper)));
  CHECK(similar(d12, upper));

  Mat jordan_block = mat(Q, {{"1", "1"}, {"0", "1"}});
  CHECK_FALSE(similar(identity(Q, 2), jordan_block));
  CHECK_FALSE(matrices_equal(rational_canonical_form(identity(Q, 2)),
                             rational_canonical_form(jordan_block)));
}

TEST_CASE("similarity is invariant under conjugation") {
  Rng rng(99);
  for (int t = 0; t < 25; ++t) {
    const FieldDescriptor& f = t % 2 ? Q : GF5;
    Index n = 1 + static_cast<Index>(rng.below(4));
    Mat a = testutil::random_matrix(rng, f, n, n);
    Mat s = testutil::random_invertible(rng, f, n);
    Mat conj = s * a * invert(s);
    CHECK(similar(a, conj));
    CHECK(matrices_equal(rational_canonical_form(a), rational_canonical_form(conj)));
    // The form is itself similar to the matrix it canonicalizes.
    CHECK(similar(a, rational_canonical_form(a)));
  }
}

TEST_CASE("invariant factors divide each other") {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const FieldDescriptor& f = t % 2 ? Q : GF2;
    Index n = 1 + static_cast<Index>(rng.below(4));
    Mat a = testutil::random_matrix(rng, f, n, n);
    auto inv = invariant_factors(a);
    Index total = 0;
    for (std::size_t i = 0; i < inv.size(); ++i) {
      total += inv[i].degree();
      CHECK(inv[i].leading().is_one());
      if (i + 1 < inv.size()) CHECK(divmod(inv[i + 1], inv[i]).second.is_zero());
    }
    CHECK(total == n);
  }
}

TEST_CASE("polynomial division and gcd") {
  // (x^2 - 1) = (x - 1)(x + 1)
  Poly x2m1 = Poly::from_coeffs(Q, {Scalar(-1), Scalar(0), Scalar(1)});
  Poly xm1 = Poly::from_coeffs(Q, {Scalar(-1), Scalar(1)});
  Poly xp1 = Poly::from_coeffs(Q, {Scalar(1), Scalar(1)});
  auto [quot, rem] = divmod(x2m1, xm1);
  CHECK(quot == xp1);
  CHECK(rem.is_zero());
  CHECK(poly_gcd(x2m1, xm1) == xm1.monic());
  CHECK(x2m1.str() == "x^2 - 1");
  CHECK((xm1 * xp1) == x2m1);
}

TEST_CASE("restrict_map on an invariant subspace") {
  // The swap fixes span{(1,1)} and span{(1,-1)}.
  Mat swap = mat(Q, {{"0", "1"}, {"1", "0"}});
  Subspace plus = Subspace::span(Q, mat(Q, {{"1", "1"}}));
  Subspace minus = Subspace::span(Q, mat(Q, {{"1", "-1"}}));
  CHECK(restrict_map(swap, plus)(0, 0).is_one());
  CHECK(restrict_map(swap, minus)(0, 0) == Scalar(-1));
  Subspace e1 = Subspace::span(Q, mat(Q, {{"1", "0"}}));
  CHECK_THROWS_AS(restrict_map(swap, e1), PreconditionError);
}
