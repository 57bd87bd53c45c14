#include "homjordan/corpus.hpp"

namespace homjordan {

HomAlgebra diagonal_algebra(const FieldDescriptor& f, Index k) {
  StructureTensor t = StructureTensor::zero(f, k);
  for (Index i = 0; i < k; ++i) t.set(i, i, i, Scalar::one(f));
  return make_jordan_algebra(f, std::move(t));
}

HomAlgebra nil3_algebra(const FieldDescriptor& f) {
  StructureTensor t = StructureTensor::zero(f, 3);
  t.set(0, 1, 2, Scalar::one(f));
  return make_jordan_algebra(f, std::move(t));
}

HomAlgebra spin3_algebra(const FieldDescriptor& f) {
  StructureTensor t = StructureTensor::zero(f, 3);
  t.set(0, 0, 0, Scalar::one(f));
  t.set(0, 1, 1, Scalar::one(f));
  t.set(0, 2, 2, Scalar::one(f));
  t.set(1, 1, 0, Scalar::one(f));
  t.set(2, 2, 0, Scalar::one(f));
  return make_jordan_algebra(f, std::move(t));
}

HomAlgebra m2_special_jordan(const FieldDescriptor& f) {
  if (f.characteristic() == 2) throw CharacteristicError("m2_special_jordan: characteristic 2");
  auto unit_index = [](Index a, Index b) { return 2 * a + b; };
  Scalar half = Scalar::in_field(2, f).inverse();
  StructureTensor t = StructureTensor::zero(f, 4);
  // x o y = (xy + yx)/2 on matrix units.
  for (Index i = 0; i < 4; ++i)
    for (Index j = i; j < 4; ++j) {
      Index a = i / 2, b = i % 2, c = j / 2, d = j % 2;
      Vec prod = zero_vector(f, 4);
      if (b == c) prod(unit_index(a, d)) += half;
      if (d == a) prod(unit_index(c, b)) += half;
      for (Index k = 0; k < 4; ++k) t.set(i, j, k, prod(k));
    }
  return make_jordan_algebra(f, std::move(t));
}

HomAlgebra strict_upper3_special_jordan(const FieldDescriptor& f) {
  if (f.characteristic() == 2)
    throw CharacteristicError("strict_upper3_special_jordan: characteristic 2");
  Scalar half = Scalar::in_field(2, f).inverse();
  // Basis u12, u13, u23; the only nonzero associative product is u12 u23 = u13.
  StructureTensor t = StructureTensor::zero(f, 3);
  t.set(0, 2, 1, half);
  return make_jordan_algebra(f, std::move(t));
}

Mat m2_conjugation_map(const FieldDescriptor& f, const Mat& s) {
  Mat s_inv = invert(s);
  Mat out = zeros(f, 4, 4);
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b) {
      // s E_ab s^{-1} has (r,c) entry s(r,a) * s_inv(b,c).
      Index col = 2 * a + b;
      for (Index r = 0; r < 2; ++r)
        for (Index c = 0; c < 2; ++c) out(2 * r + c, col) = s(r, a) * s_inv(b, c);
    }
  return out;
}

Mat m2_transpose_map(const FieldDescriptor& f) {
  Mat out = zeros(f, 4, 4);
  out(0, 0) = Scalar::one(f);
  out(2, 1) = Scalar::one(f);
  out(1, 2) = Scalar::one(f);
  out(3, 3) = Scalar::one(f);
  return out;
}

Mat strict_upper3_conjugation_map(const FieldDescriptor& f, const Scalar& d1, const Scalar& d2,
                                  const Scalar& d3) {
  Scalar one = Scalar::one(f);
  Mat out = zeros(f, 3, 3);
  out(0, 0) = one * d1 / d2;
  out(1, 1) = one * d1 / d3;
  out(2, 2) = one * d2 / d3;
  return out;
}

namespace {

Mat permutation_map(const FieldDescriptor& f, const std::vector<Index>& img) {
  Mat m = zeros(f, static_cast<Index>(img.size()), static_cast<Index>(img.size()));
  for (Index j = 0; j < static_cast<Index>(img.size()); ++j) m(img[j], j) = Scalar::one(f);
  return m;
}

Mat diag_map(const FieldDescriptor& f, const std::vector<Scalar>& d) {
  Mat m = zeros(f, static_cast<Index>(d.size()), static_cast<Index>(d.size()));
  for (Index j = 0; j < static_cast<Index>(d.size()); ++j) m(j, j) = d[j];
  return m;
}

Mat block_diag(const FieldDescriptor& f, const Mat& a, const Mat& b) {
  Mat m = zeros(f, a.rows() + b.rows(), a.cols() + b.cols());
  m.block(0, 0, a.rows(), a.cols()) = a;
  m.block(a.rows(), a.cols(), b.rows(), b.cols()) = b;
  return m;
}

Mat from_rows(const FieldDescriptor& f, const std::vector<std::vector<std::string>>& rows) {
  return matrix_from_strings(f, rows);
}

}  // namespace

std::vector<JordanTwistFixture> jordan_twist_corpus(const FieldDescriptor& f) {
  std::vector<JordanTwistFixture> out;
  Scalar one = Scalar::one(f);

  HomAlgebra d1 = diagonal_algebra(f, 1);
  HomAlgebra d2 = diagonal_algebra(f, 2);
  HomAlgebra d3 = diagonal_algebra(f, 3);
  out.push_back({"diag1/id", d1, identity(f, 1)});
  out.push_back({"diag2/id", d2, identity(f, 2)});
  out.push_back({"diag2/swap", d2, permutation_map(f, {1, 0})});
  out.push_back({"diag3/id", d3, identity(f, 3)});
  out.push_back({"diag3/cycle", d3, permutation_map(f, {1, 2, 0})});
  out.push_back({"diag3/transposition", d3, permutation_map(f, {1, 0, 2})});

  HomAlgebra m2 = m2_special_jordan(f);
  out.push_back({"m2/id", m2, identity(f, 4)});
  out.push_back({"m2/transpose", m2, m2_transpose_map(f)});
  out.push_back({"m2/conj_diag12", m2, m2_conjugation_map(f, from_rows(f, {{"1", "0"}, {"0", "2"}}))});
  out.push_back({"m2/conj_swap", m2, m2_conjugation_map(f, from_rows(f, {{"0", "1"}, {"1", "0"}}))});
  out.push_back({"m2/conj_shear", m2, m2_conjugation_map(f, from_rows(f, {{"1", "1"}, {"0", "1"}}))});
  out.push_back({"m2/conj_sl2", m2, m2_conjugation_map(f, from_rows(f, {{"2", "3"}, {"1", "2"}}))});

  HomAlgebra su3 = strict_upper3_special_jordan(f);
  out.push_back({"strict_upper3/id", su3, identity(f, 3)});
  out.push_back({"strict_upper3/conj_124", su3,
                 strict_upper3_conjugation_map(f, one, Scalar::in_field(2, f), Scalar::in_field(4, f))});
  out.push_back({"strict_upper3/conj_139", su3,
                 strict_upper3_conjugation_map(f, one, Scalar::in_field(3, f), Scalar::in_field(9, f))});

  HomAlgebra nil3 = nil3_algebra(f);
  out.push_back({"nil3/diag122", nil3, diag_map(f, {one, Scalar::in_field(2, f), Scalar::in_field(2, f)})});
  out.push_back({"nil3/swap01", nil3, permutation_map(f, {1, 0, 2})});
  out.push_back({"nil3/diag236", nil3,
                 diag_map(f, {Scalar::in_field(2, f), Scalar::in_field(3, f), Scalar::in_field(6, f)})});

  HomAlgebra spin3 = spin3_algebra(f);
  out.push_back({"spin3/reflection", spin3, diag_map(f, {one, one, Scalar::in_field(-1, f)})});
  out.push_back({"spin3/rot90", spin3,
                 from_rows(f, {{"1", "0", "0"}, {"0", "0", "-1"}, {"0", "1", "0"}})});
  out.push_back({"spin3/rot345", spin3,
                 from_rows(f, {{"1", "0", "0"},
                               {"0", "3/5", "-4/5"},
                               {"0", "4/5", "3/5"}})});

  out.push_back({"diag2+m2/swap+transpose", direct_sum(d2, m2),
                 block_diag(f, permutation_map(f, {1, 0}), m2_transpose_map(f))});
  {
    HomAlgebra m2m2 = direct_sum(m2, m2);
    Mat exchange = zeros(f, 8, 8);
    for (Index i = 0; i < 4; ++i) {
      exchange(i, 4 + i) = one;
      exchange(4 + i, i) = one;
    }
    out.push_back({"m2+m2/exchange", m2m2, exchange});
  }
  return out;
}

std::vector<NamedAlgebra> small_hom_corpus(const FieldDescriptor& f) {
  std::vector<NamedAlgebra> out;
  Scalar one = Scalar::one(f);
  HomAlgebra d1 = diagonal_algebra(f, 1);
  HomAlgebra d2 = diagonal_algebra(f, 2);
  HomAlgebra d3 = diagonal_algebra(f, 3);
  HomAlgebra z1 = zero_algebra(f, 1);

  out.push_back({"zero1", z1});
  out.push_back({"zero2", zero_algebra(f, 2)});
  out.push_back({"swap_pair", fixture_swap_pair(f)});
  out.push_back({"swap_pair_id_twist", make_hom_algebra(f, fixture_swap_pair(f).mu, identity(f, 2))});
  out.push_back({"diag1", d1});
  out.push_back({"diag2", d2});
  out.push_back({"diag3", d3});
  out.push_back({"diag2_twist_proj", yau_twist(d2, diag_map(f, {one, Scalar::zero(f)}))});
  out.push_back({"diag3_twist_cycle", yau_twist(d3, permutation_map(f, {1, 2, 0}))});
  out.push_back({"diag3_twist_transposition", yau_twist(d3, permutation_map(f, {1, 0, 2}))});
  out.push_back({"diag3_twist_proj2", yau_twist(d3, diag_map(f, {one, one, Scalar::zero(f)}))});
  out.push_back({"nil3", nil3_algebra(f)});
  out.push_back({"nil3_twist", yau_twist(nil3_algebra(f), diag_map(f, {one, Scalar::in_field(2, f),
                                                                       Scalar::in_field(2, f)}))});
  out.push_back({"spin3", spin3_algebra(f)});
  out.push_back({"spin3_twist_reflection",
                 yau_twist(spin3_algebra(f), diag_map(f, {one, one, Scalar::in_field(-1, f)}))});
  out.push_back({"diag1+zero1", direct_sum(d1, z1)});
  out.push_back({"swap_pair+zero1", direct_sum(fixture_swap_pair(f), z1)});
  out.push_back({"diag2+zero1", direct_sum(d2, z1)});
  out.push_back({"nil3_twist_swap", yau_twist(nil3_algebra(f), permutation_map(f, {1, 0, 2}))});
  out.push_back({"spin3_twist_vswap",
                 yau_twist(spin3_algebra(f), permutation_map(f, {0, 2, 1}))});
  {
    // Scaled variant of the swap pair, multiplicative exactly when the scale
    // factors work out; kept for ideal-lattice coverage either way.
    StructureTensor t = StructureTensor::zero(f, 2);
    t.set(0, 0, 1, one);
    t.set(1, 1, 0, Scalar::in_field(2, f));
    Mat alpha = zeros(f, 2, 2);
    alpha(0, 1) = Scalar::in_field(2, f);
    alpha(1, 0) = Scalar::in_field(2, f);
    out.push_back({"swap_pair_scaled", make_hom_algebra(f, std::move(t), std::move(alpha))});
  }
  return out;
}

std::vector<NamedAlgebra> rational_hom_corpus() {
  FieldDescriptor f = FieldDescriptor::rationals();
  std::vector<NamedAlgebra> out;
  for (const auto& fix : jordan_twist_corpus(f))
    out.push_back({"twist:" + fix.name, yau_twist(fix.jordan, fix.alpha)});
  out.push_back({"swap_pair", fixture_swap_pair(f)});
  out.push_back({"swap_pair+swap_pair",
                 direct_sum(fixture_swap_pair(f), fixture_swap_pair(f))});
  out.push_back({"zero2", zero_algebra(f, 2)});
  out.push_back({"diag2_twist_proj",
                 yau_twist(diagonal_algebra(f, 2), diag_map(f, {Scalar::one(f), Scalar::zero(f)}))});
  return out;
}

}  // namespace homjordan
