#include "homjordan/matrix.hpp"

#include <sstream>

namespace homjordan {

Mat zeros(const FieldDescriptor& f, Index rows, Index cols) {
  Mat m(rows, cols);
  m.setConstant(Scalar::zero(f));
  return m;
}

Mat identity(const FieldDescriptor& f, Index n) {
  Mat m = zeros(f, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Vec zero_vector(const FieldDescriptor& f, Index n) {
  Vec v(n);
  v.setConstant(Scalar::zero(f));
  return v;
}

Vec unit_vector(const FieldDescriptor& f, Index n, Index i) {
  Vec v = zero_vector(f, n);
  v(i) = Scalar::one(f);
  return v;
}

FieldDescriptor field_of(const Mat& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_literal()) return m(i, j).field();
  return FieldDescriptor::rationals();
}

bool matrices_equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool is_zero_matrix(const Mat& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

bool is_identity_matrix(const Mat& m) {
  if (m.rows() != m.cols()) return false;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (i == j ? !m(i, j).is_one() : !m(i, j).is_zero()) return false;
    }
  return true;
}

Mat matrix_from_strings(const FieldDescriptor& f,
                        const std::vector<std::vector<std::string>>& rows) {
  Index r = static_cast<Index>(rows.size());
  Index c = r == 0 ? 0 : static_cast<Index>(rows[0].size());
  Mat m = zeros(f, r, c);
  for (Index i = 0; i < r; ++i) {
    if (static_cast<Index>(rows[i].size()) != c)
      throw ParseError("ragged matrix rows");
    for (Index j = 0; j < c; ++j) m(i, j) = Scalar::parse(rows[i][j], f);
  }
  return m;
}

std::vector<std::vector<std::string>> matrix_to_strings(const Mat& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (Index i = 0; i < m.rows(); ++i) {
    out[i].resize(m.cols());
    for (Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).str();
  }
  return out;
}

std::string format_matrix(const Mat& m) {
  std::ostringstream os;
  for (Index i = 0; i < m.rows(); ++i) {
    os << "[";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j).str();
    }
    os << "]";
    if (i + 1 < m.rows()) os << "\n";
  }
  return os.str();
}

Scalar map_scalar_to_field(const Scalar& s, const FieldDescriptor& target) {
  return Scalar::parse(s.str(), target);
}

Mat map_matrix_to_field(const Mat& m, const FieldDescriptor& target) {
  Mat out = zeros(target, m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = map_scalar_to_field(m(i, j), target);
  return out;
}

}  // namespace homjordan
