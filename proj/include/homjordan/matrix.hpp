#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "homjordan/scalar.hpp"

namespace homjordan {

using Index = Eigen::Index;
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Construction helpers. Matrices built through these carry their field in
// every entry; Eigen's own Zero()/Identity() would produce bare literals.
Mat zeros(const FieldDescriptor& f, Index rows, Index cols);
Mat identity(const FieldDescriptor& f, Index n);
Vec zero_vector(const FieldDescriptor& f, Index n);
Vec unit_vector(const FieldDescriptor& f, Index n, Index i);

// Field of the first non-literal entry; integer-literal-only matrices count
// as rational. Lets operations derive their field even when callers have
// assigned plain integer scalars into a matrix.
FieldDescriptor field_of(const Mat& m);

bool matrices_equal(const Mat& a, const Mat& b);
bool is_zero_matrix(const Mat& m);
bool is_identity_matrix(const Mat& m);

// Row-major scalar strings <-> matrices (the wire format for alpha etc.).
Mat matrix_from_strings(const FieldDescriptor& f,
                        const std::vector<std::vector<std::string>>& rows);
std::vector<std::vector<std::string>> matrix_to_strings(const Mat& m);
std::string format_matrix(const Mat& m);  // human-readable, row per line

// Entry-wise reinterpretation of an integer-valued matrix in another field
// (used to reduce characteristic-zero fixtures modulo p).
Mat map_matrix_to_field(const Mat& m, const FieldDescriptor& target);
Scalar map_scalar_to_field(const Scalar& s, const FieldDescriptor& target);

}  // namespace homjordan
