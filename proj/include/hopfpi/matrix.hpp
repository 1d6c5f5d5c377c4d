#pragma once

#include <optional>
#include <vector>

#include "hopfpi/scalar.hpp"

namespace hopfpi {

// Dense row-major matrix over a fixed field.  Zero-dimensional shapes are
// legal and behave as empty maps.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols, const Field& f);

  static Mat identity(int n, const Field& f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;  // zero entries are skipped
  Mat scaled(const Scalar& c) const;
  Mat transpose() const;

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const;

  Mat col(int j) const;  // column as a rows x 1 matrix

  std::string to_string() const;  // debugging aid

 private:
  int rows_, cols_;
  Field field_;
  std::vector<Scalar> a_;
};

// Kronecker product with index convention (i1*rowsB + i2, j1*colsB + j2);
// basis vector e_{j1} (x) e_{j2} of the source corresponds to column
// j1*colsB + j2.
Mat kron(const Mat& a, const Mat& b);
Mat kron(const std::vector<Mat>& factors);

// Row-major flattening of a multi-index over the given factor dims.
int flatten_index(const std::vector<int>& dims, const std::vector<int>& idx);
std::vector<int> unflatten_index(const std::vector<int>& dims, int flat);

// Permutation matrix reordering tensor factors.  out_from_src[k] names the
// source factor placed at output slot k:
//   e_{i_0} (x) ... (x) e_{i_{n-1}}  |->  e_{i_{s_0}} (x) ... (x) e_{i_{s_{n-1}}}.
Mat tensor_factor_permutation(const std::vector<int>& dims,
                              const std::vector<int>& out_from_src,
                              const Field& f);

// The flip V (x) W -> W (x) V.
Mat swap_factors(int dim_v, int dim_w, const Field& f);

struct LinearSolution {
  Mat particular;              // cols(A) x 1, free coordinates set to zero
  std::vector<Mat> nullspace;  // basis of ker(A), deterministic order
};

// Exact Gaussian elimination.  Returns std::nullopt when A x = b has no
// solution.  Deterministic: first nonzero pivot in column order.
std::optional<LinearSolution> solve_linear(const Mat& a, const Mat& b);

// Inverse of a square matrix, std::nullopt when singular.
std::optional<Mat> invert(const Mat& a);

int rank(const Mat& a);

// Bilinear map storage: out = T(in1 (x) in2) with kron column convention
// j1*d_in2 + j2.
struct StructureTensor {
  int d_out = 0, d_in1 = 0, d_in2 = 0;
  Mat m;  // d_out x (d_in1 * d_in2)

  StructureTensor() = default;
  StructureTensor(int d_out, int d_in1, int d_in2, const Field& f)
      : d_out(d_out), d_in1(d_in1), d_in2(d_in2),
        m(d_out, d_in1 * d_in2, f) {}
  static StructureTensor from_matrix(int d_in1, int d_in2, Mat m);

  const Scalar& at(int out, int j1, int j2) const {
    return m.at(out, j1 * d_in2 + j2);
  }
  Scalar& at(int out, int j1, int j2) { return m.at(out, j1 * d_in2 + j2); }

  bool operator==(const StructureTensor& o) const = default;
};

}  // namespace hopfpi
