#include "hopfpi/matrix.hpp"

#include <sstream>

namespace hopfpi {

Mat::Mat(int rows, int cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
  a_.assign(static_cast<size_t>(rows) * cols, Scalar::zero(f));
}

Mat Mat::identity(int n, const Field& f) {
  Mat m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw InputError("matrix shape mismatch in addition");
  }
  Mat r(rows_, cols_, field_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw InputError("matrix shape mismatch in subtraction");
  }
  Mat r(rows_, cols_, field_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw InputError("matrix shape mismatch in product");
  if (field_ != o.field_ && cols_ > 0 && o.cols_ > 0 && rows_ > 0) {
    throw InputError("matrix field mismatch in product");
  }
  Mat r(rows_, o.cols_, field_);
  // Column-by-column over the right factor, skipping zeros: the structure
  // constants handled here are mostly permutation-like.
  for (int j = 0; j < o.cols_; ++j) {
    for (int k = 0; k < cols_; ++k) {
      const Scalar& bkj = o.at(k, j);
      if (bkj.is_zero()) continue;
      for (int i = 0; i < rows_; ++i) {
        const Scalar& aik = at(i, k);
        if (aik.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

Mat Mat::scaled(const Scalar& c) const {
  Mat r(rows_, cols_, field_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  if (!a_.empty() && field_ != o.field_) return false;
  for (size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] != o.a_[i]) return false;
  }
  return true;
}

bool Mat::is_zero() const {
  for (const Scalar& s : a_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Mat Mat::col(int j) const {
  Mat r(rows_, 1, field_);
  for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
  return r;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).to_string();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols(),
        a.rows() * a.cols() != 0 ? a.field() : b.field());
  for (int i1 = 0; i1 < a.rows(); ++i1)
    for (int j1 = 0; j1 < a.cols(); ++j1) {
      const Scalar& av = a.at(i1, j1);
      if (av.is_zero()) continue;
      for (int i2 = 0; i2 < b.rows(); ++i2)
        for (int j2 = 0; j2 < b.cols(); ++j2) {
          const Scalar& bv = b.at(i2, j2);
          if (bv.is_zero()) continue;
          r.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = av * bv;
        }
    }
  return r;
}

Mat kron(const std::vector<Mat>& factors) {
  if (factors.empty()) throw InputError("kron of empty factor list");
  Mat r = factors[0];
  for (size_t k = 1; k < factors.size(); ++k) r = kron(r, factors[k]);
  return r;
}

int flatten_index(const std::vector<int>& dims, const std::vector<int>& idx) {
  int flat = 0;
  for (size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + idx[k];
  return flat;
}

std::vector<int> unflatten_index(const std::vector<int>& dims, int flat) {
  std::vector<int> idx(dims.size(), 0);
  for (size_t k = dims.size(); k-- > 0;) {
    if (dims[k] > 0) {
      idx[k] = flat % dims[k];
      flat /= dims[k];
    }
  }
  return idx;
}

Mat tensor_factor_permutation(const std::vector<int>& dims,
                              const std::vector<int>& out_from_src,
                              const Field& f) {
  if (dims.size() != out_from_src.size()) {
    throw InputError("factor permutation arity mismatch");
  }
  std::vector<bool> used(dims.size(), false);
  for (int s : out_from_src) {
    if (s < 0 || s >= static_cast<int>(dims.size()) || used[s]) {
      throw InputError("factor reordering is not a permutation");
    }
    used[s] = true;
  }
  int total = 1;
  for (int d : dims) total *= d;
  std::vector<int> out_dims(dims.size());
  for (size_t k = 0; k < dims.size(); ++k) out_dims[k] = dims[out_from_src[k]];
  Mat r(total, total, f);
  std::vector<int> src(dims.size(), 0), dst(dims.size(), 0);
  for (int c = 0; c < total; ++c) {
    src = unflatten_index(dims, c);
    for (size_t k = 0; k < dims.size(); ++k) dst[k] = src[out_from_src[k]];
    r.at(flatten_index(out_dims, dst), c) = Scalar::one(f);
  }
  return r;
}

Mat swap_factors(int dim_v, int dim_w, const Field& f) {
  return tensor_factor_permutation({dim_v, dim_w}, {1, 0}, f);
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (!m.at(i, col).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    }
    Scalar inv = m.at(row, col).inverse();
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar factor = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) {
        m.at(i, j) -= factor * m.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<LinearSolution> solve_linear(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || b.cols() != 1) {
    throw InputError("solve_linear expects b as rows(A) x 1");
  }
  const Field& f = a.field();
  Mat aug(a.rows(), a.cols() + 1, f);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b.at(i, 0);
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;

  LinearSolution sol;
  sol.particular = Mat(a.cols(), 1, f);
  std::vector<int> pivot_of_col(a.cols(), -1);
  for (size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = static_cast<int>(r);
  for (size_t r = 0; r < pivots.size(); ++r) {
    sol.particular.at(pivots[r], 0) = aug.at(static_cast<int>(r), a.cols());
  }
  for (int j = 0; j < a.cols(); ++j) {
    if (pivot_of_col[j] >= 0) continue;
    Mat v(a.cols(), 1, f);
    v.at(j, 0) = Scalar::one(f);
    for (size_t r = 0; r < pivots.size(); ++r) {
      v.at(pivots[r], 0) = -aug.at(static_cast<int>(r), j);
    }
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

std::optional<Mat> invert(const Mat& a) {
  if (a.rows() != a.cols()) throw InputError("invert expects a square matrix");
  const int n = a.rows();
  const Field& f = a.field();
  Mat aug(n, 2 * n, f);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = Scalar::one(f);
  }
  std::vector<int> pivots = rref(aug);
  // Every pivot must land in the left block, else A is singular.
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] >= n) {
    return std::nullopt;
  }
  Mat inv(n, n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

int rank(const Mat& a) {
  Mat m = a;
  return static_cast<int>(rref(m).size());
}

StructureTensor StructureTensor::from_matrix(int d_in1, int d_in2, Mat m) {
  if (m.cols() != d_in1 * d_in2) {
    throw InputError("structure tensor shape mismatch");
  }
  StructureTensor t;
  t.d_out = m.rows();
  t.d_in1 = d_in1;
  t.d_in2 = d_in2;
  t.m = std::move(m);
  return t;
}

}  // namespace hopfpi
