#include "hopfpi/pipeline.hpp"

#include <algorithm>

namespace hopfpi {

Pipeline::Factor Pipeline::Factor::identity(int d) {
  if (d < 0) throw InputError("identity factor needs a nonnegative dimension");
  Factor f{Mat()};
  f.id = d;
  return f;
}

Pipeline::Pipeline(int in_dim, const Field& f)
    : in_dim_(in_dim), cur_dim_(in_dim), field_(f) {
  if (in_dim < 0) throw InputError("pipeline needs a nonnegative input dimension");
}

Pipeline& Pipeline::then(Mat m) {
  if (m.cols() != cur_dim_) throw InputError("pipeline stage shape mismatch");
  if (!(m.field() == field_)) throw InputError("pipeline stage field mismatch");
  Stage s{Kind::dense, std::move(m), {}, {}, {}, 0};
  s.out = s.m.rows();
  cur_dim_ = s.out;
  stages_.push_back(std::move(s));
  return *this;
}

Pipeline& Pipeline::blocks(std::vector<Factor> fs) {
  if (fs.empty()) throw InputError("pipeline factor stage needs factors");
  long long in = 1, out = 1;
  for (const Factor& f : fs) {
    if (!f.id && !(f.m.field() == field_)) {
      throw InputError("pipeline stage field mismatch");
    }
    in *= f.cols();
    out *= f.rows();
  }
  if (in != cur_dim_) throw InputError("pipeline stage shape mismatch");
  Stage s{Kind::factors, Mat(), std::move(fs), {}, {}, static_cast<int>(out)};
  cur_dim_ = s.out;
  stages_.push_back(std::move(s));
  return *this;
}

Pipeline& Pipeline::permute(std::vector<int> dims,
                            std::vector<int> out_from_src) {
  const int n = static_cast<int>(dims.size());
  if (static_cast<int>(out_from_src.size()) != n) {
    throw InputError("factor permutation arity mismatch");
  }
  long long total = 1;
  for (int d : dims) {
    if (d < 0) throw InputError("negative factor dimension");
    total *= d;
  }
  if (total != cur_dim_) throw InputError("pipeline stage shape mismatch");
  std::vector<bool> seen(n, false);
  for (int s : out_from_src) {
    if (s < 0 || s >= n || seen[s]) {
      throw InputError("not a permutation of the tensor factors");
    }
    seen[s] = true;
  }

  // out index = sum_k tuple[out_from_src[k]] * out_stride[k]; fold the output
  // strides back onto source positions so each entry needs one dot product.
  std::vector<int> weights(n, 0);
  long long stride = 1;
  for (int k = n - 1; k >= 0; --k) {
    weights[out_from_src[k]] = static_cast<int>(stride);
    stride *= dims[out_from_src[k]];
  }
  Stage s{Kind::shuffle, Mat(), {}, std::move(dims), std::move(weights),
          static_cast<int>(total)};
  stages_.push_back(std::move(s));
  return *this;
}

void Pipeline::apply(const Stage& s, Col& v) const {
  switch (s.kind) {
    case Kind::dense: {
      std::vector<Scalar> acc(s.out, Scalar::zero(field_));
      for (const auto& [j, val] : v) {
        for (int i = 0; i < s.out; ++i) {
          const Scalar& mij = s.m.at(i, j);
          if (!mij.is_zero()) acc[i] += mij * val;
        }
      }
      Col next;
      for (int i = 0; i < s.out; ++i) {
        if (!acc[i].is_zero()) next.emplace_back(i, std::move(acc[i]));
      }
      v = std::move(next);
      return;
    }
    case Kind::factors: {
      // Contract one factor at a time, right to left, so untouched modes keep
      // their column dimensions.
      for (int p = static_cast<int>(s.fs.size()) - 1; p >= 0; --p) {
        const Factor& f = s.fs[p];
        if (f.id) continue;
        int inner = 1;
        for (size_t q = p + 1; q < s.fs.size(); ++q) inner *= s.fs[q].rows();
        const int r = f.m.rows(), c = f.m.cols();
        Col next;
        for (const auto& [idx, val] : v) {
          const int rest = idx % inner;
          const int j = (idx / inner) % c;
          const long long outer = idx / inner / c;
          for (int i = 0; i < r; ++i) {
            const Scalar& mij = f.m.at(i, j);
            if (mij.is_zero()) continue;
            next.emplace_back(
                static_cast<int>((outer * r + i) * inner + rest), mij * val);
          }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Col merged;
        for (auto& e : next) {
          if (!merged.empty() && merged.back().first == e.first) {
            merged.back().second += e.second;
          } else {
            merged.push_back(std::move(e));
          }
        }
        std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
        v = std::move(merged);
      }
      return;
    }
    case Kind::shuffle: {
      const int n = static_cast<int>(s.dims.size());
      for (auto& [idx, val] : v) {
        int rest = idx, out = 0;
        for (int j = n - 1; j >= 0; --j) {
          out += (rest % s.dims[j]) * s.weights[j];
          rest /= s.dims[j];
        }
        idx = out;
      }
      std::sort(v.begin(), v.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      return;
    }
  }
}

Mat Pipeline::to_mat() const {
  Mat out(cur_dim_, in_dim_, field_);
  for (int j = 0; j < in_dim_; ++j) {
    Col v{{j, Scalar::one(field_)}};
    for (const Stage& s : stages_) apply(s, v);
    for (auto& [i, val] : v) out.at(i, j) = std::move(val);
  }
  return out;
}

}  // namespace hopfpi
