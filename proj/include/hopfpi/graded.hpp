#pragma once

#include <vector>

#include "hopfpi/group.hpp"
#include "hopfpi/matrix.hpp"

namespace hopfpi {

// Family of finite-dimensional vector spaces indexed by a finite group.
// Grades of dimension zero are legal.
struct GradedSpace {
  FiniteGroup group;
  std::vector<int> dims;

  GradedSpace(FiniteGroup g, std::vector<int> d)
      : group(std::move(g)), dims(std::move(d)) {
    if (static_cast<int>(dims.size()) != group.size()) {
      throw InputError("graded space needs one dimension per group element");
    }
    for (int v : dims) {
      if (v < 0) throw InputError("negative grade dimension");
    }
  }

  int dim(int a) const { return dims[a]; }
  int total_dim() const {
    int t = 0;
    for (int v : dims) t += v;
    return t;
  }
  bool operator==(const GradedSpace& o) const {
    return group == o.group && dims == o.dims;
  }
};

// Grade-respecting family of linear maps H_a -> K_{shift[a]}.  The block for
// source grade a is stored at index a.
struct GradedLinearMap {
  std::vector<int> shift;
  std::vector<Mat> blocks;

  bool operator==(const GradedLinearMap& o) const {
    return shift == o.shift && blocks == o.blocks;
  }
};

inline std::vector<int> identity_shift(const FiniteGroup& g) {
  std::vector<int> s(g.size());
  for (int i = 0; i < g.size(); ++i) s[i] = i;
  return s;
}

inline std::vector<int> inverse_shift(const FiniteGroup& g) {
  std::vector<int> s(g.size());
  for (int i = 0; i < g.size(); ++i) s[i] = g.inv(i);
  return s;
}

inline GradedLinearMap identity_graded_map(const GradedSpace& sp,
                                           const Field& f) {
  GradedLinearMap m;
  m.shift = identity_shift(sp.group);
  for (int a = 0; a < sp.group.size(); ++a) {
    m.blocks.push_back(Mat::identity(sp.dim(a), f));
  }
  return m;
}

}  // namespace hopfpi
