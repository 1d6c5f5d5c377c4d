#pragma once

#include <utility>
#include <vector>

#include "hopfpi/matrix.hpp"

namespace hopfpi {

// Composition of structured linear stages, evaluated one basis column at a
// time.  Long Kronecker products and tensor-factor permutations on spaces of
// dimension d^4 and beyond must not be materialized as dense matrices; a
// Pipeline keeps only the small building blocks and streams sparse columns
// through them.  Stages act in the order they were added: the first stage
// added is the first applied to the input.
class Pipeline {
 public:
  // One Kronecker factor of a blocks() stage.  Identity factors carry only
  // their dimension and cost nothing to apply.
  struct Factor {
    Mat m;
    int id = 0;  // when positive, the identity on that many dimensions

    Factor(Mat mm) : m(std::move(mm)) {}
    static Factor identity(int d);

    int rows() const { return id ? id : m.rows(); }
    int cols() const { return id ? id : m.cols(); }
  };

  Pipeline(int in_dim, const Field& f);

  // A plain matrix stage.  Callers keep these small; anything whose dense
  // form would be large belongs in blocks() or permute().
  Pipeline& then(Mat m);

  // f_1 (x) ... (x) f_k with the usual row-major index convention.  A factor
  // may span several adjacent tensor modes of the current vector; only the
  // product of the factor column counts must match the current dimension.
  Pipeline& blocks(std::vector<Factor> fs);

  // Reorders tensor factors; same convention as tensor_factor_permutation:
  // out_from_src[k] names the source factor placed at output slot k.
  Pipeline& permute(std::vector<int> dims, std::vector<int> out_from_src);

  int in_dim() const { return in_dim_; }
  int out_dim() const { return cur_dim_; }
  const Field& field() const { return field_; }

  // Applies every stage to each unit basis column.  The result equals the
  // dense product of all stages; only the result matrix is materialized.
  Mat to_mat() const;

 private:
  enum class Kind { dense, factors, shuffle };

  struct Stage {
    Kind kind;
    Mat m;                        // dense
    std::vector<Factor> fs;      // factors
    std::vector<int> dims;       // shuffle: source factor dims
    std::vector<int> weights;    // shuffle: out index = sum_j tuple[j] * weights[j]
    int out = 0;
  };

  // Sparse column, entries sorted by index.
  using Col = std::vector<std::pair<int, Scalar>>;

  void apply(const Stage& s, Col& v) const;

  int in_dim_, cur_dim_;
  Field field_;
  std::vector<Stage> stages_;
};

}  // namespace hopfpi
