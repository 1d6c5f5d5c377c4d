#include "hopfpi/hopf.hpp"

#include <functional>

#include "hopfpi/parallel.hpp"
#include "hopfpi/pipeline.hpp"

namespace hopfpi {

void validate_shapes(const HopfPiAlgebra& h) {
  const FiniteGroup& pi = h.space.group;
  const int n = pi.size();
  auto fail = [](const std::string& what) {
    throw InputError("inconsistent shape: " + what);
  };
  if (static_cast<int>(h.mult.size()) != n) fail("mult grade rows");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(h.mult[a].size()) != n) fail("mult grade cols");
    for (int b = 0; b < n; ++b) {
      const StructureTensor& t = h.mult[a][b];
      if (t.d_in1 != h.dim(a) || t.d_in2 != h.dim(b) ||
          t.d_out != h.dim(pi.mul(a, b)) || t.m.rows() != t.d_out ||
          t.m.cols() != t.d_in1 * t.d_in2) {
        fail("mult block (" + pi.name(a) + "," + pi.name(b) + ")");
      }
    }
  }
  if (h.unit.rows() != h.dim(pi.identity()) || h.unit.cols() != 1) fail("unit");
  if (static_cast<int>(h.comult.size()) != n) fail("comult family size");
  if (static_cast<int>(h.counit.size()) != n) fail("counit family size");
  for (int a = 0; a < n; ++a) {
    if (h.comult[a].rows() != h.dim(a) * h.dim(a) ||
        h.comult[a].cols() != h.dim(a)) {
      fail("comult block " + pi.name(a));
    }
    if (h.counit[a].rows() != 1 || h.counit[a].cols() != h.dim(a)) {
      fail("counit block " + pi.name(a));
    }
  }
  if (h.antipode.shift != inverse_shift(pi)) fail("antipode grade shift");
  if (static_cast<int>(h.antipode.blocks.size()) != n) fail("antipode family size");
  for (int a = 0; a < n; ++a) {
    if (h.antipode.blocks[a].rows() != h.dim(pi.inv(a)) ||
        h.antipode.blocks[a].cols() != h.dim(a)) {
      fail("antipode block " + pi.name(a));
    }
  }
}

Mat iterated_comult(const HopfPiAlgebra& h, int a, int n) {
  if (n < 1) throw InputError("iterated comult needs n >= 1");
  const int d = h.dim(a);
  Mat cur = Mat::identity(d, h.field);
  int factors = 1;
  while (factors < n) {
    int rest = 1;
    for (int k = 1; k < factors; ++k) rest *= d;
    cur = kron(h.comult[a], Mat::identity(rest, h.field)) * cur;
    ++factors;
  }
  return cur;
}

Mat mult_chain(const HopfPiAlgebra& h, const std::vector<int>& grades) {
  if (grades.empty()) throw InputError("mult chain needs at least one grade");
  int total = 1;
  for (int g : grades) total *= h.dim(g);
  Mat chain = Mat::identity(total, h.field);
  int acc = grades[0];
  for (size_t i = 1; i < grades.size(); ++i) {
    int rest = 1;
    for (size_t k = i + 1; k < grades.size(); ++k) rest *= h.dim(grades[k]);
    chain = kron(h.mult_mat(acc, grades[i]), Mat::identity(rest, h.field)) * chain;
    acc = h.group().mul(acc, grades[i]);
  }
  return chain;
}

Mat tensor_comult(const Mat& delta_a, const Mat& delta_b) {
  const int da = delta_a.cols(), db = delta_b.cols();
  Mat perm = tensor_factor_permutation({da, da, db, db}, {0, 2, 1, 3},
                                       delta_a.field());
  return perm * kron(delta_a, delta_b);
}

CheckReport check_hopf_pi_algebra(const HopfPiAlgebra& h) {
  validate_shapes(h);
  const FiniteGroup& pi = h.group();
  const Field& F = h.field;
  const int n = pi.size();
  const int e = pi.identity();

  CheckReport rep;

  // Unit, coalgebra, and antipode laws per grade.
  for (int a = 0; a < n; ++a) {
    const int d = h.dim(a);
    Mat id = Mat::identity(d, F);
    compare_columns(rep, axioms::kUnit, {a}, {d},
                    h.mult_mat(e, a) * kron(h.unit, id), id, "1 x = x = x 1");
    compare_columns(rep, axioms::kUnit, {a}, {d},
                    h.mult_mat(a, e) * kron(id, h.unit), id);
    compare_columns(rep, axioms::kCoassociativity, {a}, {d},
                    kron(h.comult[a], id) * h.comult[a],
                    kron(id, h.comult[a]) * h.comult[a],
                    "(Delta (x) id)Delta = (id (x) Delta)Delta");
    compare_columns(rep, axioms::kCounit, {a}, {d},
                    kron(h.counit[a], id) * h.comult[a], id,
                    "(eps (x) id)Delta = id = (id (x) eps)Delta");
    compare_columns(rep, axioms::kCounit, {a}, {d},
                    kron(id, h.counit[a]) * h.comult[a], id);
    compare_columns(rep, axioms::kAntipode, {a}, {d},
                    h.mult_mat(pi.inv(a), a) *
                        kron(h.antipode_mat(a), id) * h.comult[a],
                    h.unit * h.counit[a],
                    "S(x_1) x_2 = eps(x) 1 = x_1 S(x_2)");
    compare_columns(rep, axioms::kAntipode, {a}, {d},
                    h.mult_mat(a, pi.inv(a)) *
                        kron(id, h.antipode_mat(a)) * h.comult[a],
                    h.unit * h.counit[a]);
  }

  // The unit is a coalgebra map.
  {
    Mat one(1, 1, F);
    one.at(0, 0) = Scalar::one(F);
    compare_columns(rep, axioms::kComultUnit, {e}, {1}, h.comult[e] * h.unit,
                    kron(h.unit, h.unit), "Delta(1) = 1 (x) 1");
    compare_columns(rep, axioms::kCounitUnit, {e}, {1}, h.counit[e] * h.unit,
                    one, "eps(1) = 1");
  }

  // Per grade pair: multiplicativity of the coalgebra maps plus
  // associativity against every third grade.
  std::vector<std::function<CheckReport()>> tasks;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      tasks.push_back([&h, &pi, &F, n, a, b] {
        CheckReport r;
        const int ab = pi.mul(a, b);
        const int da = h.dim(a), db = h.dim(b);
        compare_columns(
            r, axioms::kComultMultiplicative, {a, b}, {da, db},
            h.comult[ab] * h.mult_mat(a, b),
            Pipeline(da * db, F)
                .blocks({h.comult[a], h.comult[b]})
                .permute({da, da, db, db}, {0, 2, 1, 3})
                .blocks({h.mult_mat(a, b), h.mult_mat(a, b)})
                .to_mat(),
            "Delta(x y) = Delta(x) Delta(y)");
        compare_columns(r, axioms::kCounitMultiplicative, {a, b},
                        {h.dim(a), h.dim(b)}, h.counit[ab] * h.mult_mat(a, b),
                        kron(h.counit[a], h.counit[b]),
                        "eps(x y) = eps(x) eps(y)");
        for (int c = 0; c < n; ++c) {
          const int bc = pi.mul(b, c);
          compare_columns(
              r, axioms::kAssociativity, {a, b, c},
              {h.dim(a), h.dim(b), h.dim(c)},
              h.mult_mat(ab, c) * kron(h.mult_mat(a, b), Mat::identity(h.dim(c), F)),
              h.mult_mat(a, bc) * kron(Mat::identity(h.dim(a), F), h.mult_mat(b, c)),
              "(x y) z = x (y z)");
        }
        return r;
      });
    }
  }
  for (const CheckReport& r : run_tasks<CheckReport>(std::move(tasks))) rep.merge(r);
  return rep;
}

bool is_cocommutative(const HopfPiAlgebra& h) {
  for (int a = 0; a < h.group().size(); ++a) {
    const int d = h.dim(a);
    if (swap_factors(d, d, h.field) * h.comult[a] != h.comult[a]) return false;
  }
  return true;
}

CheckReport check_antipode_identities(const HopfPiAlgebra& h) {
  validate_shapes(h);
  const FiniteGroup& pi = h.group();
  const Field& F = h.field;
  const int n = pi.size();
  CheckReport rep;

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      compare_columns(rep, axioms::kAntipodeAntimult, {a, b},
                      {h.dim(a), h.dim(b)},
                      h.antipode_mat(pi.mul(a, b)) * h.mult_mat(a, b),
                      h.mult_mat(pi.inv(b), pi.inv(a)) *
                          kron(h.antipode_mat(b), h.antipode_mat(a)) *
                          swap_factors(h.dim(a), h.dim(b), F),
                      "S(x y) = S(y) S(x)");
    }
  }
  for (int a = 0; a < n; ++a) {
    const int ia = pi.inv(a);
    compare_columns(rep, axioms::kAntipodeComult, {a}, {h.dim(a)},
                    h.comult[ia] * h.antipode_mat(a),
                    swap_factors(h.dim(ia), h.dim(ia), F) *
                        kron(h.antipode_mat(a), h.antipode_mat(a)) * h.comult[a],
                    "Delta(S x) = (S (x) S)(flip Delta x)");
    compare_columns(rep, axioms::kAntipodeCounit, {a}, {h.dim(a)},
                    h.counit[ia] * h.antipode_mat(a), h.counit[a],
                    "eps(S x) = eps(x)");
  }
  {
    int e = pi.identity();
    compare_columns(rep, axioms::kAntipodeUnit, {e}, {1},
                    h.antipode_mat(e) * h.unit, h.unit, "S(1) = 1");
  }
  if (is_cocommutative(h)) {
    for (int a = 0; a < n; ++a) {
      compare_columns(rep, axioms::kAntipodeInvolutive, {a}, {h.dim(a)},
                      h.antipode_mat(pi.inv(a)) * h.antipode_mat(a),
                      Mat::identity(h.dim(a), F), "S(S x) = x");
    }
  }
  return rep;
}

CheckReport check_hopf_morphism(const GradedLinearMap& f,
                                const HopfPiAlgebra& h,
                                const HopfPiAlgebra& k) {
  if (!(h.group() == k.group())) {
    throw InputError("morphism check needs matching grading groups");
  }
  const FiniteGroup& pi = h.group();
  const int n = pi.size();
  if (static_cast<int>(f.shift.size()) != n ||
      static_cast<int>(f.blocks.size()) != n) {
    throw InputError("morphism has wrong family size");
  }
  if (!is_group_homomorphism(pi, pi, f.shift)) {
    throw InputError("morphism grade shift is not a group homomorphism");
  }
  for (int a = 0; a < n; ++a) {
    if (f.blocks[a].rows() != k.dim(f.shift[a]) ||
        f.blocks[a].cols() != h.dim(a)) {
      throw InputError("morphism block " + pi.name(a) + " has wrong shape");
    }
  }
  CheckReport rep;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      compare_columns(rep, "morphism-mult", {a, b}, {h.dim(a), h.dim(b)},
                      k.mult_mat(f.shift[a], f.shift[b]) *
                          kron(f.blocks[a], f.blocks[b]),
                      f.blocks[pi.mul(a, b)] * h.mult_mat(a, b),
                      "f(x y) = f(x) f(y)");
    }
  }
  compare_columns(rep, "morphism-unit", {pi.identity()}, {1},
                  f.blocks[pi.identity()] * h.unit, k.unit, "f(1) = 1");
  for (int a = 0; a < n; ++a) {
    compare_columns(rep, "morphism-comult", {a}, {h.dim(a)},
                    k.comult[f.shift[a]] * f.blocks[a],
                    kron(f.blocks[a], f.blocks[a]) * h.comult[a],
                    "Delta f = (f (x) f) Delta");
    compare_columns(rep, "morphism-counit", {a}, {h.dim(a)},
                    k.counit[f.shift[a]] * f.blocks[a], h.counit[a],
                    "eps f = eps");
    compare_columns(rep, "morphism-antipode", {a}, {h.dim(a)},
                    k.antipode_mat(f.shift[a]) * f.blocks[a],
                    f.blocks[pi.inv(a)] * h.antipode_mat(a), "S f = f S");
  }
  return rep;
}

HopfPiAlgebra group_algebra(const GroupHom& deg, const Field& f) {
  const FiniteGroup& gamma = deg.source();
  const FiniteGroup& pi = deg.target();
  const int n = pi.size();

  std::vector<std::vector<int>> fiber(n);
  std::vector<int> pos(gamma.size(), -1);
  for (int g = 0; g < gamma.size(); ++g) {
    pos[g] = static_cast<int>(fiber[deg(g)].size());
    fiber[deg(g)].push_back(g);
  }
  std::vector<int> dims(n);
  for (int a = 0; a < n; ++a) dims[a] = static_cast<int>(fiber[a].size());

  HopfPiAlgebra h{GradedSpace(pi, dims), f, {}, Mat(), {}, {}, {}};
  h.mult.assign(n, std::vector<StructureTensor>());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      StructureTensor t(dims[pi.mul(a, b)], dims[a], dims[b], f);
      for (int j = 0; j < dims[a]; ++j) {
        for (int k = 0; k < dims[b]; ++k) {
          int gh = gamma.mul(fiber[a][j], fiber[b][k]);
          t.at(pos[gh], j, k) = Scalar::one(f);
        }
      }
      h.mult[a].push_back(std::move(t));
    }
  }
  h.unit = Mat(dims[pi.identity()], 1, f);
  h.unit.at(pos[gamma.identity()], 0) = Scalar::one(f);
  for (int a = 0; a < n; ++a) {
    Mat delta(dims[a] * dims[a], dims[a], f);
    Mat eps(1, dims[a], f);
    for (int k = 0; k < dims[a]; ++k) {
      delta.at(k * dims[a] + k, k) = Scalar::one(f);
      eps.at(0, k) = Scalar::one(f);
    }
    h.comult.push_back(std::move(delta));
    h.counit.push_back(std::move(eps));
  }
  h.antipode.shift = inverse_shift(pi);
  for (int a = 0; a < n; ++a) {
    const int ia = pi.inv(a);
    Mat s(dims[ia], dims[a], f);
    for (int j = 0; j < dims[a]; ++j) {
      s.at(pos[gamma.inv(fiber[a][j])], j) = Scalar::one(f);
    }
    h.antipode.blocks.push_back(std::move(s));
  }
  return h;
}

StructureTensor end_algebra_mult(int d, const Field& f) {
  StructureTensor t(d * d, d * d, d * d, f);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int l = 0; l < d; ++l) {
        // E_{ij} . E_{jl} = E_{il}; the left factor is applied last.
        t.at(i * d + l, i * d + j, j * d + l) = Scalar::one(f);
      }
  return t;
}

Mat end_algebra_unit(int d, const Field& f) {
  Mat u(d * d, 1, f);
  for (int i = 0; i < d; ++i) u.at(i * d + i, 0) = Scalar::one(f);
  return u;
}

namespace {

struct LeftSolve {
  std::optional<Mat> g;  // dg x dc
  int nullspace_dim = 0;
};

// Finds G with W (G (x) id) Delta = rhs, where W: d_out x (dg * dc) combines
// the unknown's target with the second comultiplication leg.
LeftSolve solve_left_factor(const Mat& comult, const Mat& w, const Mat& rhs,
                            int dg) {
  const int dc = comult.cols();
  const int dout = w.rows();
  const Field& f = w.field();
  if (comult.rows() != dc * dc || w.cols() != dg * dc || rhs.rows() != dout ||
      rhs.cols() != dc) {
    throw InputError("convolution solve shape mismatch");
  }
  Mat coef(dc * dout, dc * dg, f);
  Mat b(dc * dout, 1, f);
  for (int x = 0; x < dc; ++x) {
    for (int v = 0; v < dout; ++v) b.at(x * dout + v, 0) = rhs.at(v, x);
    for (int j = 0; j < dc; ++j) {
      for (int k = 0; k < dc; ++k) {
        const Scalar& dk = comult.at(j * dc + k, x);
        if (dk.is_zero()) continue;
        for (int u = 0; u < dg; ++u) {
          for (int v = 0; v < dout; ++v) {
            const Scalar& wv = w.at(v, u * dc + k);
            if (wv.is_zero()) continue;
            coef.at(x * dout + v, j * dg + u) += dk * wv;
          }
        }
      }
    }
  }
  auto sol = solve_linear(coef, b);
  LeftSolve out;
  if (!sol) return out;
  out.nullspace_dim = static_cast<int>(sol->nullspace.size());
  Mat g(dg, dc, f);
  for (int j = 0; j < dc; ++j)
    for (int u = 0; u < dg; ++u) g.at(u, j) = sol->particular.at(j * dg + u, 0);
  out.g = std::move(g);
  return out;
}

}  // namespace

ConvolutionResult convolution_inverse(const Mat& comult, const Mat& counit,
                                      const StructureTensor& alg_mult,
                                      const Mat& alg_unit, const Mat& f) {
  const int da = alg_mult.d_out;
  const int dc = comult.cols();
  if (alg_mult.d_in1 != da || alg_mult.d_in2 != da || alg_unit.rows() != da ||
      alg_unit.cols() != 1 || f.rows() != da || f.cols() != dc ||
      counit.rows() != 1 || counit.cols() != dc) {
    throw InputError("convolution inverse shape mismatch");
  }
  const Field& field = alg_mult.m.field();
  Mat w = alg_mult.m * kron(Mat::identity(da, field), f);
  Mat rhs = alg_unit * counit;
  LeftSolve ls = solve_left_factor(comult, w, rhs, da);
  ConvolutionResult res;
  res.nullspace_dim = ls.nullspace_dim;
  if (!ls.g) {
    res.status = ConvolutionResult::Status::no_solution;
    return res;
  }
  Mat right = alg_mult.m * kron(f, *ls.g) * comult;
  res.inverse = std::move(*ls.g);
  res.status = right == rhs ? ConvolutionResult::Status::ok
                            : ConvolutionResult::Status::one_sided;
  return res;
}

AntipodeSolveResult solve_antipode(const HopfPiAlgebra& h) {
  const FiniteGroup& pi = h.group();
  const int n = pi.size();
  AntipodeSolveResult res;
  GradedLinearMap s;
  s.shift = inverse_shift(pi);
  for (int a = 0; a < n; ++a) {
    const int ia = pi.inv(a);
    Mat rhs = h.unit * h.counit[a];
    LeftSolve ls = solve_left_factor(h.comult[a], h.mult_mat(ia, a), rhs,
                                     h.dim(ia));
    if (!ls.g) {
      res.status = AntipodeSolveResult::Status::no_solution;
      return res;
    }
    s.blocks.push_back(std::move(*ls.g));
  }
  for (int a = 0; a < n; ++a) {
    Mat right = h.mult_mat(a, pi.inv(a)) *
                kron(Mat::identity(h.dim(a), h.field), s.blocks[a]) *
                h.comult[a];
    if (right != h.unit * h.counit[a]) {
      res.status = AntipodeSolveResult::Status::one_sided;
      return res;
    }
  }
  res.status = AntipodeSolveResult::Status::ok;
  res.antipode = std::move(s);
  return res;
}

}  // namespace hopfpi
