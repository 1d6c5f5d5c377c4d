#include "hopfpi/brace.hpp"

#include <functional>
#include <map>

#include "hopfpi/parallel.hpp"
#include "hopfpi/pipeline.hpp"

namespace hopfpi {

namespace {

// Left-iterated comultiplication on raw blocks (no algebra needed).
Mat iterate_delta(const Mat& delta, int n) {
  const int d = delta.cols();
  Mat cur = Mat::identity(d, delta.field());
  int factors = 1;
  while (factors < n) {
    int rest = 1;
    for (int k = 1; k < factors; ++k) rest *= d;
    cur = kron(delta, Mat::identity(rest, delta.field())) * cur;
    ++factors;
  }
  return cur;
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw InputError("mixed scalar fields");
}

}  // namespace

HopfPiAlgebra HopfPiBrace::dot() const {
  return HopfPiAlgebra{space, field, dot_mult, dot_unit,
                       comult, counit, dot_antipode};
}

HopfPiAlgebra HopfPiBrace::circle() const {
  return HopfPiAlgebra{space, field, circle_mult, circle_unit,
                       comult, counit, circle_antipode};
}

CheckReport check_brace(const HopfPiBrace& b) {
  CheckReport rep;
  HopfPiAlgebra dot = b.dot();
  HopfPiAlgebra circle = b.circle();
  rep.merge(check_hopf_pi_algebra(dot), "dot:");
  rep.merge(check_hopf_pi_algebra(circle), "circle:");

  const FiniteGroup& pi = b.group();
  const Field& F = b.field;
  const int n = pi.size();

  compare_columns(rep, axioms::kSharedUnit, {pi.identity()}, {1},
                  b.circle_unit, b.dot_unit, "1_o = 1");

  std::vector<std::function<CheckReport()>> tasks;
  for (int a = 0; a < n; ++a) {
    for (int bb = 0; bb < n; ++bb) {
      tasks.push_back([&b, &dot, &pi, &F, n, a, bb] {
        CheckReport r;
        const int da = b.dim(a), db = b.dim(bb);
        Mat d3 = iterate_delta(b.comult[a], 3);
        for (int c = 0; c < n; ++c) {
          const int dc = b.dim(c);
          Mat lhs = Pipeline(da * db * dc, F)
                        .blocks({Pipeline::Factor::identity(da),
                                 b.dot_mult[bb][c].m})
                        .then(b.circle_mult[a][pi.mul(bb, c)].m)
                        .to_mat();
          Mat rhs = Pipeline(da * db * dc, F)
                        .blocks({d3, Pipeline::Factor::identity(db * dc)})
                        .permute({da, da, da, db, dc}, {0, 3, 1, 2, 4})
                        .blocks({b.circle_mult[a][bb].m,
                                 b.dot_antipode.blocks[a],
                                 b.circle_mult[a][c].m})
                        .then(mult_chain(
                            dot, {pi.mul(a, bb), pi.inv(a), pi.mul(a, c)}))
                        .to_mat();
          compare_columns(r, axioms::kBraceCompat, {a, bb, c}, {da, db, dc},
                          lhs, rhs,
                          "g o (h l) = (g_1 o h) . S(g_2) . (g_3 o l)");
        }
        return r;
      });
    }
  }
  for (const CheckReport& r : run_tasks<CheckReport>(std::move(tasks))) rep.merge(r);
  return rep;
}

CheckReport check_antipode_exchange(const HopfPiBrace& b) {
  CheckReport rep;
  const FiniteGroup& pi = b.group();
  const Field& F = b.field;
  const int n = pi.size();
  for (int a = 0; a < n; ++a) {
    for (int h = 0; h < n; ++h) {
      const int da = b.dim(a), dh = b.dim(h);
      const int ab = pi.mul(a, h);
      Mat pre = kron(b.comult[a], Mat::identity(dh, F));
      Mat lhs = b.dot_mult[pi.inv(ab)][a].m *
                kron(b.dot_antipode.blocks[ab] * b.circle_mult[a][h].m,
                     Mat::identity(da, F)) *
                tensor_factor_permutation({da, da, dh}, {0, 2, 1}, F) * pre;
      Mat rhs = b.dot_mult[pi.inv(a)][pi.mul(a, pi.inv(h))].m *
                kron(Mat::identity(b.dim(pi.inv(a)), F),
                     b.circle_mult[a][pi.inv(h)].m) *
                kron({b.dot_antipode.blocks[a], Mat::identity(da, F),
                      b.dot_antipode.blocks[h]}) *
                pre;
      compare_columns(rep, axioms::kAntipodeExchange, {a, h}, {da, dh}, lhs,
                      rhs, "S(g_1 o h) . g_2 = S(g_1) . (g_2 o S(h))");
    }
  }
  return rep;
}

StructureTensor left_action(const HopfPiBrace& b, int a, int beta) {
  const FiniteGroup& pi = b.group();
  const Field& F = b.field;
  Mat m = b.dot_mult[pi.inv(a)][pi.mul(a, beta)].m *
          kron(b.dot_antipode.blocks[a], b.circle_mult[a][beta].m) *
          kron(b.comult[a], Mat::identity(b.dim(beta), F));
  return StructureTensor::from_matrix(b.dim(a), b.dim(beta), std::move(m));
}

StructureTensor right_action(const HopfPiBrace& b, int a, int xi) {
  const FiniteGroup& pi = b.group();
  if (!pi.is_abelian()) {
    throw GateError("right action needs an abelian grading group");
  }
  const Field& F = b.field;
  const int da = b.dim(a), dx = b.dim(xi);
  const int ixi = pi.inv(xi);
  StructureTensor lact = left_action(b, a, xi);
  Mat m = Pipeline(da * dx, F)
              .blocks({b.comult[a], b.comult[xi]})
              .permute({da, da, dx, dx}, {0, 2, 1, 3})
              .blocks({lact.m, Pipeline::Factor::identity(da),
                       Pipeline::Factor::identity(dx)})
              .blocks({b.circle_antipode.blocks[xi],
                       Pipeline::Factor::identity(da),
                       Pipeline::Factor::identity(dx)})
              .blocks({b.circle_mult[ixi][a].m,
                       Pipeline::Factor::identity(dx)})
              .then(b.circle_mult[pi.mul(ixi, a)][xi].m)
              .to_mat();
  return StructureTensor::from_matrix(da, dx, std::move(m));
}

CheckReport check_module_properties(const HopfPiBrace& b) {
  CheckReport rep;
  const FiniteGroup& pi = b.group();
  const Field& F = b.field;
  const int n = pi.size();
  const int e = pi.identity();

  std::vector<std::vector<StructureTensor>> act(n);
  for (int a = 0; a < n; ++a) {
    for (int g = 0; g < n; ++g) act[a].push_back(left_action(b, a, g));
  }

  for (int g = 0; g < n; ++g) {
    compare_columns(rep, axioms::kActionUnit, {g}, {b.dim(g)},
                    act[e][g].m * kron(b.circle_unit, Mat::identity(b.dim(g), F)),
                    Mat::identity(b.dim(g), F), "1 -> h = h");
  }
  for (int a = 0; a < n; ++a) {
    compare_columns(rep, axioms::kActionOnUnit, {a}, {b.dim(a)},
                    act[a][e].m * kron(Mat::identity(b.dim(a), F), b.dot_unit),
                    b.dot_unit * b.counit[a], "g -> 1 = eps(g) 1");
  }
  for (int a = 0; a < n; ++a) {
    for (int g = 0; g < n; ++g) {
      const int da = b.dim(a), dg = b.dim(g);
      compare_columns(rep, axioms::kActionCounit, {a, g}, {da, dg},
                      b.counit[g] * act[a][g].m,
                      kron(b.counit[a], b.counit[g]),
                      "eps(g -> h) = eps(g) eps(h)");
      compare_columns(rep, axioms::kCircleReconstruction, {a, g}, {da, dg},
                      b.circle_mult[a][g].m,
                      b.dot_mult[a][g].m *
                          kron(Mat::identity(da, F), act[a][g].m) *
                          kron(b.comult[a], Mat::identity(dg, F)),
                      "g o h = g_1 . (g_2 -> h)");
      compare_columns(
          rep, axioms::kDotReconstruction, {a, g}, {da, dg},
          b.dot_mult[a][g].m,
          b.circle_mult[a][g].m *
              kron(Mat::identity(da, F), act[pi.inv(a)][g].m) *
              kron({Mat::identity(da, F), b.circle_antipode.blocks[a],
                    Mat::identity(dg, F)}) *
              kron(b.comult[a], Mat::identity(dg, F)),
          "g . h = g_1 o (T(g_2) -> h)");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      for (int g = 0; g < n; ++g) {
        compare_columns(rep, axioms::kActionAssoc, {a, c, g},
                        {b.dim(a), b.dim(c), b.dim(g)},
                        act[pi.mul(a, c)][g].m *
                            kron(b.circle_mult[a][c].m,
                                 Mat::identity(b.dim(g), F)),
                        act[a][g].m *
                            kron(Mat::identity(b.dim(a), F), act[c][g].m),
                        "(g o g') -> h = g -> (g' -> h)");
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int g = 0; g < n; ++g) {
      for (int d = 0; d < n; ++d) {
        const int da = b.dim(a), dg = b.dim(g), dd = b.dim(d);
        Mat lhs = act[a][pi.mul(g, d)].m *
                  kron(Mat::identity(da, F), b.dot_mult[g][d].m);
        Mat rhs = Pipeline(da * dg * dd, F)
                      .blocks({b.comult[a],
                               Pipeline::Factor::identity(dg * dd)})
                      .permute({da, da, dg, dd}, {0, 2, 1, 3})
                      .blocks({act[a][g].m, act[a][d].m})
                      .then(b.dot_mult[g][d].m)
                      .to_mat();
        compare_columns(rep, axioms::kActionOnMult, {a, g, d}, {da, dg, dd},
                        lhs, rhs, "g -> (h l) = (g_1 -> h)(g_2 -> l)");
      }
    }
  }

  const bool cocomm = is_cocommutative(b.dot());
  if (cocomm) {
    for (int a = 0; a < n; ++a) {
      for (int g = 0; g < n; ++g) {
        const int da = b.dim(a), dg = b.dim(g);
        compare_columns(
            rep, axioms::kActionComult, {a, g}, {da, dg},
            b.comult[g] * act[a][g].m,
            Pipeline(da * dg, F)
                .blocks({b.comult[a], b.comult[g]})
                .permute({da, da, dg, dg}, {0, 2, 1, 3})
                .blocks({act[a][g].m, act[a][g].m})
                .to_mat(),
            "Delta(g -> h) = (g_1 -> h_1) (x) (g_2 -> h_2)");
        compare_columns(rep, axioms::kActionAntipode, {a, g}, {da, dg},
                        b.dot_antipode.blocks[g] * act[a][g].m,
                        act[a][pi.inv(g)].m *
                            kron(Mat::identity(da, F),
                                 b.dot_antipode.blocks[g]),
                        "S(g -> h) = g -> S(h)");
      }
    }
  }

  if (pi.is_abelian() && cocomm) {
    std::vector<std::vector<StructureTensor>> ract(n);
    for (int a = 0; a < n; ++a) {
      for (int x = 0; x < n; ++x) ract[a].push_back(right_action(b, a, x));
    }
    for (int a = 0; a < n; ++a) {
      compare_columns(rep, axioms::kRightActionUnit, {a}, {b.dim(a)},
                      ract[a][e].m *
                          kron(Mat::identity(b.dim(a), F), b.circle_unit),
                      Mat::identity(b.dim(a), F), "a <- 1 = a");
      for (int x = 0; x < n; ++x) {
        const int da = b.dim(a), dx = b.dim(x);
        compare_columns(
            rep, axioms::kRightActionComult, {a, x}, {da, dx},
            b.comult[a] * ract[a][x].m,
            Pipeline(da * dx, F)
                .blocks({b.comult[a], b.comult[x]})
                .permute({da, da, dx, dx}, {0, 2, 1, 3})
                .blocks({ract[a][x].m, ract[a][x].m})
                .to_mat(),
            "Delta(a <- x) = (a_1 <- x_1) (x) (a_2 <- x_2)");
        for (int y = 0; y < n; ++y) {
          compare_columns(
              rep, axioms::kRightActionAssoc, {a, x, y},
              {da, dx, b.dim(y)},
              ract[a][y].m * kron(ract[a][x].m, Mat::identity(b.dim(y), F)),
              ract[a][pi.mul(x, y)].m *
                  kron(Mat::identity(da, F), b.circle_mult[x][y].m),
              "(a <- x) <- y = a <- (x o y)");
        }
      }
    }
  }
  return rep;
}

Mat braiding_c(const HopfPiBrace& b, int a, int beta) {
  const Field& F = b.field;
  const int da = b.dim(a), dbeta = b.dim(beta);
  StructureTensor lact = left_action(b, a, beta);
  StructureTensor ract = right_action(b, a, beta);
  return Pipeline(da * dbeta, F)
      .blocks({b.comult[a], b.comult[beta]})
      .permute({da, da, dbeta, dbeta}, {0, 2, 1, 3})
      .blocks({lact.m, ract.m})
      .to_mat();
}

Mat sigma_braiding(const HopfPiBrace& b, int a, int beta) {
  const FiniteGroup& pi = b.group();
  if (!pi.is_abelian()) {
    throw GateError("this braiding needs an abelian grading group");
  }
  const Field& F = b.field;
  const int da = b.dim(a), db = b.dim(beta);
  HopfPiAlgebra dot = b.dot();
  Mat chain = mult_chain(dot, {pi.inv(beta), a, beta});
  return Pipeline(da * db, F)
      .blocks({Pipeline::Factor::identity(da),
               iterate_delta(b.comult[beta], 3)})
      .permute({da, db, db, db}, {1, 2, 0, 3})
      .blocks({Pipeline::Factor::identity(db), b.dot_antipode.blocks[beta],
               Pipeline::Factor::identity(da), Pipeline::Factor::identity(db)})
      .blocks({Pipeline::Factor::identity(db), chain})
      .to_mat();
}

Mat braid_intertwiner(const HopfPiBrace& b, const std::vector<int>& grades) {
  if (grades.empty()) throw InputError("intertwiner needs at least one factor");
  const Field& F = b.field;
  const int n = static_cast<int>(grades.size());
  const int d1 = b.dim(grades[0]);
  if (n == 1) return Mat::identity(d1, F);

  std::vector<int> rest(grades.begin() + 1, grades.end());
  Mat f_rest = braid_intertwiner(b, rest);

  int rest_dim = 1;
  for (int g : rest) rest_dim *= b.dim(g);

  std::vector<int> src_dims;
  for (int i = 0; i < n; ++i) src_dims.push_back(d1);
  for (int g : rest) src_dims.push_back(b.dim(g));
  std::vector<int> out_from_src(2 * n - 1);
  out_from_src[0] = 0;
  for (int k = 1; k < n; ++k) {
    out_from_src[2 * k - 1] = k;
    out_from_src[2 * k] = n - 1 + k;
  }

  std::vector<Pipeline::Factor> acts;
  acts.push_back(Pipeline::Factor::identity(d1));
  for (int g : rest) acts.push_back(left_action(b, grades[0], g).m);

  return Pipeline(d1 * rest_dim, F)
      .blocks({Pipeline::Factor::identity(d1), f_rest})
      .blocks({iterate_delta(b.comult[grades[0]], n),
               Pipeline::Factor::identity(rest_dim)})
      .permute(src_dims, out_from_src)
      .blocks(std::move(acts))
      .to_mat();
}

BraidingAnalysis analyze_braiding(const HopfPiBrace& b, int n) {
  if (n < 2) throw InputError("braiding analysis needs n >= 2");
  const FiniteGroup& pi = b.group();
  const Field& F = b.field;
  const int N = pi.size();

  BraidingAnalysis out;
  CheckReport& rep = out.report;

  std::map<std::pair<int, int>, Mat> cmap, smap;
  for (int a = 0; a < N; ++a) {
    for (int g = 0; g < N; ++g) {
      cmap[{a, g}] = braiding_c(b, a, g);
      smap[{a, g}] = sigma_braiding(b, a, g);
    }
  }

  for (int a = 0; a < N; ++a) {
    for (int g = 0; g < N; ++g) {
      const Mat& c = cmap[{a, g}];
      const int da = b.dim(a), dg = b.dim(g);
      rep.note_checked(axioms::kBraidInvertible, "c is bijective");
      if (!invert(c)) {
        rep.add_failure({axioms::kBraidInvertible, {a, g}, {},
                         {"rank " + std::to_string(rank(c))},
                         {"rank " + std::to_string(da * dg)}});
      }
      compare_columns(rep, axioms::kBraidComult, {a, g}, {da, dg},
                      Pipeline(da * dg, F)
                          .then(c)
                          .blocks({b.comult[g], b.comult[a]})
                          .permute({dg, dg, da, da}, {0, 2, 1, 3})
                          .to_mat(),
                      Pipeline(da * dg, F)
                          .blocks({b.comult[a], b.comult[g]})
                          .permute({da, da, dg, dg}, {0, 2, 1, 3})
                          .blocks({c, c})
                          .to_mat(),
                      "Delta c = (c (x) c) Delta");
      compare_columns(rep, axioms::kBraidCounit, {a, g}, {da, dg},
                      kron(b.counit[g], b.counit[a]) * c,
                      kron(b.counit[a], b.counit[g]), "eps c = eps");
    }
  }

  if (n >= 3) {
    for (int a = 0; a < N; ++a) {
      for (int g = 0; g < N; ++g) {
        for (int h = 0; h < N; ++h) {
          const int da = b.dim(a), dg = b.dim(g), dh = b.dim(h);
          Mat lhs = kron(cmap[{g, h}], Mat::identity(da, F)) *
                    kron(Mat::identity(dg, F), cmap[{a, h}]) *
                    kron(cmap[{a, g}], Mat::identity(dh, F));
          Mat rhs = kron(Mat::identity(dh, F), cmap[{a, g}]) *
                    kron(cmap[{a, h}], Mat::identity(dg, F)) *
                    kron(Mat::identity(da, F), cmap[{g, h}]);
          compare_columns(rep, axioms::kBraidEquation, {a, g, h},
                          {da, dg, dh}, lhs, rhs,
                          "(c (x) 1)(1 (x) c)(c (x) 1) = (1 (x) c)(c (x) 1)(1 (x) c)");
        }
      }
    }
  }

  // Intertwiner orientation sweep over all grade tuples.
  out.sigma_to_c = true;
  out.c_to_sigma = true;
  out.intertwiner_invertible = true;

  std::map<std::vector<int>, Mat> fmap;
  auto intertwiner = [&](const std::vector<int>& t) -> const Mat& {
    auto it = fmap.find(t);
    if (it == fmap.end()) it = fmap.emplace(t, braid_intertwiner(b, t)).first;
    return it->second;
  };

  std::vector<int> tuple(n, 0);
  for (;;) {
    const Mat& f_t = intertwiner(tuple);
    if (!invert(f_t)) out.intertwiner_invertible = false;
    for (int i = 0; i + 1 < n; ++i) {
      int pre = 1, post = 1;
      for (int k = 0; k < i; ++k) pre *= b.dim(tuple[k]);
      for (int k = i + 2; k < n; ++k) post *= b.dim(tuple[k]);
      Mat ci = kron({Mat::identity(pre, F), cmap[{tuple[i], tuple[i + 1]}],
                     Mat::identity(post, F)});
      Mat si = kron({Mat::identity(pre, F), smap[{tuple[i], tuple[i + 1]}],
                     Mat::identity(post, F)});
      std::vector<int> swapped = tuple;
      std::swap(swapped[i], swapped[i + 1]);
      const Mat& f_s = intertwiner(swapped);
      if (f_s * si != ci * f_t) out.sigma_to_c = false;
      if (f_s * ci != si * f_t) out.c_to_sigma = false;
    }
    int p = n - 1;
    while (p >= 0 && tuple[p] == N - 1) tuple[p--] = 0;
    if (p < 0) break;
    ++tuple[p];
  }
  return out;
}

HopfPiBrace trivial_brace(const HopfPiAlgebra& h) {
  validate_shapes(h);
  return HopfPiBrace{h.space,    h.field, h.comult,  h.counit,
                     h.mult,     h.unit,  h.antipode,
                     h.mult,     h.unit,  h.antipode};
}

HopfPiBrace opposite_brace(const HopfPiAlgebra& h) {
  validate_shapes(h);
  const FiniteGroup& pi = h.group();
  if (!pi.is_abelian()) {
    throw GateError("opposite product needs an abelian grading group");
  }
  const int n = pi.size();
  HopfPiBrace b{h.space, h.field, h.comult, h.counit,
                h.mult,  h.unit,  h.antipode,
                {},      h.unit,  {}};
  b.circle_mult.assign(n, std::vector<StructureTensor>());
  for (int a = 0; a < n; ++a) {
    for (int g = 0; g < n; ++g) {
      Mat m = h.mult_mat(g, a) * swap_factors(h.dim(a), h.dim(g), h.field);
      b.circle_mult[a].push_back(
          StructureTensor::from_matrix(h.dim(a), h.dim(g), std::move(m)));
    }
  }
  HopfPiAlgebra rev{h.space, h.field, b.circle_mult, h.unit,
                    h.comult, h.counit, h.antipode};
  auto sol = solve_antipode(rev);
  if (sol.status != AntipodeSolveResult::Status::ok) {
    throw GateError("opposite product has no antipode");
  }
  b.circle_antipode = std::move(sol.antipode);
  return b;
}

HopfPiBrace aut_indexed_brace(const HopfPiBrace& b, const FiniteGroup& pi,
                              const std::vector<Mat>& autos) {
  if (b.group().size() != 1) {
    throw InputError("spreading needs a trivially graded brace");
  }
  if (static_cast<int>(autos.size()) != pi.size()) {
    throw InputError("need one map per grade group element");
  }
  const int d = b.dim(0);
  const Field& F = b.field;
  for (const Mat& p : autos) {
    if (p.rows() != d || p.cols() != d) {
      throw InputError("wrong map shape in the family");
    }
    require_same_field(p.field(), F);
  }
  if (autos[pi.identity()] != Mat::identity(d, F)) {
    throw GateError("the identity grade must carry the identity map");
  }
  for (int a = 0; a < pi.size(); ++a) {
    for (int g = 0; g < pi.size(); ++g) {
      if (autos[a] * autos[g] != autos[pi.mul(a, g)]) {
        throw GateError("the family is not multiplicative over the group");
      }
    }
  }
  for (int a = 0; a < pi.size(); ++a) {
    const Mat& p = autos[a];
    bool ok = b.comult[0] * p == kron(p, p) * b.comult[0] &&
              b.counit[0] * p == b.counit[0] &&
              p * b.dot_mult[0][0].m == b.dot_mult[0][0].m * kron(p, p) &&
              p * b.dot_unit == b.dot_unit &&
              p * b.circle_mult[0][0].m == b.circle_mult[0][0].m * kron(p, p) &&
              p * b.circle_unit == b.circle_unit &&
              p * b.dot_antipode.blocks[0] == b.dot_antipode.blocks[0] * p &&
              p * b.circle_antipode.blocks[0] == b.circle_antipode.blocks[0] * p;
    if (!ok) {
      throw GateError("grade " + pi.name(a) +
                      " does not carry a brace automorphism");
    }
  }

  const int n = pi.size();
  HopfPiBrace out{GradedSpace(pi, std::vector<int>(n, d)),
                  F,
                  std::vector<Mat>(n, b.comult[0]),
                  std::vector<Mat>(n, b.counit[0]),
                  {},
                  b.dot_unit,
                  {},
                  {},
                  b.circle_unit,
                  {}};
  auto spread_mult = [&](const StructureTensor& m) {
    std::vector<std::vector<StructureTensor>> res(n);
    for (int a = 0; a < n; ++a) {
      for (int g = 0; g < n; ++g) {
        Mat block = autos[pi.mul(a, g)] * m.m *
                    kron(autos[pi.inv(a)], autos[pi.inv(g)]);
        res[a].push_back(StructureTensor::from_matrix(d, d, std::move(block)));
      }
    }
    return res;
  };
  auto spread_antipode = [&](const Mat& s) {
    GradedLinearMap g;
    g.shift = inverse_shift(pi);
    for (int a = 0; a < n; ++a) {
      g.blocks.push_back(autos[pi.inv(a)] * s * autos[pi.inv(a)]);
    }
    return g;
  };
  out.dot_mult = spread_mult(b.dot_mult[0][0]);
  out.dot_antipode = spread_antipode(b.dot_antipode.blocks[0]);
  out.circle_mult = spread_mult(b.circle_mult[0][0]);
  out.circle_antipode = spread_antipode(b.circle_antipode.blocks[0]);
  return out;
}

CheckReport check_modulelike_action(const HopfPiAlgebra& k,
                                    const HopfPiAlgebra& h,
                                    const ActionBlocks& act) {
  validate_shapes(k);
  validate_shapes(h);
  require_same_field(k.field, h.field);
  const FiniteGroup& pk = k.group();
  const FiniteGroup& ph = h.group();
  const Field& F = h.field;
  const int nk = pk.size(), nh = ph.size();
  if (static_cast<int>(act.size()) != nk) {
    throw InputError("need one action row per actor grade");
  }
  for (int a = 0; a < nk; ++a) {
    if (static_cast<int>(act[a].size()) != nh) {
      throw InputError("need one action block per target grade");
    }
    for (int g = 0; g < nh; ++g) {
      const StructureTensor& t = act[a][g];
      if (t.d_in1 != k.dim(a) || t.d_in2 != h.dim(g) || t.d_out != h.dim(g)) {
        throw InputError("action block (" + pk.name(a) + "," + ph.name(g) +
                         ") has wrong shape");
      }
    }
  }

  CheckReport rep;
  for (int g = 0; g < nh; ++g) {
    compare_columns(rep, axioms::kModUnit, {g}, {h.dim(g)},
                    act[pk.identity()][g].m *
                        kron(k.unit, Mat::identity(h.dim(g), F)),
                    Mat::identity(h.dim(g), F), "1 -> h = h");
  }
  for (int a = 0; a < nk; ++a) {
    compare_columns(rep, axioms::kModTargetUnit, {a}, {k.dim(a)},
                    act[a][ph.identity()].m *
                        kron(Mat::identity(k.dim(a), F), h.unit),
                    h.unit * k.counit[a], "k -> 1 = eps(k) 1");
  }
  for (int a = 0; a < nk; ++a) {
    for (int g = 0; g < nh; ++g) {
      const int da = k.dim(a), dg = h.dim(g);
      compare_columns(rep, axioms::kModCounit, {a, g}, {da, dg},
                      h.counit[g] * act[a][g].m,
                      kron(k.counit[a], h.counit[g]),
                      "eps(k -> h) = eps(k) eps(h)");
      compare_columns(
          rep, axioms::kModComult, {a, g}, {da, dg},
          h.comult[g] * act[a][g].m,
          kron(act[a][g].m, act[a][g].m) *
              tensor_factor_permutation({da, da, dg, dg}, {0, 2, 1, 3}, F) *
              kron(k.comult[a], h.comult[g]),
          "Delta(k -> h) = (k_1 -> h_1) (x) (k_2 -> h_2)");
    }
  }
  for (int a = 0; a < nk; ++a) {
    for (int c = 0; c < nk; ++c) {
      for (int g = 0; g < nh; ++g) {
        compare_columns(rep, axioms::kModAssoc, {a, c, g},
                        {k.dim(a), k.dim(c), h.dim(g)},
                        act[pk.mul(a, c)][g].m *
                            kron(k.mult_mat(a, c), Mat::identity(h.dim(g), F)),
                        act[a][g].m *
                            kron(Mat::identity(k.dim(a), F), act[c][g].m),
                        "(k k') -> h = k -> (k' -> h)");
      }
    }
  }
  for (int a = 0; a < nk; ++a) {
    for (int g = 0; g < nh; ++g) {
      for (int dd = 0; dd < nh; ++dd) {
        const int da = k.dim(a), dg = h.dim(g), dD = h.dim(dd);
        Mat lhs = act[a][ph.mul(g, dd)].m *
                  kron(Mat::identity(da, F), h.mult_mat(g, dd));
        Mat rhs = h.mult_mat(g, dd) * kron(act[a][g].m, act[a][dd].m) *
                  tensor_factor_permutation({da, da, dg, dD}, {0, 2, 1, 3}, F) *
                  kron(k.comult[a], Mat::identity(dg * dD, F));
        compare_columns(rep, axioms::kModMult, {a, g, dd}, {da, dg, dD}, lhs,
                        rhs, "k -> (h h') = (k_1 -> h)(k_2 -> h')");
      }
    }
  }
  return rep;
}

namespace {

void gate_on(const CheckReport& rep, const std::string& what) {
  if (!rep.pass()) {
    throw GateError(what + " (" + std::to_string(rep.total_failures()) +
                    " failing basis tuples)");
  }
}

}  // namespace

HopfPiBrace smash_brace_pimod(const HopfPiAlgebra& h, const HopfPiAlgebra& k,
                              const ActionBlocks& act) {
  if (k.group().size() != 1) {
    throw InputError("the acting factor must be trivially graded");
  }
  require_same_field(h.field, k.field);
  gate_on(check_hopf_pi_algebra(h), "the graded factor is not a Hopf algebra");
  gate_on(check_hopf_pi_algebra(k), "the acting factor is not a Hopf algebra");
  gate_on(check_modulelike_action(k, h, act), "the action is not modulelike");

  const FiniteGroup& pi = h.group();
  const Field& F = h.field;
  const int n = pi.size();
  const int dk = k.dim(0);

  std::vector<int> dims(n);
  for (int a = 0; a < n; ++a) dims[a] = h.dim(a) * dk;
  HopfPiBrace b{GradedSpace(pi, dims), F, {}, {}, {}, Mat(), {}, {}, Mat(), {}};

  for (int a = 0; a < n; ++a) {
    b.comult.push_back(tensor_comult(h.comult[a], k.comult[0]));
    b.counit.push_back(kron(h.counit[a], k.counit[0]));
  }
  b.dot_unit = kron(h.unit, k.unit);
  b.circle_unit = b.dot_unit;

  b.dot_mult.assign(n, std::vector<StructureTensor>());
  b.circle_mult.assign(n, std::vector<StructureTensor>());
  for (int a = 0; a < n; ++a) {
    for (int g = 0; g < n; ++g) {
      const int dha = h.dim(a), dhg = h.dim(g);
      Mat perm = tensor_factor_permutation({dha, dk, dhg, dk}, {0, 2, 1, 3}, F);
      b.dot_mult[a].push_back(StructureTensor::from_matrix(
          dims[a], dims[g],
          kron(h.mult_mat(a, g), k.mult_mat(0, 0)) * perm));

      Mat pre = kron({Mat::identity(dha, F), k.comult[0],
                      Mat::identity(dhg * dk, F)});
      Mat shuffle = tensor_factor_permutation({dha, dk, dk, dhg, dk},
                                              {0, 1, 3, 2, 4}, F);
      Mat mid = kron({Mat::identity(dha, F), act[0][g].m,
                      Mat::identity(dk, F), Mat::identity(dk, F)});
      b.circle_mult[a].push_back(StructureTensor::from_matrix(
          dims[a], dims[g],
          kron(h.mult_mat(a, g), k.mult_mat(0, 0)) * mid * shuffle * pre));
    }
  }

  b.dot_antipode.shift = inverse_shift(pi);
  b.circle_antipode.shift = inverse_shift(pi);
  for (int a = 0; a < n; ++a) {
    b.dot_antipode.blocks.push_back(
        kron(h.antipode_mat(a), k.antipode_mat(0)));
    const int ia = pi.inv(a);
    Mat mid = kron({h.antipode_mat(a), k.antipode_mat(0), k.antipode_mat(0)});
    Mat perm = tensor_factor_permutation({h.dim(ia), dk, dk}, {1, 0, 2}, F);
    b.circle_antipode.blocks.push_back(
        kron(act[0][ia].m, Mat::identity(dk, F)) * perm * mid *
        kron(Mat::identity(h.dim(a), F), k.comult[0]));
  }
  return b;
}

HopfPiBrace smash_brace_modlike(const HopfPiAlgebra& h, const HopfPiAlgebra& k,
                                const ActionBlocks& act) {
  require_same_field(h.field, k.field);
  gate_on(check_hopf_pi_algebra(h), "the acted factor is not a Hopf algebra");
  gate_on(check_hopf_pi_algebra(k), "the acting factor is not a Hopf algebra");
  gate_on(check_modulelike_action(k, h, act), "the action is not modulelike");

  const FiniteGroup& pk = k.group();
  const FiniteGroup& ph = h.group();
  const Field& F = h.field;
  const int nk = pk.size(), nh = ph.size();
  FiniteGroup prod = FiniteGroup::direct_product(pk, ph);
  auto at = [nh](int a, int g) { return a * nh + g; };

  std::vector<int> dims(prod.size());
  for (int a = 0; a < nk; ++a)
    for (int g = 0; g < nh; ++g) dims[at(a, g)] = h.dim(g) * k.dim(a);
  HopfPiBrace b{GradedSpace(prod, dims), F, {}, {}, {}, Mat(), {}, {}, Mat(), {}};

  for (int a = 0; a < nk; ++a) {
    for (int g = 0; g < nh; ++g) {
      b.comult.push_back(tensor_comult(h.comult[g], k.comult[a]));
      b.counit.push_back(kron(h.counit[g], k.counit[a]));
    }
  }
  b.dot_unit = kron(h.unit, k.unit);
  b.circle_unit = b.dot_unit;

  const int np = prod.size();
  b.dot_mult.assign(np, std::vector<StructureTensor>());
  b.circle_mult.assign(np, std::vector<StructureTensor>());
  for (int a = 0; a < nk; ++a) {
    for (int g = 0; g < nh; ++g) {
      for (int a2 = 0; a2 < nk; ++a2) {
        for (int g2 = 0; g2 < nh; ++g2) {
          const int dha = h.dim(g), dka = k.dim(a);
          const int dhb = h.dim(g2), dkb = k.dim(a2);
          Mat perm = tensor_factor_permutation({dha, dka, dhb, dkb},
                                               {0, 2, 1, 3}, F);
          Mat post = kron(h.mult_mat(g, g2), k.mult_mat(a, a2));
          b.dot_mult[at(a, g)].push_back(StructureTensor::from_matrix(
              dims[at(a, g)], dims[at(a2, g2)], post * perm));

          Mat pre = kron({Mat::identity(dha, F), k.comult[a],
                          Mat::identity(dhb * dkb, F)});
          Mat shuffle = tensor_factor_permutation({dha, dka, dka, dhb, dkb},
                                                  {0, 1, 3, 2, 4}, F);
          Mat mid = kron({Mat::identity(dha, F), act[a][g2].m,
                          Mat::identity(dka, F), Mat::identity(dkb, F)});
          b.circle_mult[at(a, g)].push_back(StructureTensor::from_matrix(
              dims[at(a, g)], dims[at(a2, g2)], post * mid * shuffle * pre));
        }
      }
    }
  }

  b.dot_antipode.shift = inverse_shift(prod);
  b.circle_antipode.shift = inverse_shift(prod);
  for (int a = 0; a < nk; ++a) {
    for (int g = 0; g < nh; ++g) {
      b.dot_antipode.blocks.push_back(
          kron(h.antipode_mat(g), k.antipode_mat(a)));
      const int ia = pk.inv(a), ig = ph.inv(g);
      Mat mid = kron({h.antipode_mat(g), k.antipode_mat(a), k.antipode_mat(a)});
      Mat perm = tensor_factor_permutation({h.dim(ig), k.dim(ia), k.dim(ia)},
                                           {1, 0, 2}, F);
      b.circle_antipode.blocks.push_back(
          kron(act[ia][ig].m, Mat::identity(k.dim(ia), F)) * perm * mid *
          kron(Mat::identity(h.dim(g), F), k.comult[a]));
    }
  }
  return b;
}

}  // namespace hopfpi
