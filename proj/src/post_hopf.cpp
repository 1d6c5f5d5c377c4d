#include "hopfpi/post_hopf.hpp"

#include <functional>

#include "hopfpi/parallel.hpp"
#include "hopfpi/pipeline.hpp"

namespace hopfpi {

namespace {

void validate_post_shapes(const PostHopfStructure& ph) {
  validate_shapes(ph.hopf);
  const int n = ph.group().size();
  if (static_cast<int>(ph.triangle.size()) != n) {
    throw InputError("need one triangle row per grade");
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(ph.triangle[a].size()) != n) {
      throw InputError("need one triangle block per grade pair");
    }
    for (int b = 0; b < n; ++b) {
      const StructureTensor& t = ph.triangle[a][b];
      if (t.d_in1 != ph.dim(a) || t.d_in2 != ph.dim(b) ||
          t.d_out != ph.dim(b)) {
        throw InputError("triangle block (" + ph.group().name(a) + "," +
                         ph.group().name(b) + ") has wrong shape");
      }
    }
  }
}

// x * y = x_1 . (x_2 |> y) as a matrix H_a (x) H_b -> H_{ab}.
Mat star_block(const PostHopfStructure& ph, int a, int b) {
  const HopfPiAlgebra& h = ph.hopf;
  const Field& F = h.field;
  const int da = h.dim(a), db = h.dim(b);
  return h.mult_mat(a, b) *
         kron(Mat::identity(da, F), ph.triangle[a][b].m) *
         kron(h.comult[a], Mat::identity(db, F));
}

// theta_{a,b} packed as a hom into End(H_b): column x is the matrix of
// e_x |> - with entry (i,j) at row i*dim(b)+j.
Mat theta_block(const PostHopfStructure& ph, int a, int b) {
  const int da = ph.dim(a), db = ph.dim(b);
  Mat f(db * db, da, ph.hopf.field);
  for (int x = 0; x < da; ++x)
    for (int i = 0; i < db; ++i)
      for (int j = 0; j < db; ++j)
        f.at(i * db + j, x) = ph.triangle[a][b].at(i, x, j);
  return f;
}

ConvolutionResult solve_psi(const PostHopfStructure& ph, int a, int b) {
  const HopfPiAlgebra& h = ph.hopf;
  const int db = h.dim(b);
  return convolution_inverse(h.comult[a], h.counit[a],
                             end_algebra_mult(db, h.field),
                             end_algebra_unit(db, h.field),
                             theta_block(ph, a, b));
}

// End(H) (x) H -> H, E_{ij} (x) e_k -> delta_{jk} e_i.
Mat end_eval(int d, const Field& F) {
  Mat ev(d, d * d * d, F);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      ev.at(i, (i * d + j) * d + j) = Scalar::one(F);
  return ev;
}

const char* describe(ConvolutionResult::Status s) {
  switch (s) {
    case ConvolutionResult::Status::ok:
      return "ok";
    case ConvolutionResult::Status::one_sided:
      return "only a one-sided inverse";
    default:
      return "no inverse";
  }
}

}  // namespace

CheckReport check_post_hopf(const PostHopfStructure& ph) {
  validate_post_shapes(ph);
  const HopfPiAlgebra& h = ph.hopf;
  const FiniteGroup& pi = ph.group();
  const Field& F = h.field;
  const int n = pi.size();

  CheckReport rep;
  rep.merge(check_hopf_pi_algebra(h), "carrier:");

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int da = h.dim(a), db = h.dim(b);
      const Mat& t = ph.triangle[a][b].m;
      compare_columns(
          rep, axioms::kTriangleComult, {a, b}, {da, db}, h.comult[b] * t,
          Pipeline(da * db, F)
              .blocks({h.comult[a], h.comult[b]})
              .permute({da, da, db, db}, {0, 2, 1, 3})
              .blocks({t, t})
              .to_mat(),
          "Delta(x |> y) = (x_1 |> y_1) (x) (x_2 |> y_2)");
      compare_columns(rep, axioms::kTriangleCounit, {a, b}, {da, db},
                      h.counit[b] * t, kron(h.counit[a], h.counit[b]),
                      "eps(x |> y) = eps(x) eps(y)");
    }
  }

  std::vector<std::function<CheckReport()>> tasks;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      tasks.push_back([&ph, &h, &pi, &F, n, a, b] {
        CheckReport r;
        const int da = h.dim(a), db = h.dim(b);
        Mat star_ab = star_block(ph, a, b);
        for (int c = 0; c < n; ++c) {
          const int dc = h.dim(c);
          compare_columns(
              r, axioms::kTriangleOnMult, {a, b, c}, {da, db, dc},
              ph.triangle[a][pi.mul(b, c)].m *
                  kron(Mat::identity(da, F), h.mult_mat(b, c)),
              Pipeline(da * db * dc, F)
                  .blocks({h.comult[a], Pipeline::Factor::identity(db * dc)})
                  .permute({da, da, db, dc}, {0, 2, 1, 3})
                  .blocks({ph.triangle[a][b].m, ph.triangle[a][c].m})
                  .then(h.mult_mat(b, c))
                  .to_mat(),
              "x |> (y z) = (x_1 |> y)(x_2 |> z)");
          compare_columns(
              r, axioms::kTriangleCompose, {a, b, c}, {da, db, dc},
              ph.triangle[a][c].m *
                  kron(Mat::identity(da, F), ph.triangle[b][c].m),
              ph.triangle[pi.mul(a, b)][c].m *
                  kron(star_ab, Mat::identity(dc, F)),
              "x |> (y |> z) = (x_1 (x_2 |> y)) |> z");
        }
        r.note_checked(axioms::kTriangleInvertible,
                       "psi_{x_1} theta_{x_2} = theta_{x_1} psi_{x_2} "
                       "= eps(x) id");
        ConvolutionResult cr = solve_psi(ph, a, b);
        if (cr.status != ConvolutionResult::Status::ok) {
          r.add_failure({axioms::kTriangleInvertible,
                         {a, b},
                         {},
                         {describe(cr.status)},
                         {"a two-sided convolution inverse"}});
        }
        return r;
      });
    }
  }
  for (const CheckReport& r : run_tasks<CheckReport>(std::move(tasks))) {
    rep.merge(r);
  }
  return rep;
}

CheckReport check_post_hopf_derived(const PostHopfStructure& ph) {
  validate_post_shapes(ph);
  const HopfPiAlgebra& h = ph.hopf;
  const FiniteGroup& pi = ph.group();
  const Field& F = h.field;
  const int n = pi.size();
  const int e = pi.identity();

  CheckReport rep;
  for (int a = 0; a < n; ++a) {
    const int da = h.dim(a);
    compare_columns(rep, axioms::kTriangleOnUnit, {a}, {da},
                    ph.triangle[a][e].m * kron(Mat::identity(da, F), h.unit),
                    h.unit * h.counit[a], "x |> 1 = eps(x) 1");
    compare_columns(rep, axioms::kTriangleUnitActs, {a}, {da},
                    ph.triangle[e][a].m * kron(h.unit, Mat::identity(da, F)),
                    Mat::identity(da, F), "1 |> y = y");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int da = h.dim(a), db = h.dim(b);
      compare_columns(rep, axioms::kTriangleAntipode, {a, b}, {da, db},
                      h.antipode_mat(b) * ph.triangle[a][b].m,
                      ph.triangle[a][pi.inv(b)].m *
                          kron(Mat::identity(da, F), h.antipode_mat(b)),
                      "S(x |> y) = x |> S(y)");
    }
  }
  return rep;
}

Mat psi_block(const PostHopfStructure& ph, int a, int b) {
  validate_post_shapes(ph);
  ConvolutionResult cr = solve_psi(ph, a, b);
  if (cr.status != ConvolutionResult::Status::ok) {
    throw GateError("theta at (" + ph.group().name(a) + "," +
                    ph.group().name(b) + ") has " + describe(cr.status));
  }
  return cr.inverse;
}

HopfPiAlgebra subadjacent(const PostHopfStructure& ph) {
  {
    CheckReport rep = check_post_hopf(ph);
    if (!rep.pass()) {
      throw GateError("not a post-Hopf structure (" +
                      std::to_string(rep.total_failures()) +
                      " failing basis tuples)");
    }
  }
  const HopfPiAlgebra& h = ph.hopf;
  if (!is_cocommutative(h)) {
    throw GateError("the subadjacent product needs a cocommutative carrier");
  }
  const FiniteGroup& pi = ph.group();
  const int n = pi.size();

  HopfPiAlgebra out{h.space, h.field, {}, h.unit, h.comult, h.counit, {}};
  out.mult.assign(n, std::vector<StructureTensor>());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      out.mult[a].push_back(StructureTensor::from_matrix(
          h.dim(a), h.dim(b), star_block(ph, a, b)));
    }
  }
  out.antipode.shift = inverse_shift(pi);
  for (int a = 0; a < n; ++a) {
    const int ia = pi.inv(a);
    out.antipode.blocks.push_back(end_eval(h.dim(ia), h.field) *
                                  kron(psi_block(ph, a, ia),
                                       h.antipode_mat(a)) *
                                  h.comult[a]);
  }
  return out;
}

HopfPiAlgebra unit_part(const HopfPiAlgebra& h) {
  validate_shapes(h);
  const int e = h.group().identity();
  HopfPiAlgebra out{GradedSpace(FiniteGroup::trivial(), {h.dim(e)}),
                    h.field,
                    {{h.mult[e][e]}},
                    h.unit,
                    {h.comult[e]},
                    {h.counit[e]},
                    GradedLinearMap{{0}, {h.antipode_mat(e)}}};
  return out;
}

HopfPiBrace brace_from_post_hopf(const PostHopfStructure& ph) {
  HopfPiAlgebra sub = subadjacent(ph);
  const HopfPiAlgebra& h = ph.hopf;
  return HopfPiBrace{h.space,      h.field,  h.comult,  h.counit,
                     h.mult,       h.unit,   h.antipode,
                     sub.mult,     sub.unit, sub.antipode};
}

PostHopfStructure post_hopf_from_brace(const HopfPiBrace& b) {
  {
    CheckReport rep = check_brace(b);
    if (!rep.pass()) {
      throw GateError("not a brace (" + std::to_string(rep.total_failures()) +
                      " failing basis tuples)");
    }
  }
  if (!is_cocommutative(b.dot())) {
    throw GateError("the derived triangle needs a cocommutative brace");
  }
  const int n = b.group().size();
  PostHopfStructure ph{b.dot(), ActionBlocks(n)};
  for (int a = 0; a < n; ++a) {
    for (int g = 0; g < n; ++g) {
      ph.triangle[a].push_back(left_action(b, a, g));
    }
  }
  return ph;
}

HopfPiBrace smash_from_post_hopf(const PostHopfStructure& ph) {
  HopfPiAlgebra sub = subadjacent(ph);
  HopfPiAlgebra he = unit_part(ph.hopf);
  const int n = ph.group().size();
  const int e = ph.group().identity();
  ActionBlocks act(n);
  for (int a = 0; a < n; ++a) act[a].push_back(ph.triangle[a][e]);
  return smash_brace_modlike(he, sub, act);
}

}  // namespace hopfpi
