#include "hopfpi/rota_baxter.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hopfpi/parallel.hpp"
#include "hopfpi/pipeline.hpp"

namespace hopfpi {

namespace {

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw InputError("mixed scalar fields");
}

void validate_rb_shapes(const RotaBaxterOperator& rb) {
  validate_shapes(rb.hopf);
  const FiniteGroup& pi = rb.group();
  if (rb.b.shift != inverse_shift(pi)) {
    throw InputError("operator blocks must land in the inverse grade");
  }
  if (static_cast<int>(rb.b.blocks.size()) != pi.size()) {
    throw InputError("need one operator block per grade");
  }
  for (int a = 0; a < pi.size(); ++a) {
    const Mat& m = rb.b.blocks[a];
    if (m.rows() != rb.dim(pi.inv(a)) || m.cols() != rb.dim(a)) {
      throw InputError("operator block shape mismatch at grade " + pi.name(a));
    }
    require_same_field(m.field(), rb.hopf.field);
  }
}

// x (x) y -> x_1 B(x_2) y S(B(x_3)), the product deformed by the operator.
// Streamed: the intermediate space has four tensor legs.
Pipeline deformed_product(const RotaBaxterOperator& rb, int a, int b) {
  const HopfPiAlgebra& h = rb.hopf;
  const FiniteGroup& pi = h.group();
  const int da = h.dim(a), db = h.dim(b), ia = pi.inv(a);
  Pipeline p(da * db, h.field);
  p.blocks({iterated_comult(h, a, 3), Pipeline::Factor::identity(db)})
      .permute({da, da, da, db}, {0, 1, 3, 2})
      .blocks({Pipeline::Factor::identity(da), rb.b.blocks[a],
               Pipeline::Factor::identity(db),
               h.antipode_mat(ia) * rb.b.blocks[a]})
      .then(mult_chain(h, {a, ia, b, a}));
  return p;
}

// Coalgebra-map sweeps for every block plus the twisted multiplicativity
// law over all grade pairs, against whatever product rb.hopf carries.
void operator_sweeps(CheckReport& rep, const RotaBaxterOperator& rb) {
  const HopfPiAlgebra& h = rb.hopf;
  const FiniteGroup& pi = h.group();
  const int n = pi.size();
  for (int a = 0; a < n; ++a) {
    const int ia = pi.inv(a);
    const Mat& ba = rb.b.blocks[a];
    compare_columns(rep, axioms::kRbComult, {a}, {h.dim(a)},
                    h.comult[ia] * ba, kron(ba, ba) * h.comult[a],
                    "Delta(B x) = B(x_1) (x) B(x_2)");
    compare_columns(rep, axioms::kRbCounit, {a}, {h.dim(a)},
                    h.counit[ia] * ba, h.counit[a], "eps(B x) = eps(x)");
  }
  std::vector<std::function<CheckReport()>> tasks;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      tasks.push_back([&rb, &h, &pi, a, b] {
        CheckReport r;
        Mat lhs = h.mult_mat(pi.inv(a), pi.inv(b)) *
                  kron(rb.b.blocks[a], rb.b.blocks[b]);
        Mat rhs = deformed_product(rb, a, b)
                      .then(rb.b.blocks[pi.mul(b, a)])
                      .to_mat();
        compare_columns(r, axioms::kRbLaw, {a, b}, {h.dim(a), h.dim(b)},
                        lhs, rhs, "B(x) B(y) = B(x_1 B(x_2) y S(B(x_3)))");
        return r;
      });
    }
  }
  for (const CheckReport& r : run_tasks<CheckReport>(std::move(tasks))) {
    rep.merge(r);
  }
}

}  // namespace

CheckReport check_rb(const RotaBaxterOperator& rb) {
  validate_rb_shapes(rb);
  if (!is_cocommutative(rb.hopf)) {
    throw GateError("the operator law is only stated over a cocommutative carrier");
  }
  CheckReport rep;
  rep.merge(check_hopf_pi_algebra(rb.hopf), "carrier:");
  operator_sweeps(rep, rb);
  return rep;
}

RotaBaxterOperator antipode_rb(const HopfPiAlgebra& h) {
  validate_shapes(h);
  return RotaBaxterOperator{h, h.antipode};
}

RotaBaxterOperator twist_rb(const RotaBaxterOperator& rb,
                            const std::vector<Mat>& phi) {
  validate_rb_shapes(rb);
  const FiniteGroup& pi = rb.group();
  if (static_cast<int>(phi.size()) != pi.size()) {
    throw InputError("need one twisting block per grade");
  }
  for (int a = 0; a < pi.size(); ++a) {
    if (phi[a].rows() != rb.dim(a) || phi[a].cols() != rb.dim(a)) {
      throw InputError("twisting block shape mismatch at grade " + pi.name(a));
    }
    require_same_field(phi[a].field(), rb.hopf.field);
  }
  std::vector<Mat> inverse;
  for (const Mat& p : phi) {
    auto iv = invert(p);
    if (!iv) throw GateError("twisting block is not invertible");
    inverse.push_back(std::move(*iv));
  }
  GradedLinearMap f{identity_shift(pi), phi};
  if (!check_hopf_morphism(f, rb.hopf, rb.hopf).pass()) {
    throw GateError("the twisting family is not a Hopf morphism");
  }
  RotaBaxterOperator out = rb;
  for (int a = 0; a < pi.size(); ++a) {
    out.b.blocks[a] = phi[pi.inv(a)] * rb.b.blocks[a] * inverse[a];
  }
  return out;
}

RotaBaxterOperator aut_indexed_rb(const RotaBaxterOperator& rb,
                                  const FiniteGroup& pi,
                                  const std::vector<Mat>& autos) {
  validate_rb_shapes(rb);
  if (rb.group().size() != 1) {
    throw InputError("spreading needs a trivially graded operator");
  }
  if (static_cast<int>(autos.size()) != pi.size()) {
    throw InputError("need one map per grade group element");
  }
  const HopfPiAlgebra& h0 = rb.hopf;
  const int d = h0.dim(0);
  const Field& F = h0.field;
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
  // Hopf automorphisms only; nothing requires the family to commute with
  // the operator block itself.
  for (int a = 0; a < pi.size(); ++a) {
    const Mat& p = autos[a];
    bool ok = h0.comult[0] * p == kron(p, p) * h0.comult[0] &&
              h0.counit[0] * p == h0.counit[0] &&
              p * h0.mult_mat(0, 0) == h0.mult_mat(0, 0) * kron(p, p) &&
              p * h0.unit == h0.unit &&
              p * h0.antipode_mat(0) == h0.antipode_mat(0) * p;
    if (!ok) {
      throw GateError("grade " + pi.name(a) +
                      " does not carry a Hopf automorphism");
    }
  }

  const int n = pi.size();
  HopfPiAlgebra out{GradedSpace(pi, std::vector<int>(n, d)),
                    F,
                    {},
                    h0.unit,
                    std::vector<Mat>(n, h0.comult[0]),
                    std::vector<Mat>(n, h0.counit[0]),
                    {}};
  out.mult.assign(n, std::vector<StructureTensor>());
  for (int a = 0; a < n; ++a) {
    for (int g = 0; g < n; ++g) {
      Mat block = autos[pi.mul(a, g)] * h0.mult_mat(0, 0) *
                  kron(autos[pi.inv(a)], autos[pi.inv(g)]);
      out.mult[a].push_back(StructureTensor::from_matrix(d, d, std::move(block)));
    }
  }
  out.antipode.shift = inverse_shift(pi);
  GradedLinearMap nb{inverse_shift(pi), {}};
  for (int a = 0; a < n; ++a) {
    const Mat& q = autos[pi.inv(a)];
    out.antipode.blocks.push_back(q * h0.antipode_mat(0) * q);
    nb.blocks.push_back(q * rb.b.blocks[0] * q);
  }
  return RotaBaxterOperator{std::move(out), std::move(nb)};
}

RotaBaxterOperator factorization_rb(const HopfPiAlgebra& h,
                                    const Mat& unit_factor,
                                    const std::vector<Mat>& graded_factor) {
  validate_shapes(h);
  const FiniteGroup& pi = h.group();
  const Field& F = h.field;
  const int n = pi.size();
  const int e = pi.identity();
  const int dg = unit_factor.cols();
  if (unit_factor.rows() != h.dim(e)) {
    throw InputError("unit factor must sit in the identity-grade component");
  }
  require_same_field(unit_factor.field(), F);
  if (static_cast<int>(graded_factor.size()) != n) {
    throw InputError("need one graded-factor basis per grade");
  }
  for (int a = 0; a < n; ++a) {
    if (graded_factor[a].rows() != h.dim(a)) {
      throw InputError("graded factor basis shape mismatch at grade " +
                       pi.name(a));
    }
    require_same_field(graded_factor[a].field(), F);
  }

  auto spans = [](const Mat& basis, const Mat& vectors) {
    for (int j = 0; j < vectors.cols(); ++j) {
      if (!solve_linear(basis, vectors.col(j)).has_value()) return false;
    }
    return true;
  };

  const Mat& g = unit_factor;
  bool g_closed = spans(g, h.mult_mat(e, e) * kron(g, g)) &&
                  spans(g, h.unit) &&
                  spans(kron(g, g), h.comult[e] * g) &&
                  spans(g, h.antipode_mat(e) * g);
  if (!g_closed) {
    throw GateError("the unit-graded factor is not a Hopf subalgebra");
  }
  if (!spans(graded_factor[e], h.unit)) {
    throw GateError("the graded factor does not contain the unit");
  }
  for (int a = 0; a < n; ++a) {
    const Mat& ka = graded_factor[a];
    if (!spans(kron(ka, ka), h.comult[a] * ka) ||
        !spans(graded_factor[pi.inv(a)], h.antipode_mat(a) * ka)) {
      throw GateError("the graded factor is not a graded Hopf subalgebra");
    }
    for (int b = 0; b < n; ++b) {
      if (!spans(graded_factor[pi.mul(a, b)],
                 h.mult_mat(a, b) * kron(ka, graded_factor[b]))) {
        throw GateError("the graded factor is not a graded Hopf subalgebra");
      }
    }
  }

  Mat eps_g = h.counit[e] * g;
  GradedLinearMap bmap{inverse_shift(pi), {}};
  for (int a = 0; a < n; ++a) {
    const Mat& ka = graded_factor[a];
    const int dk = ka.cols();
    if (dg * dk != h.dim(a)) {
      throw GateError("factor dimensions do not fill grade " + pi.name(a));
    }
    Mat prod = h.mult_mat(e, a) * kron(g, ka);
    auto pinv = invert(prod);
    if (!pinv) {
      throw GateError("multiplication does not factor grade " + pi.name(a));
    }
    bmap.blocks.push_back(h.antipode_mat(a) * ka *
                          kron(eps_g, Mat::identity(dk, F)) * *pinv);
  }
  return RotaBaxterOperator{h, std::move(bmap)};
}

HopfPiAlgebra descendent_hopf(const RotaBaxterOperator& rb) {
  validate_rb_shapes(rb);
  const FiniteGroup& pi = rb.group();
  if (!pi.is_abelian()) {
    throw GateError("the deformed product needs an abelian grading group");
  }
  if (!check_rb(rb).pass()) {
    throw GateError("the operator law fails on this carrier");
  }
  const HopfPiAlgebra& h = rb.hopf;
  const int n = pi.size();
  HopfPiAlgebra out{h.space, h.field, {}, h.unit, h.comult, h.counit, {}};
  out.mult.assign(n, std::vector<StructureTensor>());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      out.mult[a].push_back(StructureTensor::from_matrix(
          h.dim(a), h.dim(b), deformed_product(rb, a, b).to_mat()));
    }
  }
  // T(g) = S(B(g_1)) S(g_2) B(g_3), the antipode of the deformed product.
  out.antipode.shift = inverse_shift(pi);
  for (int a = 0; a < n; ++a) {
    const int ia = pi.inv(a);
    Mat legs = kron({h.antipode_mat(ia) * rb.b.blocks[a], h.antipode_mat(a),
                     rb.b.blocks[a]});
    out.antipode.blocks.push_back(mult_chain(h, {a, ia, ia}) * legs *
                                  iterated_comult(h, a, 3));
  }
  return out;
}

CheckReport check_descendent(const RotaBaxterOperator& rb,
                             const HopfPiAlgebra& descendent) {
  validate_rb_shapes(rb);
  validate_shapes(descendent);
  if (!(descendent.space == rb.hopf.space) ||
      !(descendent.field == rb.hopf.field)) {
    throw InputError("the deformed structure must live on the carrier's space");
  }
  const HopfPiAlgebra& h = rb.hopf;
  const FiniteGroup& pi = h.group();
  CheckReport rep;
  rep.merge(check_hopf_pi_algebra(descendent), "descendent:");
  for (int a = 0; a < pi.size(); ++a) {
    const int ia = pi.inv(a);
    const Mat& ta = descendent.antipode.blocks[a];
    compare_columns(
        rep, axioms::kRbPairing, {a}, {h.dim(a)},
        h.mult_mat(ia, a) * kron(rb.b.blocks[a], rb.b.blocks[ia] * ta) *
            h.comult[a],
        h.unit * h.counit[a], "B(h_1) B(T(h_2)) = eps(h) 1");
    compare_columns(rep, axioms::kRbAntipodeCompat, {a}, {h.dim(a)},
                    rb.b.blocks[ia] * ta,
                    h.antipode_mat(ia) * rb.b.blocks[a],
                    "B(T(h)) = S(B(h))");
  }
  {
    // The blocks satisfy their own law over the deformed product as well.
    CheckReport ops;
    operator_sweeps(ops, RotaBaxterOperator{descendent, rb.b});
    rep.merge(ops, "descendent:");
  }
  rep.merge(check_hopf_morphism(GradedLinearMap{inverse_shift(pi), rb.b.blocks},
                                descendent, h),
            "morphism:");
  return rep;
}

HopfPiBrace brace_from_rb(const RotaBaxterOperator& rb) {
  HopfPiAlgebra hb = descendent_hopf(rb);
  const HopfPiAlgebra& h = rb.hopf;
  return HopfPiBrace{h.space,   h.field, h.comult,   h.counit, h.mult,
                     h.unit,    h.antipode, hb.mult, hb.unit,  hb.antipode};
}

namespace {

// Every constraint whose three participants are assigned must hold:
//   B(a) B(b) = B(a B(a) b B(a)^-1).
bool partial_ok(const FiniteGroup& g, const std::vector<int>& img, int k) {
  for (int a = 0; a <= k; ++a) {
    const int ba = img[a];
    const int left = g.mul(a, ba);
    const int iba = g.inv(ba);
    for (int b = 0; b <= k; ++b) {
      const int arg = g.mul(g.mul(left, b), iba);
      if (arg > k) continue;
      if (g.mul(ba, img[b]) != img[arg]) return false;
    }
  }
  return true;
}

void search_images(const FiniteGroup& g,
                   const std::vector<std::vector<int>>& allowed,
                   std::vector<int>& img, int k,
                   std::vector<std::vector<int>>& out) {
  if (k == g.size()) {
    out.push_back(img);
    return;
  }
  for (int x : allowed[k]) {
    img[k] = x;
    if (partial_ok(g, img, k)) search_images(g, allowed, img, k + 1, out);
  }
  img[k] = -1;
}

}  // namespace

std::vector<std::vector<int>> enumerate_group_rb(const GroupHom& deg,
                                                 bool use_oracle,
                                                 std::int64_t bound) {
  const FiniteGroup& gamma = deg.source();
  const FiniteGroup& pi = deg.target();
  const int m = gamma.size();

  std::vector<std::vector<int>> allowed(m);
  for (int g = 0; g < m; ++g) {
    const int want = pi.inv(deg(g));
    for (int x = 0; x < m; ++x) {
      if (deg(x) == want) allowed[g].push_back(x);
    }
    if (allowed[g].empty()) return {};
  }
  std::int64_t prod = 1;
  for (int g = 0; g < m; ++g) {
    const std::int64_t sz = static_cast<std::int64_t>(allowed[g].size());
    if (prod > bound / sz) {
      throw InputError("candidate space exceeds the bound");
    }
    prod *= sz;
  }

  std::vector<std::vector<int>> out;
  if (use_oracle) {
    // Odometer over the whole candidate space, last position fastest, so
    // the surviving tables come out in lexicographic order.
    std::vector<int> idx(m, 0), img(m);
    for (;;) {
      for (int g = 0; g < m; ++g) img[g] = allowed[g][idx[g]];
      if (partial_ok(gamma, img, m - 1)) out.push_back(img);
      int p = m - 1;
      while (p >= 0 &&
             ++idx[p] == static_cast<int>(allowed[p].size())) {
        idx[p] = 0;
        --p;
      }
      if (p < 0) break;
    }
    return out;
  }

  // Backtracking, split across the first image; chunks merge in candidate
  // order, which keeps the whole listing lexicographic.
  std::vector<std::function<std::vector<std::vector<int>>()>> tasks;
  for (int x : allowed[0]) {
    tasks.push_back([&gamma, &allowed, x, m] {
      std::vector<std::vector<int>> found;
      std::vector<int> img(m, -1);
      img[0] = x;
      if (partial_ok(gamma, img, 0)) {
        search_images(gamma, allowed, img, 1, found);
      }
      return found;
    });
  }
  for (auto& chunk :
       run_tasks<std::vector<std::vector<int>>>(std::move(tasks))) {
    for (auto& v : chunk) out.push_back(std::move(v));
  }
  return out;
}

RotaBaxterOperator linearize_group_rb(const GroupHom& deg, const Field& f,
                                      const std::vector<int>& images) {
  const FiniteGroup& gamma = deg.source();
  const FiniteGroup& pi = deg.target();
  const int m = gamma.size();
  if (static_cast<int>(images.size()) != m) {
    throw InputError("need one image per group element");
  }
  for (int g = 0; g < m; ++g) {
    if (images[g] < 0 || images[g] >= m) {
      throw InputError("image index out of range");
    }
    if (deg(images[g]) != pi.inv(deg(g))) {
      throw InputError("image table does not land in the inverse grade");
    }
  }

  const int n = pi.size();
  std::vector<std::vector<int>> fiber(n);
  std::vector<int> pos(m, -1);
  for (int g = 0; g < m; ++g) {
    pos[g] = static_cast<int>(fiber[deg(g)].size());
    fiber[deg(g)].push_back(g);
  }
  GradedLinearMap bmap{inverse_shift(pi), {}};
  for (int a = 0; a < n; ++a) {
    const int ia = pi.inv(a);
    Mat block(static_cast<int>(fiber[ia].size()),
              static_cast<int>(fiber[a].size()), f);
    for (int j = 0; j < static_cast<int>(fiber[a].size()); ++j) {
      block.at(pos[images[fiber[a][j]]], j) = Scalar::one(f);
    }
    bmap.blocks.push_back(std::move(block));
  }
  return RotaBaxterOperator{group_algebra(deg, f), std::move(bmap)};
}

}  // namespace hopfpi
