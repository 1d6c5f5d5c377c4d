#include "hopfpi/matched_pair.hpp"

#include "hopfpi/pipeline.hpp"

namespace hopfpi {

namespace {

void validate_pair_shapes(const MatchedPair& mp) {
  validate_shapes(mp.k);
  validate_shapes(mp.h);
  if (!(mp.k.field == mp.h.field)) throw InputError("mixed scalar fields");
  const int n1 = mp.k.group().size();
  const int n2 = mp.h.group().size();
  if (static_cast<int>(mp.to_k.size()) != n2 ||
      static_cast<int>(mp.to_h.size()) != n2) {
    throw InputError("need one action row per H grade");
  }
  for (int a = 0; a < n2; ++a) {
    if (static_cast<int>(mp.to_k[a].size()) != n1 ||
        static_cast<int>(mp.to_h[a].size()) != n1) {
      throw InputError("need one action block per K grade");
    }
    for (int g = 0; g < n1; ++g) {
      const StructureTensor& f = mp.to_k[a][g];
      const StructureTensor& w = mp.to_h[a][g];
      if (f.d_in1 != mp.h.dim(a) || f.d_in2 != mp.k.dim(g) ||
          f.d_out != mp.k.dim(g) || w.d_in1 != mp.h.dim(a) ||
          w.d_in2 != mp.k.dim(g) || w.d_out != mp.h.dim(a)) {
        throw InputError("action block (" + mp.h.group().name(a) + "," +
                         mp.k.group().name(g) + ") has wrong shape");
      }
    }
  }
}

}  // namespace

CheckReport check_matched_pair(const MatchedPair& mp) {
  validate_pair_shapes(mp);
  const HopfPiAlgebra& K = mp.k;
  const HopfPiAlgebra& H = mp.h;
  const FiniteGroup& p1 = K.group();
  const FiniteGroup& p2 = H.group();
  const Field& F = K.field;
  const int n1 = p1.size(), n2 = p2.size();
  const int e1 = p1.identity(), e2 = p2.identity();

  CheckReport rep;
  rep.merge(check_hopf_pi_algebra(K), "k:");
  rep.merge(check_hopf_pi_algebra(H), "h:");

  auto idm = [&F](int d) { return Mat::identity(d, F); };

  // Forward arrow: K is a module coalgebra over H.
  for (int g = 0; g < n1; ++g) {
    compare_columns(rep, axioms::kFwdUnit, {g}, {K.dim(g)},
                    mp.to_k[e2][g].m * kron(H.unit, idm(K.dim(g))),
                    idm(K.dim(g)), "1 -> a = a");
  }
  for (int a = 0; a < n2; ++a) {
    for (int b = 0; b < n2; ++b) {
      for (int g = 0; g < n1; ++g) {
        compare_columns(rep, axioms::kFwdAssoc, {a, b, g},
                        {H.dim(a), H.dim(b), K.dim(g)},
                        mp.to_k[p2.mul(a, b)][g].m *
                            kron(H.mult_mat(a, b), idm(K.dim(g))),
                        mp.to_k[a][g].m *
                            kron(idm(H.dim(a)), mp.to_k[b][g].m),
                        "(x y) -> a = x -> (y -> a)");
      }
    }
  }
  for (int a = 0; a < n2; ++a) {
    for (int g = 0; g < n1; ++g) {
      const int da = H.dim(a), dg = K.dim(g);
      compare_columns(
          rep, axioms::kFwdComult, {a, g}, {da, dg},
          K.comult[g] * mp.to_k[a][g].m,
          Pipeline(da * dg, F)
              .blocks({H.comult[a], K.comult[g]})
              .permute({da, da, dg, dg}, {0, 2, 1, 3})
              .blocks({mp.to_k[a][g].m, mp.to_k[a][g].m})
              .to_mat(),
          "Delta(x -> a) = (x_1 -> a_1) (x) (x_2 -> a_2)");
      compare_columns(rep, axioms::kFwdCounit, {a, g}, {da, dg},
                      K.counit[g] * mp.to_k[a][g].m,
                      kron(H.counit[a], K.counit[g]),
                      "eps(x -> a) = eps(x) eps(a)");
    }
  }

  // Backward arrow: H is a module coalgebra over K, acting from the right.
  for (int a = 0; a < n2; ++a) {
    compare_columns(rep, axioms::kBwdUnit, {a}, {H.dim(a)},
                    mp.to_h[a][e1].m * kron(idm(H.dim(a)), K.unit),
                    idm(H.dim(a)), "x <- 1 = x");
  }
  for (int a = 0; a < n2; ++a) {
    for (int g = 0; g < n1; ++g) {
      for (int d = 0; d < n1; ++d) {
        compare_columns(
            rep, axioms::kBwdAssoc, {a, g, d},
            {H.dim(a), K.dim(g), K.dim(d)},
            mp.to_h[a][p1.mul(g, d)].m *
                kron(idm(H.dim(a)), K.mult_mat(g, d)),
            mp.to_h[a][d].m * kron(mp.to_h[a][g].m, idm(K.dim(d))),
            "x <- (a b) = (x <- a) <- b");
      }
    }
  }
  for (int a = 0; a < n2; ++a) {
    for (int g = 0; g < n1; ++g) {
      const int da = H.dim(a), dg = K.dim(g);
      compare_columns(
          rep, axioms::kBwdComult, {a, g}, {da, dg},
          H.comult[a] * mp.to_h[a][g].m,
          Pipeline(da * dg, F)
              .blocks({H.comult[a], K.comult[g]})
              .permute({da, da, dg, dg}, {0, 2, 1, 3})
              .blocks({mp.to_h[a][g].m, mp.to_h[a][g].m})
              .to_mat(),
          "Delta(x <- a) = (x_1 <- a_1) (x) (x_2 <- a_2)");
      compare_columns(rep, axioms::kBwdCounit, {a, g}, {da, dg},
                      H.counit[a] * mp.to_h[a][g].m,
                      kron(H.counit[a], K.counit[g]),
                      "eps(x <- a) = eps(x) eps(a)");
    }
  }

  // Mixed laws.
  for (int a = 0; a < n2; ++a) {
    compare_columns(rep, axioms::kFwdOnUnit, {a}, {H.dim(a)},
                    mp.to_k[a][e1].m * kron(idm(H.dim(a)), K.unit),
                    K.unit * H.counit[a], "x -> 1 = eps(x) 1");
  }
  for (int g = 0; g < n1; ++g) {
    compare_columns(rep, axioms::kBwdOnUnit, {g}, {K.dim(g)},
                    mp.to_h[e2][g].m * kron(H.unit, idm(K.dim(g))),
                    H.unit * K.counit[g], "1 <- a = eps(a) 1");
  }
  for (int a = 0; a < n2; ++a) {
    for (int g = 0; g < n1; ++g) {
      for (int d = 0; d < n1; ++d) {
        const int da = H.dim(a), dg = K.dim(g), dd = K.dim(d);
        Mat lhs = mp.to_k[a][p1.mul(g, d)].m *
                  kron(idm(da), K.mult_mat(g, d));
        Mat rhs = Pipeline(da * dg * dd, F)
                      .blocks({H.comult[a], K.comult[g],
                               Pipeline::Factor::identity(dd)})
                      .permute({da, da, dg, dg, dd}, {0, 2, 1, 3, 4})
                      .blocks({mp.to_k[a][g].m, mp.to_h[a][g].m,
                               Pipeline::Factor::identity(dd)})
                      .blocks({Pipeline::Factor::identity(dg),
                               mp.to_k[a][d].m})
                      .then(K.mult_mat(g, d))
                      .to_mat();
        compare_columns(rep, axioms::kFwdOnProduct, {a, g, d}, {da, dg, dd},
                        lhs, rhs,
                        "x -> (a b) = (x_1 -> a_1) ((x_2 <- a_2) -> b)");
      }
    }
  }
  for (int a = 0; a < n2; ++a) {
    for (int b = 0; b < n2; ++b) {
      for (int g = 0; g < n1; ++g) {
        const int da = H.dim(a), db = H.dim(b), dg = K.dim(g);
        Mat lhs = mp.to_h[p2.mul(a, b)][g].m *
                  kron(H.mult_mat(a, b), idm(dg));
        Mat rhs = Pipeline(da * db * dg, F)
                      .blocks({Pipeline::Factor::identity(da), H.comult[b],
                               K.comult[g]})
                      .permute({da, db, db, dg, dg}, {0, 1, 3, 2, 4})
                      .blocks({Pipeline::Factor::identity(da),
                               mp.to_k[b][g].m, mp.to_h[b][g].m})
                      .blocks({mp.to_h[a][g].m,
                               Pipeline::Factor::identity(db)})
                      .then(H.mult_mat(a, b))
                      .to_mat();
        compare_columns(rep, axioms::kBwdOnProduct, {a, b, g}, {da, db, dg},
                        lhs, rhs,
                        "(x y) <- a = (x <- (y_1 -> a_1)) (y_2 <- a_2)");
      }
    }
  }
  for (int a = 0; a < n2; ++a) {
    for (int g = 0; g < n1; ++g) {
      const int da = H.dim(a), dg = K.dim(g);
      Mat lhs = Pipeline(da * dg, F)
                    .blocks({H.comult[a], K.comult[g]})
                    .permute({da, da, dg, dg}, {0, 2, 1, 3})
                    .blocks({mp.to_h[a][g].m, mp.to_k[a][g].m})
                    .to_mat();
      Mat rhs = Pipeline(da * dg, F)
                    .blocks({H.comult[a], K.comult[g]})
                    .permute({da, da, dg, dg}, {1, 3, 0, 2})
                    .blocks({mp.to_h[a][g].m, mp.to_k[a][g].m})
                    .to_mat();
      compare_columns(
          rep, axioms::kActionSymmetry, {a, g}, {da, dg}, lhs, rhs,
          "(x_1 <- a_1) (x) (x_2 -> a_2) = (x_2 <- a_2) (x) (x_1 -> a_1)");
    }
  }
  return rep;
}

HopfPiAlgebra bicrossed_product(const MatchedPair& mp) {
  {
    CheckReport rep = check_matched_pair(mp);
    if (!rep.pass()) {
      throw GateError("not a matched pair (" +
                      std::to_string(rep.total_failures()) +
                      " failing basis tuples)");
    }
  }
  const HopfPiAlgebra& K = mp.k;
  const HopfPiAlgebra& H = mp.h;
  const FiniteGroup& p1 = K.group();
  const FiniteGroup& p2 = H.group();
  const Field& F = K.field;
  const int n1 = p1.size(), n2 = p2.size();
  FiniteGroup prod = FiniteGroup::direct_product(p1, p2);
  auto at = [n2](int g, int a) { return g * n2 + a; };
  auto idm = [&F](int d) { return Mat::identity(d, F); };

  std::vector<int> dims(prod.size());
  for (int g = 0; g < n1; ++g)
    for (int a = 0; a < n2; ++a) dims[at(g, a)] = K.dim(g) * H.dim(a);

  HopfPiAlgebra out{GradedSpace(prod, dims), F, {}, Mat(), {}, {}, {}};
  out.mult.assign(prod.size(), std::vector<StructureTensor>());
  for (int g = 0; g < n1; ++g) {
    for (int a = 0; a < n2; ++a) {
      for (int d = 0; d < n1; ++d) {
        for (int b = 0; b < n2; ++b) {
          const int dKg = K.dim(g), dHa = H.dim(a);
          const int dKd = K.dim(d), dHb = H.dim(b);
          Mat pre = kron({idm(dKg), H.comult[a], K.comult[d], idm(dHb)});
          Mat perm = tensor_factor_permutation(
              {dKg, dHa, dHa, dKd, dKd, dHb}, {0, 1, 3, 2, 4, 5}, F);
          Mat mid = kron({idm(dKg), mp.to_k[a][d].m, mp.to_h[a][d].m,
                          idm(dHb)});
          Mat post = kron(K.mult_mat(g, d), H.mult_mat(a, b));
          out.mult[at(g, a)].push_back(StructureTensor::from_matrix(
              dims[at(g, a)], dims[at(d, b)], post * mid * perm * pre));
        }
      }
    }
  }
  out.unit = kron(K.unit, H.unit);
  for (int g = 0; g < n1; ++g) {
    for (int a = 0; a < n2; ++a) {
      out.comult.push_back(tensor_comult(K.comult[g], H.comult[a]));
      out.counit.push_back(kron(K.counit[g], H.counit[a]));
    }
  }
  out.antipode.shift = inverse_shift(prod);
  for (int g = 0; g < n1; ++g) {
    for (int a = 0; a < n2; ++a) {
      const int ig = p1.inv(g), ia = p2.inv(a);
      Mat spread = kron(K.comult[g], H.comult[a]);
      Mat s4 = kron({K.antipode_mat(g), K.antipode_mat(g),
                     H.antipode_mat(a), H.antipode_mat(a)});
      Mat perm = tensor_factor_permutation(
          {K.dim(ig), K.dim(ig), H.dim(ia), H.dim(ia)}, {3, 1, 2, 0}, F);
      out.antipode.blocks.push_back(
          kron(mp.to_k[ia][ig].m, mp.to_h[ia][ig].m) * perm * s4 * spread);
    }
  }
  return out;
}

MatchedPair brace_to_matched_pair(const HopfPiBrace& b) {
  if (!b.group().is_abelian() || !is_cocommutative(b.dot())) {
    throw GateError(
        "pairing needs a cocommutative brace over an abelian grading group");
  }
  const int n = b.group().size();
  MatchedPair mp{b.circle(), b.circle(), ActionBlocks(n), ActionBlocks(n)};
  for (int a = 0; a < n; ++a) {
    for (int g = 0; g < n; ++g) {
      mp.to_k[a].push_back(left_action(b, a, g));
      mp.to_h[a].push_back(right_action(b, a, g));
    }
  }
  return mp;
}

CheckReport check_product_recovery(const MatchedPair& mp) {
  validate_pair_shapes(mp);
  if (!(mp.k == mp.h)) {
    throw InputError("product recovery needs a self pair");
  }
  const HopfPiAlgebra& K = mp.k;
  const FiniteGroup& pi = K.group();
  if (!pi.is_abelian()) {
    throw InputError("product recovery needs an abelian grading group");
  }
  const Field& F = K.field;
  CheckReport rep;
  for (int a = 0; a < pi.size(); ++a) {
    for (int g = 0; g < pi.size(); ++g) {
      const int da = K.dim(a), dg = K.dim(g);
      Mat rhs = Pipeline(da * dg, F)
                    .blocks({K.comult[a], K.comult[g]})
                    .permute({da, da, dg, dg}, {0, 2, 1, 3})
                    .blocks({mp.to_k[a][g].m, mp.to_h[a][g].m})
                    .then(K.mult_mat(g, a))
                    .to_mat();
      compare_columns(rep, axioms::kProductRecovery, {a, g}, {da, dg},
                      K.mult_mat(a, g), rhs,
                      "a o b = (a_1 -> b_1) o (a_2 <- b_2)");
    }
  }
  return rep;
}

HopfPiBrace matched_pair_to_brace(const MatchedPair& mp) {
  {
    CheckReport rep = check_matched_pair(mp);
    if (!rep.pass()) {
      throw GateError("not a matched pair (" +
                      std::to_string(rep.total_failures()) +
                      " failing basis tuples)");
    }
  }
  if (!(mp.k == mp.h)) throw GateError("pair is not a self pair");
  {
    CheckReport rep = check_product_recovery(mp);
    if (!rep.pass()) {
      throw GateError("the pair does not recover its own product (" +
                      std::to_string(rep.total_failures()) +
                      " failing basis tuples)");
    }
  }
  const HopfPiAlgebra& C = mp.k;
  const FiniteGroup& pi = C.group();
  const Field& F = C.field;
  const int n = pi.size();
  auto idm = [&F](int d) { return Mat::identity(d, F); };

  HopfPiBrace b{C.space, F, C.comult, C.counit,
                {},      C.unit, {},
                C.mult,  C.unit, C.antipode};
  b.dot_mult.assign(n, std::vector<StructureTensor>());
  for (int a = 0; a < n; ++a) {
    const int da = C.dim(a);
    for (int g = 0; g < n; ++g) {
      Mat m = C.mult_mat(a, g) *
              kron(idm(da), mp.to_k[pi.inv(a)][g].m) *
              kron({idm(da), C.antipode_mat(a), idm(C.dim(g))}) *
              kron(C.comult[a], idm(C.dim(g)));
      b.dot_mult[a].push_back(
          StructureTensor::from_matrix(da, C.dim(g), std::move(m)));
    }
  }
  b.dot_unit = C.unit;
  b.dot_antipode.shift = inverse_shift(pi);
  for (int a = 0; a < n; ++a) {
    b.dot_antipode.blocks.push_back(mp.to_k[a][pi.inv(a)].m *
                                    kron(idm(C.dim(a)), C.antipode_mat(a)) *
                                    C.comult[a]);
  }
  return b;
}

}  // namespace hopfpi
