#include "bicoalg/smash.hpp"

#include "bicoalg/errors.hpp"

namespace bicoalg {

namespace {

LinMap columns_of(std::size_t rows, std::size_t n, const std::function<SparseVec(std::size_t)>& f) {
  std::vector<SparseVec> cols;
  cols.reserve(n);
  for (std::size_t i = 0; i < n; ++i) cols.push_back(f(i));
  return LinMap::from_columns(rows, cols);
}

LinMap permutation_matrix(const std::vector<std::size_t>& perm) {
  std::vector<SparseVec> cols;
  for (std::size_t i : perm) cols.push_back(SparseVec::unit(i));
  return LinMap::from_columns(perm.size(), cols);
}

}  // namespace

SmashCoproduct smash_coproduct(const BCCData& dd, const Bicoalgebroid& b) {
  const Coalgebra& d = dd.coalgebra;
  const std::size_t e = d.dim;
  const std::size_t n = b.n();
  Subspace s = cotensor(dd.yd.module.rho, b.lambda_L(), b.c(), "D⋊H");
  const std::size_t k = s.dim();
  const LinMap& delta = dd.yd.comodule.delta;
  LinMap sdelta = columns_of(k * k, k, [&](std::size_t i) {
    Tensor t({e, n}, s.basis()[i]);
    t = t.apply(d.delta, 0, 1, {e, e}).apply(delta, 1, 1, {n, e}).apply(b.total().delta, 3, 1, {n, n});  // (d1, m, d2, h1, h2)
    t = t.permute({0, 1, 3, 2, 4}).apply_restricted(b.mu(), 1);                                          // (d1, m h1, d2, h2)
    return t.corestrict(s, 0, 2).corestrict(s, 1, 2).data();
  });
  const LinMap eps = tensor_map(d.counit, b.total().counit);
  LinMap scounit = eps * s.inclusion();
  return {s, Coalgebra{k, sdelta, scounit, d.label + "⋊" + b.total().label}};
}

CheckReport smash_comodule_correspondence(const HComodule& x, const LinMap& delta_d, const BCCData& dd, const Bicoalgebroid& b) {
  const std::size_t e = dd.coalgebra.dim;
  const std::size_t n = b.n();
  const std::size_t m = x.dim();
  if (delta_d.rows() != e * m || delta_d.cols() != m) throw DimensionMismatch("D-coaction must be a map X -> D⊗X");
  CheckReport r;
  SmashCoproduct sc = smash_coproduct(dd, b);
  const Subspace& s = sc.space;
  const std::size_t k = s.dim();
  LinMap composite;
  try {
    composite = columns_of(k * m, m, [&](std::size_t i) {
      Tensor t({e, m}, delta_d.column(i));
      return t.apply(x.delta, 1, 1, {n, m}).corestrict(s, 0, 2).data();
    });
    r.pass("lands_in_smash", m);
  } catch (const Error& err) {
    r.fail("lands_in_smash", {0, {}, {}, err.what()});
    return r;
  }
  auto col = [&](const LinMap& f, std::size_t i, std::vector<std::size_t> shape) { return Tensor(std::move(shape), f.column(i)); };
  r.compare("counital", m, [&](std::size_t i) { return col(composite, i, {k, m}).apply(sc.coalgebra.counit, 0, 1, {}); },
            [&](std::size_t i) { return Tensor::basis({m}, i); });
  r.compare("coassociative", m,
            [&](std::size_t i) { return col(composite, i, {k, m}).apply(sc.coalgebra.delta, 0, 1, {k, k}); },
            [&](std::size_t i) { return col(composite, i, {k, m}).apply(composite, 1, 1, {k, m}); });
  r.compare("splits_to_d_coaction", m,
            [&](std::size_t i) {
              return col(composite, i, {k, m}).embed(s, 0, {e, n}).apply(b.total().counit, 1, 1, {});
            },
            [&](std::size_t i) { return col(delta_d, i, {e, m}); });
  r.compare("splits_to_h_coaction", m,
            [&](std::size_t i) {
              return col(composite, i, {k, m}).embed(s, 0, {e, n}).apply(dd.coalgebra.counit, 0, 1, {});
            },
            [&](std::size_t i) { return col(x.delta, i, {n, m}); });
  return r;
}

Bicoalgebroid scalar_extension_unchecked(const BCCData& dd, const Bicoalgebroid& b) {
  const Coalgebra& d = dd.coalgebra;
  const std::size_t e = d.dim;
  const std::size_t n = b.n();
  SmashCoproduct sc = smash_coproduct(dd, b);
  const Subspace& s = sc.space;
  const std::size_t k = s.dim();
  const RestrictedMap act = dd.yd.module.action();
  auto sv = [&](std::size_t i) { return Tensor({e, n}, s.basis()[i]); };
  LinMap alpha = columns_of(e, k, [&](std::size_t i) { return sv(i).apply(b.total().counit, 1, 1, {}).data(); });
  LinMap beta = columns_of(e, k, [&](std::size_t i) { return sv(i).apply_restricted(act, 0).data(); });
  LinMap eta = columns_of(k, e, [&](std::size_t i) {
    Tensor t = Tensor::basis({e}, i).apply(d.delta, 0, 1, {e, e}).apply(dd.augmentation, 1).apply(b.eta(), 1);
    return t.corestrict(s, 0, 2).data();
  });
  Bicoalgebroid draft(d, sc.coalgebra, alpha, beta, LinMap(k, k * k), eta, d.label + "⋊" + b.label());
  const Subspace& box = draft.cotensor();
  const LinMap eps_c_pi = b.base().counit * dd.augmentation;
  std::vector<SparseVec> values;
  values.reserve(box.dim());
  for (const auto& v : box.basis()) {
    Tensor t = Tensor({k, k}, v).embed(s, 0, {e, n}).embed(s, 2, {e, n});  // (d, h, d′, h′)
    t = t.apply(eps_c_pi, 2, 1, {}).apply_restricted(b.mu(), 1);            // (d ε(π(d′)), hh′)
    values.push_back(t.corestrict(s, 0, 2).data());
  }
  return draft.with_mu_total(extend_from_basis(box, k, values));
}

Bicoalgebroid scalar_extension(const BCCData& dd, const Bicoalgebroid& b) {
  CheckReport pre = verify_bcc(dd, b);
  if (!pre.passed()) {
    std::string names;
    for (const auto& f : pre.failed_names()) names += (names.empty() ? "" : ", ") + f;
    throw BCCViolation("input is not a braided cocommutative coalgebra; failing checks: " + names);
  }
  return scalar_extension_unchecked(dd, b);
}

CheckReport compare_bicoalgebroids(const Bicoalgebroid& b1, const Bicoalgebroid& b2, const std::vector<std::size_t>& total_perm,
                                   const std::vector<std::size_t>& base_perm) {
  const std::size_t n = b1.n();
  const std::size_t c = b1.c();
  if (b2.n() != n || b2.c() != c || total_perm.size() != n || base_perm.size() != c) {
    throw DimensionMismatch("bicoalgebroids of different dimensions cannot be compared");
  }
  const LinMap p = permutation_matrix(total_perm);
  const LinMap q = permutation_matrix(base_perm);
  CheckReport r;
  auto h = [&](std::size_t i) { return Tensor::basis({n}, i); };
  auto cb = [&](std::size_t i) { return Tensor::basis({c}, i); };
  r.compare("delta", n, [&](std::size_t i) { return h(i).apply(b1.total().delta, 0, 1, {n, n}).apply(p, 0).apply(p, 1); },
            [&](std::size_t i) { return h(i).apply(p, 0).apply(b2.total().delta, 0, 1, {n, n}); });
  r.compare("counit", n, [&](std::size_t i) { return h(i).apply(b1.total().counit, 0, 1, {}); },
            [&](std::size_t i) { return h(i).apply(p, 0).apply(b2.total().counit, 0, 1, {}); });
  r.compare("alpha", n, [&](std::size_t i) { return h(i).apply(b1.alpha(), 0).apply(q, 0); },
            [&](std::size_t i) { return h(i).apply(p, 0).apply(b2.alpha(), 0); });
  r.compare("beta", n, [&](std::size_t i) { return h(i).apply(b1.beta(), 0).apply(q, 0); },
            [&](std::size_t i) { return h(i).apply(p, 0).apply(b2.beta(), 0); });
  r.compare("eta", c, [&](std::size_t i) { return cb(i).apply(b1.eta(), 0).apply(p, 0); },
            [&](std::size_t i) { return cb(i).apply(q, 0).apply(b2.eta(), 0); });
  r.compare("base_delta", c, [&](std::size_t i) { return cb(i).apply(b1.base().delta, 0, 1, {c, c}).apply(q, 0).apply(q, 1); },
            [&](std::size_t i) { return cb(i).apply(q, 0).apply(b2.base().delta, 0, 1, {c, c}); });
  r.compare("base_counit", c, [&](std::size_t i) { return cb(i).apply(b1.base().counit, 0, 1, {}); },
            [&](std::size_t i) { return cb(i).apply(q, 0).apply(b2.base().counit, 0, 1, {}); });
  const Subspace& box = b1.cotensor();
  r.compare("mu", box.dim(), [&](std::size_t k) { return Tensor({n, n}, box.basis()[k]).apply_restricted(b1.mu(), 0).apply(p, 0); },
            [&](std::size_t k) { return Tensor({n, n}, box.basis()[k]).apply(p, 0).apply(p, 1).apply_restricted(b2.mu(), 0); });
  return r;
}

}  // namespace bicoalg
