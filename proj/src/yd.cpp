#include "bicoalg/yd.hpp"

#include "bicoalg/errors.hpp"

namespace bicoalg {

namespace {

Tensor col(const LinMap& f, std::size_t i, std::vector<std::size_t> shape) { return Tensor(std::move(shape), f.column(i)); }

LinMap from_cols(std::size_t rows, std::size_t n, const std::function<SparseVec(std::size_t)>& f) {
  std::vector<SparseVec> cols;
  cols.reserve(n);
  for (std::size_t i = 0; i < n; ++i) cols.push_back(f(i));
  return LinMap::from_columns(rows, cols);
}


}  // namespace

RestrictedMap RightHModule::action() const {
  return {"action[" + label + "]", action_total, domain, {dim, action_total.cols() / std::max<std::size_t>(dim, 1)}};
}

RightHModule make_right_module(std::size_t dim, LinMap rho, LinMap action_total, const Bicoalgebroid& b, std::string label) {
  if (action_total.rows() != dim || action_total.cols() != dim * b.n()) throw DimensionMismatch("action must be a map X⊗H -> X");
  auto dom = std::make_shared<const Subspace>(cotensor(rho, b.lambda_L(), b.c(), label + "⊠H"));
  return {dim, std::move(rho), std::move(action_total), std::move(dom), std::move(label)};
}

CheckReport verify_right_module(const RightHModule& x, const Bicoalgebroid& b) {
  const std::size_t d = x.dim;
  const std::size_t n = b.n();
  const std::size_t c = b.c();
  const RestrictedMap act = x.action();
  CheckReport r = verify_right_comodule(x.rho, b.base(), "rho");
  auto dv = [&](std::size_t k) { return Tensor({d, n}, x.domain->basis()[k]); };
  const std::size_t dd = x.domain->dim();
  r.compare("action_right_colinear", dd, [&](std::size_t k) { return dv(k).apply_restricted(act, 0).apply(x.rho, 0, 1, {d, c}); },
            [&](std::size_t k) { return dv(k).apply(b.rho_L(), 1, 1, {n, c}).apply_restricted(act, 0); });
  std::vector<SparseVec> triple = triple_cotensor(*x.domain, d, n, n, b.rho_L(), b.lambda_L(), c);
  auto tv = [&](std::size_t k) { return Tensor({d, n, n}, triple[k]); };
  r.compare("action_associative", triple.size(),
            [&](std::size_t k) { return tv(k).apply_restricted(act, 0).apply_restricted(act, 0); },
            [&](std::size_t k) { return tv(k).apply_restricted(b.mu(), 1).apply_restricted(act, 0); });
  r.compare("action_unital", d,
            [&](std::size_t i) { return col(x.rho, i, {d, c}).apply(b.eta(), 1).apply_restricted(act, 0); },
            [&](std::size_t i) { return Tensor::basis({d}, i); });
  return r;
}

LinMap induced_left_coaction(const RightHModule& x, const Bicoalgebroid& b) {
  const std::size_t d = x.dim;
  const std::size_t n = b.n();
  const std::size_t c = b.c();
  const RestrictedMap act = x.action();
  return from_cols(c * d, d, [&](std::size_t i) {
    Tensor t = col(x.rho, i, {d, c}).apply(b.eta(), 1).apply(b.total().delta, 1, 1, {n, n}).apply(b.beta(), 2);
    return t.apply_restricted(act, 0).swap(0).data();
  });
}

CheckReport check_induced_coaction(const RightHModule& x, const Bicoalgebroid& b) {
  const std::size_t d = x.dim;
  const std::size_t n = b.n();
  const std::size_t c = b.c();
  CheckReport r;
  LinMap tau;
  try {
    tau = induced_left_coaction(x, b);
  } catch (const Error& e) {
    r.fail("induced_coaction_defined", {0, {}, {}, e.what()});
    return r;
  }
  Bicomodule bm{d, b.base(), tau, x.rho, x.label};
  r.merge(verify_bicomodule(bm), "induced");
  const RestrictedMap act = x.action();
  auto dv = [&](std::size_t k) { return Tensor({d, n}, x.domain->basis()[k]); };
  r.compare("action_left_colinear", x.domain->dim(),
            [&](std::size_t k) { return dv(k).apply_restricted(act, 0).apply(tau, 0, 1, {c, d}); },
            [&](std::size_t k) {
              return dv(k).apply(b.lambda_R(), 1, 1, {c, n}).permute({0, 2, 1}).apply_restricted(act, 0).swap(0);
            });
  try {
    const Subspace& s = *x.domain;
    LinMap lam = from_cols(c * s.dim(), s.dim(), [&](std::size_t k) { return dv(k).apply(tau, 0, 1, {c, d}).corestrict(s, 1, 2).data(); });
    LinMap rho = from_cols(s.dim() * c, s.dim(), [&](std::size_t k) { return dv(k).apply(b.rho_R(), 1, 1, {n, c}).corestrict(s, 0, 2).data(); });
    LinMap f = from_cols(d, s.dim(), [&](std::size_t k) { return dv(k).apply_restricted(act, 0).data(); });
    factor_through_cocenter(f, Bicomodule{s.dim(), b.base(), lam, rho, s.label()});
    r.pass("action_factors_through_cocenter", s.dim());
  } catch (const CocenterObstruction& e) {
    r.fail("action_factors_through_cocenter", {e.basis_index(), {}, {}, e.witness()});
  } catch (const Error& e) {
    r.fail("action_factors_through_cocenter", {0, {}, {}, e.what()});
  }
  return r;
}

YDModule make_yd(HComodule comodule, LinMap action_total, const Bicoalgebroid& b) {
  RightHModule m = make_right_module(comodule.dim(), comodule.module.rho, std::move(action_total), b, comodule.label);
  return {std::move(comodule), std::move(m)};
}

CheckReport verify_yd_condition(const YDModule& z, const Bicoalgebroid& b) {
  const std::size_t d = z.dim();
  const std::size_t n = b.n();
  const RestrictedMap act = z.module.action();
  const LinMap& delta = z.comodule.delta;
  const LinMap& dh = b.total().delta;
  CheckReport r;
  auto dv = [&](std::size_t k) { return Tensor({d, n}, z.module.domain->basis()[k]); };
  r.compare("yd_condition", z.module.domain->dim(),
            [&](std::size_t k) {
              Tensor t = dv(k).apply(delta, 0, 1, {n, d}).apply(dh, 2, 1, {n, n});  // (z-1, z0, h1, h2)
              return t.permute({0, 2, 1, 3}).apply_restricted(b.mu(), 0).apply_restricted(act, 1);
            },
            [&](std::size_t k) {
              Tensor t = dv(k).apply(dh, 1, 1, {n, n}).apply_restricted(act, 0);  // (z◁h1, h2)
              t = t.apply(delta, 0, 1, {n, d});                                    // (w-1, w0, h2)
              return t.permute({2, 0, 1}).apply_restricted(b.mu(), 0);
            });
  return r;
}

CheckReport verify_yd(const YDModule& z, const Bicoalgebroid& b) {
  CheckReport r;
  r.merge(verify_right_module(z.module, b), "module");
  r.merge(verify_h_comodule(z.comodule, b), "comodule");
  r.merge(verify_yd_condition(z, b));
  return r;
}

YDTensor yd_tensor(const YDModule& z, const YDModule& zp, const Bicoalgebroid& b) {
  const std::size_t n = b.n();
  HComoduleTensor ht = h_comodule_tensor(z.comodule, zp.comodule, b);
  const Subspace& s = ht.space;
  const std::size_t td = s.dim();
  auto dom = std::make_shared<const Subspace>(cotensor(ht.object.module.rho, b.lambda_L(), b.c()));
  const RestrictedMap a1 = z.module.action();
  const RestrictedMap a2 = zp.module.action();
  std::vector<SparseVec> values;
  values.reserve(dom->dim());
  for (const auto& v : dom->basis()) {
    Tensor t = Tensor({td, n}, v).embed(s, 0, {z.dim(), zp.dim()}).apply(b.total().delta, 2, 1, {n, n});  // (z, z', h1, h2)
    t = t.permute({0, 3, 1, 2}).apply_restricted(a1, 0).apply_restricted(a2, 1);
    values.push_back(t.corestrict(s, 0, 2).data());
  }
  LinMap total = extend_from_basis(*dom, td, values);
  RightHModule m{td, ht.object.module.rho, total, dom, ht.object.label};
  return {s, YDModule{ht.object, m}};
}

YDModule yd_unit(const Bicoalgebroid& b) {
  const std::size_t c = b.c();
  LinMap act = tensor_map(b.base().counit, b.beta());
  LinMap delta = tensor_map(b.eta(), LinMap::identity(c)) * b.base().delta;
  return make_yd(HComodule{Bicomodule::regular(b.base()), delta, "C"}, act, b);
}

Tensor braid_legs(const Tensor& t, std::size_t leg, const YDModule& z, const HComodule& x, const Bicoalgebroid& b) {
  const std::size_t n = b.n();
  Tensor u = t.apply(x.delta, leg + 1, 1, {n, x.dim()});  // (.., z, h, x, ..)
  std::vector<std::size_t> perm(u.legs());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
  perm[leg] = leg + 2;
  perm[leg + 1] = leg;
  perm[leg + 2] = leg + 1;
  return u.permute(perm).apply_restricted(z.module.action(), leg + 1);
}

LinMap theta_component(const YDModule& z, const HComodule& x, const Bicoalgebroid& b) {
  Subspace src = cotensor(z.module.rho, x.module.lambda, b.c());
  Subspace dst = cotensor(x.module.rho, z.comodule.module.lambda, b.c());
  return from_cols(dst.dim(), src.dim(), [&](std::size_t k) {
    return braid_legs(Tensor({z.dim(), x.dim()}, src.basis()[k]), 0, z, x, b).corestrict(dst, 0, 2).data();
  });
}

LinMap prebraiding(const YDModule& z, const YDModule& zp, const Bicoalgebroid& b) { return theta_component(z, zp.comodule, b); }

CheckReport check_prebraiding_morphism(const YDModule& z, const YDModule& zp, const Bicoalgebroid& b) {
  const std::size_t n = b.n();
  CheckReport r;
  YDTensor t1 = yd_tensor(z, zp, b);
  YDTensor t2 = yd_tensor(zp, z, b);
  LinMap tau;
  try {
    tau = prebraiding(z, zp, b);
  } catch (const Error& e) {
    r.fail("prebraiding_defined", {0, {}, {}, e.what()});
    return r;
  }
  r.pass("prebraiding_defined", tau.cols());
  const std::size_t d1 = t1.object.dim();
  const std::size_t d2 = t2.object.dim();
  const RestrictedMap a1 = t1.object.module.action();
  const RestrictedMap a2 = t2.object.module.action();
  auto dv = [&](std::size_t k) { return Tensor({d1, n}, t1.object.module.domain->basis()[k]); };
  r.compare("prebraiding_module_map", t1.object.module.domain->dim(),
            [&](std::size_t k) { return dv(k).apply_restricted(a1, 0).apply(tau, 0); },
            [&](std::size_t k) { return dv(k).apply(tau, 0).apply_restricted(a2, 0); });
  r.compare("prebraiding_comodule_map", d1,
            [&](std::size_t i) { return Tensor::basis({d1}, i).apply(tau, 0).apply(t2.object.comodule.delta, 0, 1, {n, d2}); },
            [&](std::size_t i) { return col(t1.object.comodule.delta, i, {n, d1}).apply(tau, 1); });
  return r;
}

CheckReport yang_baxter_check(const YDModule& z, const YDModule& zp, const YDModule& zpp, const Bicoalgebroid& b) {
  const std::size_t c = b.c();
  Subspace s12 = cotensor(z.module.rho, zp.comodule.module.lambda, c);
  std::vector<SparseVec> triple = triple_cotensor(s12, z.dim(), zp.dim(), zpp.dim(), zp.module.rho, zpp.comodule.module.lambda, c);
  auto tv = [&](std::size_t k) { return Tensor({z.dim(), zp.dim(), zpp.dim()}, triple[k]); };
  CheckReport r;
  r.compare("yang_baxter", triple.size(),
            [&](std::size_t k) {
              Tensor t = braid_legs(tv(k), 0, z, zp.comodule, b);  // (z', z, z'')
              t = braid_legs(t, 1, z, zpp.comodule, b);             // (z', z'', z)
              return braid_legs(t, 0, zp, zpp.comodule, b);         // (z'', z', z)
            },
            [&](std::size_t k) {
              Tensor t = braid_legs(tv(k), 1, zp, zpp.comodule, b);  // (z, z'', z')
              t = braid_legs(t, 0, z, zpp.comodule, b);              // (z'', z, z')
              return braid_legs(t, 1, z, zp.comodule, b);            // (z'', z', z)
            });
  return r;
}

namespace {

// θ_{X⊠Y} = (X⊠θ_Y)∘(θ_X⊠Y), evaluated in the ambient X ⊗ Y ⊗ Z.
void hexagon(CheckReport& r, const std::string& name, const YDModule& z, const HComodule& x, const HComodule& y,
             const Bicoalgebroid& b) {
  HComoduleTensor xy = h_comodule_tensor(x, y, b);
  Subspace src = cotensor(z.module.rho, xy.object.module.lambda, b.c());
  auto v = [&](std::size_t k) { return Tensor({z.dim(), xy.object.dim()}, src.basis()[k]); };
  r.compare(name, src.dim(),
            [&](std::size_t k) { return braid_legs(v(k), 0, z, xy.object, b).embed(xy.space, 0, {x.dim(), y.dim()}); },
            [&](std::size_t k) {
              Tensor t = v(k).embed(xy.space, 1, {x.dim(), y.dim()});
              return braid_legs(braid_legs(t, 0, z, x, b), 1, z, y, b);
            });
}

}  // namespace

CheckReport hexagon_check(const YDModule& z, const YDModule& zp, const YDModule& zpp, const Bicoalgebroid& b) {
  CheckReport r;
  hexagon(r, "hexagon", z, zp.comodule, zpp.comodule, b);
  return r;
}

CheckReport check_center_embedding(const YDModule& z, const std::vector<HComodule>& objects,
                                   const std::vector<HComoduleMorphism>& morphisms, const Bicoalgebroid& b) {
  const std::size_t c = b.c();
  const std::size_t d = z.dim();
  CheckReport r;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const std::string tag = "[" + objects[i].label + "]";
    try {
      LinMap th = theta_component(z, objects[i], b);
      r.pass("theta_defined" + tag, th.cols());
    } catch (const Error& e) {
      r.fail("theta_defined" + tag, {0, {}, {}, e.what()});
    }
    for (std::size_t j = 0; j < objects.size(); ++j) {
      hexagon(r, "theta_tensor[" + objects[i].label + "," + objects[j].label + "]", z, objects[i], objects[j], b);
    }
  }
  HComodule unit = unit_h_comodule(b);
  r.compare("theta_unit", d, [&](std::size_t i) { return braid_legs(col(z.module.rho, i, {d, c}), 0, z, unit, b); },
            [&](std::size_t i) { return col(z.comodule.module.lambda, i, {c, d}); });
  for (const auto& m : morphisms) {
    const HComodule& x = objects.at(m.from);
    const HComodule& y = objects.at(m.to);
    Subspace src = cotensor(z.module.rho, x.module.lambda, c);
    auto v = [&](std::size_t k) { return Tensor({d, x.dim()}, src.basis()[k]); };
    r.compare("theta_natural[" + x.label + "->" + y.label + "]", src.dim(),
              [&](std::size_t k) { return braid_legs(v(k), 0, z, x, b).apply(m.map, 0); },
              [&](std::size_t k) { return braid_legs(v(k).apply(m.map, 1), 0, z, y, b); });
  }
  return r;
}

RestrictedMap LeftYDModule::action() const {
  const std::size_t d = dim();
  return {"left_action[" + comodule.label + "]", action_total, domain, {action_total.cols() / std::max<std::size_t>(d, 1), d}};
}

LeftYDModule make_left_yd(HComodule comodule, LinMap action_total, const Bicoalgebroid& b) {
  const std::size_t d = comodule.dim();
  if (action_total.rows() != d || action_total.cols() != b.n() * d) throw DimensionMismatch("left action must be a map H⊗Z -> Z");
  auto dom = std::make_shared<const Subspace>(cotensor(b.rho_L(), comodule.module.lambda, b.c(), "H⊠" + comodule.label));
  return {std::move(comodule), std::move(action_total), std::move(dom)};
}

CheckReport verify_left_yd(const LeftYDModule& z, const Bicoalgebroid& b) {
  const std::size_t d = z.dim();
  const std::size_t n = b.n();
  const std::size_t c = b.c();
  const RestrictedMap act = z.action();
  const LinMap& delta = z.comodule.delta;
  const LinMap& dh = b.total().delta;
  CheckReport r;
  r.merge(verify_h_comodule(z.comodule, b), "comodule");
  auto dv = [&](std::size_t k) { return Tensor({n, d}, z.domain->basis()[k]); };
  const std::size_t dd = z.domain->dim();
  r.compare("action_left_colinear", dd,
            [&](std::size_t k) { return dv(k).apply_restricted(act, 0).apply(z.comodule.module.lambda, 0, 1, {c, d}); },
            [&](std::size_t k) { return dv(k).apply(b.lambda_L(), 0, 1, {c, n}).apply_restricted(act, 1); });
  Subspace hh = b.cotensor();
  std::vector<SparseVec> triple = triple_cotensor(hh, n, n, d, b.rho_L(), z.comodule.module.lambda, c);
  auto tv = [&](std::size_t k) { return Tensor({n, n, d}, triple[k]); };
  r.compare("action_associative", triple.size(),
            [&](std::size_t k) { return tv(k).apply_restricted(act, 1).apply_restricted(act, 0); },
            [&](std::size_t k) { return tv(k).apply_restricted(b.mu(), 0).apply_restricted(act, 0); });
  r.compare("action_unital", d,
            [&](std::size_t i) { return col(z.comodule.module.lambda, i, {c, d}).apply(b.eta(), 0).apply_restricted(act, 0); },
            [&](std::size_t i) { return Tensor::basis({d}, i); });
  r.compare("yd_condition", dd,
            [&](std::size_t k) {
              Tensor t = dv(k).apply(dh, 0, 1, {n, n}).apply(delta, 2, 1, {n, d});  // (h1, h2, z-1, z0)
              return t.permute({0, 2, 1, 3}).apply_restricted(b.mu(), 0).apply_restricted(act, 1);
            },
            [&](std::size_t k) {
              Tensor t = dv(k).apply(dh, 0, 1, {n, n}).permute({0, 2, 1}).apply_restricted(act, 0);  // (h1▷z, h2)
              t = t.apply(delta, 0, 1, {n, d});                                                       // (w-1, w0, h2)
              return t.permute({0, 2, 1}).apply_restricted(b.mu(), 0);
            });
  return r;
}

LinMap kappa_prebraiding(const LeftYDModule& zp, const LeftYDModule& z, const Bicoalgebroid& b) {
  const std::size_t n = b.n();
  Subspace src = cotensor(zp.comodule.module.rho, z.comodule.module.lambda, b.c());
  const RestrictedMap act = z.action();
  return from_cols(z.dim() * zp.dim(), src.dim(), [&](std::size_t k) {
    Tensor t = Tensor({zp.dim(), z.dim()}, src.basis()[k]).apply(zp.comodule.delta, 0, 1, {n, zp.dim()});  // (h, z'0, z)
    return t.permute({0, 2, 1}).apply_restricted(act, 0).data();
  });
}

BCCData make_bcc(Coalgebra d, LinMap augmentation, LinMap action_total, LinMap delta, const Bicoalgebroid& b, std::string label) {
  const std::size_t e = d.dim;
  LinMap lambda = tensor_map(augmentation, LinMap::identity(e)) * d.delta;
  LinMap rho = tensor_map(LinMap::identity(e), augmentation) * d.delta;
  HComodule comod{Bicomodule{e, b.base(), lambda, rho, label}, std::move(delta), label};
  YDModule yd = make_yd(std::move(comod), std::move(action_total), b);
  return {std::move(d), std::move(augmentation), std::move(yd)};
}

CheckReport verify_bcc(const BCCData& dd, const Bicoalgebroid& b) {
  const Coalgebra& d = dd.coalgebra;
  const std::size_t e = d.dim;
  const std::size_t n = b.n();
  const std::size_t c = b.c();
  const YDModule& z = dd.yd;
  const RestrictedMap act = z.module.action();
  const LinMap& delta = z.comodule.delta;
  CheckReport r;
  r.merge(verify_coalgebra(d), "coalgebra");
  r.merge(verify_coalgebra_map(dd.augmentation, d, b.base()), "augmentation");
  LinMap lambda = tensor_map(dd.augmentation, LinMap::identity(e)) * d.delta;
  LinMap rho = tensor_map(LinMap::identity(e), dd.augmentation) * d.delta;
  if (lambda == z.comodule.module.lambda && rho == z.comodule.module.rho) {
    r.pass("coactions_induced", e);
  } else {
    r.fail("coactions_induced", {0, {}, {}, "C-coactions differ from the augmentation-induced ones"});
  }
  r.merge(verify_yd(z, b), "yd");
  auto dv = [&](std::size_t k) { return Tensor({e, n}, z.module.domain->basis()[k]); };
  const std::size_t dom = z.module.domain->dim();
  r.compare("module_coalgebra", dom, [&](std::size_t k) { return dv(k).apply_restricted(act, 0).apply(d.delta, 0, 1, {e, e}); },
            [&](std::size_t k) {
              Tensor t = dv(k).apply(d.delta, 0, 1, {e, e}).apply(b.total().delta, 2, 1, {n, n});  // (d1, d2, h1, h2)
              return t.permute({0, 2, 1, 3}).apply_restricted(act, 0).apply_restricted(act, 1);
            });
  r.compare("module_counital", dom, [&](std::size_t k) { return dv(k).apply_restricted(act, 0).apply(d.counit, 0, 1, {}); },
            [&](std::size_t k) { return dv(k).apply(d.counit, 0, 1, {}).apply(b.total().counit, 0, 1, {}); });
  auto db = [&](std::size_t i) { return Tensor::basis({e}, i); };
  r.compare("comodule_coalgebra", e, [&](std::size_t i) { return db(i).apply(delta, 0, 1, {n, e}).apply(d.delta, 1, 1, {e, e}); },
            [&](std::size_t i) {
              Tensor t = db(i).apply(d.delta, 0, 1, {e, e}).apply(delta, 0, 1, {n, e}).apply(delta, 2, 1, {n, e});
              return t.permute({0, 2, 1, 3}).apply_restricted(b.mu(), 0);
            });
  r.compare("comodule_counital", e, [&](std::size_t i) { return db(i).apply(delta, 0, 1, {n, e}).apply(dd.augmentation, 1); },
            [&](std::size_t i) { return db(i).apply(dd.augmentation, 0).apply(b.base().delta, 0, 1, {c, c}).apply(b.eta(), 0); });
  r.compare("braided_cocommutative", e, [&](std::size_t i) { return db(i).apply(d.delta, 0, 1, {e, e}); },
            [&](std::size_t i) {
              Tensor t = db(i).apply(d.delta, 0, 1, {e, e}).apply(delta, 1, 1, {n, e});  // (d1, h, d2_0)
              return t.permute({2, 0, 1}).apply_restricted(act, 1);
            });
  return r;
}

YDModule with_random_action_extension(const YDModule& z, std::mt19937_64& rng) {
  YDModule out = z;
  out.module.action_total = random_extension(z.module.action_total, *z.module.domain, rng);
  return out;
}

}  // namespace bicoalg
