#include "bicoalg/comonadics.hpp"

#include <functional>
#include <numeric>
#include <optional>

#include "bicoalg/errors.hpp"

namespace bicoalg {

// Diagrams are compared on ambient tensors (H or D legs next to the object
// legs); subspaces are only built where membership is itself the claim.

namespace {

LinMap columns_of(std::size_t rows, std::size_t n, const std::function<SparseVec(std::size_t)>& f) {
  std::vector<SparseVec> cols;
  cols.reserve(n);
  for (std::size_t i = 0; i < n; ++i) cols.push_back(f(i));
  return LinMap::from_columns(rows, cols);
}

Tensor col(const LinMap& f, std::size_t i, std::vector<std::size_t> shape) { return Tensor(std::move(shape), f.column(i)); }

std::string tag(const std::string& a) { return "[" + a + "]"; }
std::string tag(const std::string& a, const std::string& b) { return "[" + a + "," + b + "]"; }

// Runs `body`; a library error becomes a failed check named `name`.
void guarded(CheckReport& r, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const DimensionMismatch&) {
    throw;
  } catch (const Error& e) {
    r.fail(name, {0, {}, {}, e.what()});
  }
}

// Moves leg `from` to position `to`, keeping the order of the others.
Tensor move_leg(const Tensor& t, std::size_t from, std::size_t to) {
  std::vector<std::size_t> order(t.legs());
  std::iota(order.begin(), order.end(), 0);
  order.erase(order.begin() + static_cast<std::ptrdiff_t>(from));
  order.insert(order.begin() + static_cast<std::ptrdiff_t>(to), from);
  return t.permute(order);
}

// An object seen through its ambient legs, with its H-coaction inserting one
// H leg in front of them.
struct Legs {
  std::vector<std::size_t> shape;
  std::function<Tensor(const Tensor&, std::size_t)> coact;
};

Legs plain(const HComodule& x, std::size_t n) {
  const LinMap delta = x.delta;
  const std::size_t d = x.dim();
  return {{d}, [delta, n, d](const Tensor& t, std::size_t first) { return t.apply(delta, first, 1, {n, d}); }};
}

std::vector<std::size_t> concat(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// κ on ambient legs (h, x…, h′, y…) -> (hh′, x…, y…).
Tensor kappa_amb(const Bicoalgebroid& b, const Tensor& t, std::size_t xlegs) {
  return move_leg(t, 1 + xlegs, 1).apply_restricted(b.mu(), 0);
}

struct BObj {
  Bicomodule x;
  GObject g;
};

}  // namespace

GObject bicomonad_image(const Bicoalgebroid& b, const Bicomodule& x) {
  const std::size_t n = b.n();
  const std::size_t c = b.c();
  Subspace s = h_box_ce(b, x);
  const std::size_t k = s.dim();
  LinMap lambda = columns_of(c * k, k, [&](std::size_t i) {
    return Tensor({n, x.dim}, s.basis()[i]).apply(b.lambda_L(), 0, 1, {c, n}).corestrict(s, 1, 2).data();
  });
  LinMap rho = columns_of(k * c, k, [&](std::size_t i) {
    return Tensor({n, x.dim}, s.basis()[i]).apply(b.rho_L(), 0, 1, {n, c}).permute({0, 2, 1}).corestrict(s, 0, 2).data();
  });
  return {s, Bicomodule{k, b.base(), lambda, rho, "G(" + x.label + ")"}};
}

CheckReport verify_bicomonad(const Bicoalgebroid& b, const std::vector<Bicomodule>& objects, const std::vector<HComodule>& comodules) {
  const std::size_t n = b.n();
  const std::size_t c = b.c();
  const LinMap& dh = b.total().delta;
  const LinMap& eh = b.total().counit;
  CheckReport r;

  // ξ(c) = η(c)₁ ⊗ α(η(c)₂), ambient (h, c)
  const LinMap xi = columns_of(n * c, c, [&](std::size_t i) {
    return Tensor::basis({c}, i).apply(b.eta(), 0).apply(dh, 0, 1, {n, n}).apply(b.alpha(), 1).data();
  });
  auto xi_col = [&](std::size_t i) { return col(xi, i, {n, c}); };
  guarded(r, "xi_lands_in_GC", [&] {
    GObject gc = bicomonad_image(b, Bicomodule::regular(b.base()));
    for (std::size_t i = 0; i < c; ++i) xi_col(i).corestrict(gc.space, 0, 2);
    r.pass("xi_lands_in_GC", c);
  });
  r.compare("b_delta_xi", c, [&](std::size_t i) { return xi_col(i).apply(dh, 0, 1, {n, n}); },
            [&](std::size_t i) { return xi_col(i).apply(xi, 1, 1, {n, c}); });
  r.compare("d_eps_xi", c, [&](std::size_t i) { return xi_col(i).apply(eh, 0, 1, {}); },
            [&](std::size_t i) { return Tensor::basis({c}, i); });
  r.compare("lifted_unit_agrees", c, xi_col, [&](std::size_t i) { return col(unit_h_comodule(b).delta, i, {n, c}); });

  std::vector<std::optional<BObj>> objs(objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const Bicomodule& x = objects[i];
    const std::string t = tag(x.label);
    guarded(r, "G_defined" + t, [&] {
      objs[i] = BObj{x, bicomonad_image(b, x)};
      const Subspace& s = objs[i]->g.space;
      auto v = [&](std::size_t k) { return Tensor({n, x.dim}, s.basis()[k]); };
      auto dv = [&](std::size_t k) { return v(k).apply(dh, 0, 1, {n, n}); };
      guarded(r, "delta_lands_in_GG" + t, [&] {
        GObject gg = bicomonad_image(b, objs[i]->g.module);
        for (std::size_t k = 0; k < s.dim(); ++k) dv(k).corestrict(s, 1, 2).corestrict(gg.space, 0, 2);
        r.pass("delta_lands_in_GG" + t, s.dim());
      });
      r.compare("comonad_counit_left" + t, s.dim(), [&](std::size_t k) { return dv(k).apply(eh, 0, 1, {}); }, v);
      r.compare("comonad_counit_right" + t, s.dim(), [&](std::size_t k) { return dv(k).apply(eh, 1, 1, {}); }, v);
      r.compare("comonad_coassociative" + t, s.dim(), [&](std::size_t k) { return dv(k).apply(dh, 0, 1, {n, n}); },
                [&](std::size_t k) { return dv(k).apply(dh, 1, 1, {n, n}); });
    });
  }

  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (!objs[i]) continue;
    const BObj& x = *objs[i];
    const std::size_t xd = x.x.dim;
    const std::size_t k = x.g.space.dim();
    const std::string tx = tag(x.x.label);
    auto v = [&](std::size_t j) { return Tensor({n, xd}, x.g.space.basis()[j]); };
    // κ_{C,X}∘(ξ ⊠ GX)∘λ_{GX} and its mirror recover GX after ε_C.
    r.compare("kappa_left_unit" + tx, k,
              [&](std::size_t j) {
                Tensor s = col(x.g.module.lambda, j, {c, k}).embed(x.g.space, 1, {n, xd}).apply(xi, 0, 1, {n, c});  // (h, c, h′, x)
                return kappa_amb(b, s, 1).apply(b.base().counit, 1, 1, {});
              },
              v);
    r.compare("kappa_right_unit" + tx, k,
              [&](std::size_t j) {
                Tensor s = col(x.g.module.rho, j, {k, c}).embed(x.g.space, 0, {n, xd}).apply(xi, 2, 1, {n, c});  // (h, x, h′, c)
                return kappa_amb(b, s, 1).apply(b.base().counit, 2, 1, {});
              },
              v);
    for (std::size_t jj = 0; jj < objects.size(); ++jj) {
      if (!objs[jj]) continue;
      const BObj& y = *objs[jj];
      const std::size_t yd = y.x.dim;
      const std::string txy = tag(x.x.label, y.x.label);
      guarded(r, "kappa_defined" + txy, [&] {
        Subspace p = cotensor(x.g.module.rho, y.g.module.lambda, c, "GX⊠GY");
        auto pv = [&](std::size_t j) {
          return Tensor({k, y.g.space.dim()}, p.basis()[j]).embed(x.g.space, 0, {n, xd}).embed(y.g.space, 2, {n, yd});  // (h, x, h′, y)
        };
        auto kv = [&](std::size_t j) { return kappa_amb(b, pv(j), 1); };  // (hh′, x, y)
        guarded(r, "kappa_lands_in_GXY" + txy, [&] {
          CotensorBicomodule xy = cotensor_bicomodule(x.x, y.x);
          Subspace gxy = h_box_ce(b, xy.module);
          for (std::size_t j = 0; j < p.dim(); ++j) kv(j).corestrict(xy.space, 1, 2).corestrict(gxy, 0, 2);
          r.pass("kappa_lands_in_GXY" + txy, p.dim());
        });
        // (a) δ_{X⊠Y}∘κ = G(κ)∘κ_{GX,GY}∘(δ_X ⊠ δ_Y) on legs (h, h′, x, y)
        r.compare("a_delta_kappa" + txy, p.dim(), [&](std::size_t j) { return kv(j).apply(dh, 0, 1, {n, n}); },
                  [&](std::size_t j) {
                    Tensor s = pv(j).apply(dh, 2, 1, {n, n}).apply(dh, 0, 1, {n, n});  // (h1, h2, x, h′1, h′2, y)
                    s = move_leg(s, 3, 1).apply_restricted(b.mu(), 0);                  // (h1h′1, h2, x, h′2, y)
                    return move_leg(s, 3, 2).apply_restricted(b.mu(), 1);              // (h1h′1, h2h′2, x, y)
                  });
        // (c) ε_{X⊠Y}∘κ = ε_X ⊠ ε_Y
        r.compare("c_eps_kappa" + txy, p.dim(), [&](std::size_t j) { return kv(j).apply(eh, 0, 1, {}); },
                  [&](std::size_t j) { return pv(j).apply(eh, 2, 1, {}).apply(eh, 0, 1, {}); });
        for (std::size_t l = 0; l < objects.size(); ++l) {
          if (!objs[l]) continue;
          const BObj& z = *objs[l];
          const std::string name = "kappa_associative[" + x.x.label + "," + y.x.label + "," + z.x.label + "]";
          guarded(r, name, [&] {
            std::vector<SparseVec> triple =
                triple_cotensor(p, k, y.g.space.dim(), z.g.space.dim(), y.g.module.rho, z.g.module.lambda, c);
            auto amb = [&](std::size_t j) {
              Tensor t = Tensor({k, y.g.space.dim(), z.g.space.dim()}, triple[j]);
              t = t.embed(x.g.space, 0, {n, xd}).embed(y.g.space, 2, {n, yd}).embed(z.g.space, 4, {n, z.x.dim});
              return t.permute({0, 2, 4, 1, 3, 5});  // (h, h′, h″, x, y, z)
            };
            r.compare(name, triple.size(), [&](std::size_t j) { return amb(j).apply_restricted(b.mu(), 0).apply_restricted(b.mu(), 0); },
                      [&](std::size_t j) { return amb(j).apply_restricted(b.mu(), 1).apply_restricted(b.mu(), 0); });
          });
        }
      });
    }
  }

  // The tensor coaction of h_comodule_tensor is κ∘(δ_M ⊠ δ_N).
  for (const auto& m : comodules) {
    for (const auto& nn : comodules) {
      const std::string t = tag(m.label, nn.label);
      guarded(r, "lifted_tensor_agrees" + t, [&] {
        HComoduleTensor ht = h_comodule_tensor(m, nn, b);
        const std::size_t md = m.dim(), nd = nn.dim();
        r.compare("lifted_tensor_agrees" + t, ht.space.dim(),
                  [&](std::size_t v) {
                    Tensor s = Tensor({md, nd}, ht.space.basis()[v]).apply(m.delta, 0, 1, {n, md}).apply(nn.delta, 2, 1, {n, nd});
                    return kappa_amb(b, s, 1);
                  },
                  [&](std::size_t v) { return col(ht.object.delta, v, {n, ht.space.dim()}).embed(ht.space, 1, {md, nd}); });
      });
    }
  }
  return r;
}

namespace {

struct OCtx {
  const BCCData& d;
  const Bicoalgebroid& b;
  std::size_t e, n;
  RestrictedMap act;
};

// Coaction of D ⊠ X on legs (d, x…): d⟨−1⟩x⟨−1⟩ ⊗ d⟨0⟩ ⊗ x⟨0⟩.
Legs g_legs(const OCtx& k, const Legs& x) {
  const LinMap delta_d = k.d.yd.comodule.delta;
  const std::size_t n = k.n, e = k.e;
  const Bicoalgebroid* b = &k.b;
  const auto xc = x.coact;
  return {concat({e}, x.shape), [delta_d, n, e, b, xc](const Tensor& t, std::size_t first) {
            Tensor s = xc(t.apply(delta_d, first, 1, {n, e}), first + 2);  // (h, d, h′, x…)
            return move_leg(s, first + 2, first + 1).apply_restricted(b->mu(), first);
          }};
}

// G_{X,Y} on legs starting at `first`: (d, x…, y…) -> (d₁, x⟨0⟩…, d₂◁x⟨−1⟩, y…).
Tensor g2_amb(const OCtx& k, const Tensor& t, std::size_t first, const Legs& x) {
  const std::size_t xl = x.shape.size();
  Tensor s = x.coact(t.apply(k.d.coalgebra.delta, first, 1, {k.e, k.e}), first + 2);  // (d1, d2, h, x…, y…)
  s = move_leg(move_leg(s, first + 1, first + 2 + xl), first + 1, first + 2 + xl);     // (d1, x…, d2, h, y…)
  return s.apply_restricted(k.act, first + 1 + xl);
}

struct OObj {
  HComodule x;
  HComoduleTensor g;  // D ⊠ X
  LinMap lambda_d;    // left D-coaction of D ⊠ X, in its coordinates
  LinMap rho_d;       // right D-coaction
};

OObj make_oobj(const OCtx& k, const HComodule& x) {
  OObj o{x, h_comodule_tensor(k.d.yd.comodule, x, k.b), {}, {}};
  const Subspace& s = o.g.space;
  const std::size_t xd = x.dim(), gd = s.dim();
  o.lambda_d = columns_of(k.e * gd, gd, [&](std::size_t i) {
    return Tensor({k.e, xd}, s.basis()[i]).apply(k.d.coalgebra.delta, 0, 1, {k.e, k.e}).corestrict(s, 1, 2).data();
  });
  // (d₂⟨0⟩ ⊗ x⟨0⟩) ⊗ d₁ ◁ d₂⟨−1⟩x⟨−1⟩
  o.rho_d = columns_of(gd * k.e, gd, [&](std::size_t i) {
    Tensor t = Tensor({k.e, xd}, s.basis()[i]).apply(k.d.coalgebra.delta, 0, 1, {k.e, k.e});
    t = t.apply(k.d.yd.comodule.delta, 1, 1, {k.n, k.e}).apply(x.delta, 3, 1, {k.n, xd});  // (d1, h, d2, h′, x)
    t = t.permute({2, 4, 0, 1, 3}).apply_restricted(k.b.mu(), 3).apply_restricted(k.act, 2);
    return t.corestrict(s, 0, 2).data();
  });
  return o;
}

}  // namespace

CheckReport verify_opmonoidal_comonad(const BCCData& d, const Bicoalgebroid& b, const std::vector<HComodule>& objects) {
  const OCtx k{d, b, d.coalgebra.dim, b.n(), d.yd.module.action()};
  const std::size_t c = b.c();
  const std::size_t e = k.e;
  const LinMap& dd = d.coalgebra.delta;
  const LinMap& ed = d.coalgebra.counit;
  CheckReport r;
  const HComodule unit = unit_h_comodule(b);
  const Legs unit_legs = plain(unit, k.n);

  std::optional<HComoduleTensor> gc;
  guarded(r, "unit_object", [&] { gc = h_comodule_tensor(d.yd.comodule, unit, b); });
  if (!gc) return r;
  {
    auto v = [&](std::size_t i) { return Tensor({e, c}, gc->space.basis()[i]); };
    // G⁰ = ε_D ⊠ C. (2): G⁰∘G(G⁰)∘Δ_C = G⁰
    r.compare("diagram2_delta_unit", gc->space.dim(), [&](std::size_t i) { return v(i).apply(ed, 0, 1, {}); },
              [&](std::size_t i) { return v(i).apply(dd, 0, 1, {e, e}).apply(ed, 1, 1, {}).apply(ed, 0, 1, {}); });
    // (4): the comonad counit at C equals G⁰.
    const LinMap eps_c = columns_of(c, gc->space.dim(), [&](std::size_t i) { return v(i).apply(ed, 0, 1, {}).data(); });
    const LinMap g0 = tensor_map(ed, LinMap::identity(c)) * gc->space.inclusion();
    r.require("diagram4_eps_unit", 1, [&](std::size_t) -> std::optional<std::string> {
      if (eps_c == g0) return std::nullopt;
      return "counit at C differs from G0";
    });
  }

  std::vector<std::optional<OObj>> objs(objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const HComodule& x = objects[i];
    const std::string t = tag(x.label);
    const std::size_t xd = x.dim();
    guarded(r, "G_defined" + t, [&] {
      objs[i] = make_oobj(k, x);
      const OObj& o = *objs[i];
      const Subspace& s = o.g.space;
      const std::size_t gd = s.dim();
      auto v = [&](std::size_t j) { return Tensor({e, xd}, s.basis()[j]); };
      auto dv = [&](std::size_t j) { return v(j).apply(dd, 0, 1, {e, e}); };
      guarded(r, "delta_lands_in_GG" + t, [&] {
        HComoduleTensor gg = h_comodule_tensor(d.yd.comodule, o.g.object, b);
        for (std::size_t j = 0; j < gd; ++j) dv(j).corestrict(s, 1, 2).corestrict(gg.space, 0, 2);
        r.pass("delta_lands_in_GG" + t, gd);
      });
      r.compare("comonad_counit_left" + t, gd, [&](std::size_t j) { return dv(j).apply(ed, 0, 1, {}); }, v);
      r.compare("comonad_counit_right" + t, gd, [&](std::size_t j) { return dv(j).apply(ed, 1, 1, {}); }, v);
      r.compare("comonad_coassociative" + t, gd, [&](std::size_t j) { return dv(j).apply(dd, 0, 1, {e, e}); },
                [&](std::size_t j) { return dv(j).apply(dd, 1, 1, {e, e}); });
      // (G⁰ ⊠ GX)∘G_{C,X}∘G(λ_X) = λ_{GX}, and the mirror on the right
      r.compare("opmonoidal_left_unit" + t, gd,
                [&](std::size_t j) {
                  Tensor a = v(j).apply(x.module.lambda, 1, 1, {c, xd});  // (d, c, x)
                  return g2_amb(k, a, 0, unit_legs).apply(ed, 0, 1, {});
                },
                [&](std::size_t j) { return col(o.g.object.module.lambda, j, {c, gd}).embed(s, 1, {e, xd}); });
      r.compare("opmonoidal_right_unit" + t, gd,
                [&](std::size_t j) {
                  Tensor a = v(j).apply(x.module.rho, 1, 1, {xd, c});  // (d, x, c)
                  return g2_amb(k, a, 0, plain(x, k.n)).apply(ed, 2, 1, {});
                },
                [&](std::size_t j) { return col(o.g.object.module.rho, j, {gd, c}).embed(s, 0, {e, xd}); });
    });
  }

  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (!objs[i]) continue;
    const OObj& x = *objs[i];
    const std::size_t xd = x.x.dim();
    const Legs xl = plain(x.x, k.n);
    const Legs gxl = g_legs(k, xl);
    for (std::size_t jj = 0; jj < objects.size(); ++jj) {
      if (!objs[jj]) continue;
      const OObj& y = *objs[jj];
      const std::size_t yd = y.x.dim();
      const std::string t = tag(x.x.label, y.x.label);
      guarded(r, "G2_defined" + t, [&] {
        HComoduleTensor xy = h_comodule_tensor(x.x, y.x, b);
        HComoduleTensor gxy = h_comodule_tensor(d.yd.comodule, xy.object, b);
        const std::size_t n_gxy = gxy.space.dim();
        auto v = [&](std::size_t j) { return Tensor({e, xy.space.dim()}, gxy.space.basis()[j]).embed(xy.space, 1, {xd, yd}); };
        auto g2v = [&](std::size_t j) { return g2_amb(k, v(j), 0, xl); };  // (d, x, d′, y)
        const Subspace p = cotensor(x.g.object.module.rho, y.g.object.module.lambda, c, "GX⊠GY");
        for (std::size_t j = 0; j < n_gxy; ++j) g2v(j).corestrict(x.g.space, 0, 2).corestrict(y.g.space, 1, 2).corestrict(p, 0, 2);
        r.pass("G2_defined" + t, n_gxy);
        // (1) (Δ_X ⊠ Δ_Y)∘G_{X,Y} = G_{GX,GY}∘G(G_{X,Y})∘Δ_{X⊠Y} on legs (d, d, x, d, d, y)
        r.compare("diagram1_delta" + t, n_gxy, [&](std::size_t j) { return g2v(j).apply(dd, 2, 1, {e, e}).apply(dd, 0, 1, {e, e}); },
                  [&](std::size_t j) { return g2_amb(k, g2_amb(k, v(j).apply(dd, 0, 1, {e, e}), 1, xl), 0, gxl); });
        // (3) (ε_X ⊠ ε_Y)∘G_{X,Y} = ε_{X⊠Y}
        r.compare("diagram3_eps" + t, n_gxy, [&](std::size_t j) { return g2v(j).apply(ed, 2, 1, {}).apply(ed, 0, 1, {}); },
                  [&](std::size_t j) { return v(j).apply(ed, 0, 1, {}); });
        // Into (D⊠X) ⊠_D (D⊠Y), with inverse (d⊗x)⊗(d′⊗y) ↦ d ε_C(π(d′)) ⊗ x ⊗ y.
        Subspace q = cotensor(x.rho_d, y.lambda_d, e, "GX⊠_D GY");
        guarded(r, "G2_lands_in_D_cotensor" + t, [&] {
          for (std::size_t j = 0; j < n_gxy; ++j) g2v(j).corestrict(x.g.space, 0, 2).corestrict(y.g.space, 1, 2).corestrict(q, 0, 2);
          r.pass("G2_lands_in_D_cotensor" + t, n_gxy);
        });
        const LinMap eps_pi = b.base().counit * d.augmentation;
        auto inv = [&](const Tensor& a) { return a.apply(eps_pi, 2, 1, {}); };  // (d, x, d′, y) -> (d, x, y)
        auto qv = [&](std::size_t w) {
          return Tensor({x.g.space.dim(), y.g.space.dim()}, q.basis()[w]).embed(x.g.space, 0, {e, xd}).embed(y.g.space, 2, {e, yd});
        };
        guarded(r, "G2_inverse_lands" + t, [&] {
          for (std::size_t w = 0; w < q.dim(); ++w) inv(qv(w)).corestrict(xy.space, 1, 2).corestrict(gxy.space, 0, 2);
          r.pass("G2_inverse_lands" + t, q.dim());
        });
        r.compare("G2_inverse_left" + t, n_gxy, [&](std::size_t j) { return inv(g2v(j)); }, v);
        r.compare("G2_inverse_right" + t, q.dim(), [&](std::size_t w) { return g2_amb(k, inv(qv(w)), 0, xl); }, qv);
      });
    }
  }
  return r;
}

}  // namespace bicoalg
