#include "bicoalg/hcomodule.hpp"

#include "bicoalg/errors.hpp"

namespace bicoalg {

Subspace h_box_ce(const Bicoalgebroid& b, const Bicomodule& m) {
  const std::size_t c = b.c();
  return cotensor(ce_right_coaction(b), ce_left_coaction(m), c * c, "H⊠" + m.label);
}

CheckReport verify_h_comodule(const HComodule& m, const Bicoalgebroid& b) {
  const std::size_t n = b.n();
  const std::size_t c = b.c();
  const std::size_t d = m.dim();
  if (m.delta.rows() != n * d || m.delta.cols() != d) throw DimensionMismatch("H-coaction of the wrong shape");
  CheckReport r;
  r.merge(verify_bicomodule(m.module), "bicomodule");
  Subspace box = h_box_ce(b, m.module);
  auto dm = [&](std::size_t i) { return Tensor({n, d}, m.delta.column(i)); };
  r.require("delta_in_cotensor", d, [&](std::size_t i) -> std::optional<std::string> {
    if (box.contains(m.delta.column(i))) return std::nullopt;
    return "δ(m) = " + m.delta.column(i).str() + " is not in H⊠_{C^e}M";
  });
  r.compare("coassociative", d, [&](std::size_t i) { return dm(i).apply(b.total().delta, 0, 1, {n, n}); },
            [&](std::size_t i) { return dm(i).apply(m.delta, 1, 1, {n, d}); });
  LinMap phi = phi_map(b);
  LinMap ce = ce_left_coaction(m.module);
  r.compare("counit_phi", d, [&](std::size_t i) { return dm(i).apply(phi, 0, 1, {c, c}); },
            [&](std::size_t i) { return Tensor({c, c, d}, ce.column(i)); });
  r.compare("counit", d, [&](std::size_t i) { return dm(i).apply(b.total().counit, 0, 1, {}); },
            [&](std::size_t i) { return Tensor::basis({d}, i); });
  return r;
}

HComodule regular_h_comodule(const Bicoalgebroid& b) {
  return {regular_bicomodule(b), b.total().delta, "H"};
}

HComodule unit_h_comodule(const Bicoalgebroid& b) {
  const std::size_t n = b.n();
  LinMap delta_c = tensor_map(LinMap::identity(n), b.alpha()) * b.total().delta * b.eta();
  return {Bicomodule::regular(b.base()), delta_c, "C"};
}

HComoduleTensor h_comodule_tensor(const HComodule& m, const HComodule& n, const Bicoalgebroid& b, const RestrictedMap* mu) {
  const std::size_t h = b.n();
  CotensorBicomodule ct = cotensor_bicomodule(m.module, n.module);
  const Subspace& s = ct.space;
  const RestrictedMap& mul = mu ? *mu : b.mu();
  std::vector<SparseVec> cols;
  cols.reserve(s.dim());
  for (std::size_t k = 0; k < s.dim(); ++k) {
    Tensor t({m.dim(), n.dim()}, s.basis()[k]);
    t = t.apply(m.delta, 0, 1, {h, m.dim()}).apply(n.delta, 2, 1, {h, n.dim()});  // (h, m, h', n)
    t = t.permute({0, 2, 1, 3}).apply_restricted(mul, 0);                          // (hh', m, n)
    cols.push_back(t.corestrict(s, 1, 2).data());
  }
  HComodule out{ct.module, LinMap::from_columns(h * s.dim(), cols), m.label + "⊠" + n.label};
  return {s, out};
}

}  // namespace bicoalg
