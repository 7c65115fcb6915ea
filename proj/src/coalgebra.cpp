#include "bicoalg/coalgebra.hpp"

#include "bicoalg/errors.hpp"

namespace bicoalg {

namespace {

Tensor image(const LinMap& f, std::size_t i, std::vector<std::size_t> shape) {
  return Tensor(std::move(shape), f.column(i));
}

LinMap columns_to_map(std::size_t rows, std::size_t n, const std::function<SparseVec(std::size_t)>& col) {
  std::vector<SparseVec> cols;
  cols.reserve(n);
  for (std::size_t i = 0; i < n; ++i) cols.push_back(col(i));
  return LinMap::from_columns(rows, cols);
}

}  // namespace

Coalgebra Coalgebra::ground() {
  return {1, LinMap::identity(1), LinMap::identity(1), "k"};
}

Bicomodule Bicomodule::regular(const Coalgebra& c) { return {c.dim, c, c.delta, c.delta, c.label}; }

CheckReport verify_coalgebra(const Coalgebra& c) {
  const std::size_t n = c.dim;
  if (c.delta.rows() != n * n || c.delta.cols() != n || c.counit.rows() != 1 || c.counit.cols() != n) {
    throw DimensionMismatch("coalgebra " + c.label + " has structure maps of the wrong shape");
  }
  CheckReport r;
  auto d = [&](std::size_t i) { return image(c.delta, i, {n, n}); };
  r.compare("coassociative", n, [&](std::size_t i) { return d(i).apply(c.delta, 0, 1, {n, n}); },
            [&](std::size_t i) { return d(i).apply(c.delta, 1, 1, {n, n}); });
  r.compare("counit_left", n, [&](std::size_t i) { return d(i).apply(c.counit, 0, 1, {}); },
            [&](std::size_t i) { return c.basis(i); });
  r.compare("counit_right", n, [&](std::size_t i) { return d(i).apply(c.counit, 1, 1, {}); },
            [&](std::size_t i) { return c.basis(i); });
  return r;
}

namespace {

CheckReport coalgebra_map_checks(const LinMap& f, const Coalgebra& from, const Coalgebra& to, bool anti) {
  if (f.cols() != from.dim || f.rows() != to.dim) throw DimensionMismatch("coalgebra map of the wrong shape");
  const std::size_t n = from.dim;
  const std::size_t m = to.dim;
  CheckReport r;
  r.compare(anti ? "anti_comultiplicative" : "comultiplicative", n,
            [&](std::size_t i) { return image(f, i, {m}).apply(to.delta, 0, 1, {m, m}); },
            [&](std::size_t i) {
              Tensor t = image(from.delta, i, {n, n});
              if (anti) t = t.swap(0);
              return t.apply(f, 0).apply(f, 1);
            });
  r.compare("counital", n, [&](std::size_t i) { return image(f, i, {m}).apply(to.counit, 0, 1, {}); },
            [&](std::size_t i) { return from.basis(i).apply(from.counit, 0, 1, {}); });
  return r;
}

}  // namespace

CheckReport verify_coalgebra_map(const LinMap& f, const Coalgebra& from, const Coalgebra& to) {
  return coalgebra_map_checks(f, from, to, false);
}

CheckReport verify_anti_coalgebra_map(const LinMap& f, const Coalgebra& from, const Coalgebra& to) {
  return coalgebra_map_checks(f, from, to, true);
}

CheckReport verify_left_comodule(const LinMap& lambda, const Coalgebra& c, const std::string& prefix) {
  const std::size_t m = lambda.cols();
  const std::size_t k = c.dim;
  if (lambda.rows() != k * m) throw DimensionMismatch("left coaction of the wrong shape");
  CheckReport r;
  auto l = [&](std::size_t i) { return image(lambda, i, {k, m}); };
  r.compare(prefix + "_coassociative", m, [&](std::size_t i) { return l(i).apply(c.delta, 0, 1, {k, k}); },
            [&](std::size_t i) { return l(i).apply(lambda, 1, 1, {k, m}); });
  r.compare(prefix + "_counital", m, [&](std::size_t i) { return l(i).apply(c.counit, 0, 1, {}); },
            [&](std::size_t i) { return Tensor::basis({m}, i); });
  return r;
}

CheckReport verify_right_comodule(const LinMap& rho, const Coalgebra& c, const std::string& prefix) {
  const std::size_t m = rho.cols();
  const std::size_t k = c.dim;
  if (rho.rows() != k * m) throw DimensionMismatch("right coaction of the wrong shape");
  CheckReport r;
  auto p = [&](std::size_t i) { return image(rho, i, {m, k}); };
  r.compare(prefix + "_coassociative", m, [&](std::size_t i) { return p(i).apply(rho, 0, 1, {m, k}); },
            [&](std::size_t i) { return p(i).apply(c.delta, 1, 1, {k, k}); });
  r.compare(prefix + "_counital", m, [&](std::size_t i) { return p(i).apply(c.counit, 1, 1, {}); },
            [&](std::size_t i) { return Tensor::basis({m}, i); });
  return r;
}

CheckReport verify_bicomodule(const Bicomodule& m) {
  CheckReport r = verify_left_comodule(m.lambda, m.base);
  r.merge(verify_right_comodule(m.rho, m.base));
  const std::size_t d = m.dim;
  const std::size_t k = m.base.dim;
  r.compare("coactions_commute", d, [&](std::size_t i) { return image(m.lambda, i, {k, d}).apply(m.rho, 1, 1, {d, k}); },
            [&](std::size_t i) { return image(m.rho, i, {d, k}).apply(m.lambda, 0, 1, {k, d}); });
  return r;
}

Subspace cotensor(const LinMap& rho_m, const LinMap& lambda_n, std::size_t base_dim, std::string label) {
  const std::size_t m = rho_m.cols();
  const std::size_t n = lambda_n.cols();
  const std::size_t c = base_dim;
  if (rho_m.rows() != m * c || lambda_n.rows() != c * n) throw DimensionMismatch("cotensor coactions of the wrong shape");
  std::vector<SparseVec> cols;
  cols.reserve(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<SparseVec::Entry> raw;
      for (const auto& [r, a] : rho_m.column(i).entries()) raw.emplace_back(r * n + j, a);
      for (const auto& [r, a] : lambda_n.column(j).entries()) raw.emplace_back(i * c * n + r, -a);
      cols.push_back(SparseVec::from_unsorted(std::move(raw)));
    }
  }
  Subspace k = kernel_of_columns(m * c * n, cols);
  return Subspace::span(m * n, k.basis(), std::move(label));
}

Subspace kernel_on_vectors(std::size_t ambient, const std::vector<SparseVec>& vectors,
                           const std::function<SparseVec(const SparseVec&)>& f, std::size_t target_dim) {
  std::vector<SparseVec> images;
  images.reserve(vectors.size());
  for (const auto& v : vectors) images.push_back(f(v));
  Subspace coeffs = kernel_of_columns(target_dim, images);
  std::vector<SparseVec> out;
  out.reserve(coeffs.dim());
  for (const auto& c : coeffs.basis()) {
    SparseVec v;
    for (const auto& [k, a] : c.entries()) v.axpy(a, vectors[k]);
    out.push_back(std::move(v));
  }
  return Subspace::span(ambient, out);
}

CotensorBicomodule cotensor_bicomodule(const Bicomodule& m, const Bicomodule& n) {
  const std::size_t c = m.base.dim;
  Subspace s = cotensor(m.rho, n.lambda, c, m.label + "⊠" + n.label);
  const std::size_t d = s.dim();
  auto amb = [&](std::size_t k) { return Tensor({m.dim, n.dim}, s.basis()[k]); };
  LinMap lambda = columns_to_map(c * d, d, [&](std::size_t k) {
    return amb(k).apply(m.lambda, 0, 1, {c, m.dim}).corestrict(s, 1, 2).data();
  });
  LinMap rho = columns_to_map(d * c, d, [&](std::size_t k) {
    return amb(k).apply(n.rho, 1, 1, {n.dim, c}).corestrict(s, 0, 2).data();
  });
  return {s, Bicomodule{d, m.base, lambda, rho, s.label()}};
}

Cocenter cocenter(const Bicomodule& m) {
  const std::size_t d = m.dim;
  const std::size_t c = m.base.dim;
  Cocenter z;
  for (std::size_t i = 0; i < d; ++i) {
    Tensor w = image(m.rho, i, {d, c}) - image(m.lambda, i, {c, d}).swap(0);
    z.w_span.push_back(w.data());
    std::vector<std::vector<SparseVec::Entry>> slice(c);
    for (const auto& [idx, a] : w.data().entries()) slice[idx % c].emplace_back(idx / c, a);
    for (auto& s : slice) z.relations.push_back(SparseVec::from_sorted(std::move(s)));
  }
  z.quotient = Quotient::of_relations(d, z.relations);
  z.zeta = z.quotient.projection();
  return z;
}

LinMap factor_through_cocenter(const LinMap& f, const Bicomodule& m, const Cocenter& z) {
  if (f.cols() != m.dim) throw DimensionMismatch("map to factor has the wrong source");
  const std::size_t c = m.base.dim;
  for (std::size_t i = 0; i < z.w_span.size(); ++i) {
    Tensor fw = Tensor({m.dim, c}, z.w_span[i]).apply(f, 0);
    if (!fw.is_zero()) throw CocenterObstruction(i, "(f⊗C)(w) = " + fw.str());
  }
  LinMap fp = f * z.quotient.section();
  if (!(fp * z.zeta == f)) throw std::logic_error("cocenter factorization does not reproduce the map");
  return fp;
}

LinMap factor_through_cocenter(const LinMap& f, const Bicomodule& m) { return factor_through_cocenter(f, m, cocenter(m)); }

Coalgebra coopposite(const Coalgebra& c) {
  return {c.dim, twist(c.dim, c.dim) * c.delta, c.counit, c.label + "_cop"};
}

LinMap twist_middle(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return tensor_map(tensor_map(LinMap::identity(a), twist(b, c)), LinMap::identity(d));
}

Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d) {
  LinMap delta = twist_middle(c.dim, c.dim, d.dim, d.dim) * tensor_map(c.delta, d.delta);
  return {c.dim * d.dim, delta, tensor_map(c.counit, d.counit), c.label + "⊗" + d.label};
}

Coalgebra coenveloping(const Coalgebra& c) {
  Coalgebra e = tensor_coalgebra(c, coopposite(c));
  e.label = c.label + "^e";
  return e;
}

std::vector<SparseVec> triple_cotensor(const Subspace& ab, std::size_t da, std::size_t db, std::size_t dc, const LinMap& rho_b,
                                       const LinMap& lambda_c, std::size_t base) {
  std::vector<SparseVec> vectors;
  vectors.reserve(ab.dim() * dc);
  for (const auto& v : ab.basis()) {
    for (std::size_t j = 0; j < dc; ++j) {
      std::vector<SparseVec::Entry> raw;
      for (const auto& [i, a] : v.entries()) raw.emplace_back(i * dc + j, a);
      vectors.push_back(SparseVec::from_sorted(std::move(raw)));
    }
  }
  auto eq = [&](const SparseVec& v) {
    Tensor t({da, db, dc}, v);
    return (t.apply(rho_b, 1, 1, {db, base}) - t.apply(lambda_c, 2, 1, {base, dc})).data();
  };
  return kernel_on_vectors(da * db * dc, vectors, eq, da * db * base * dc).basis();
}

}  // namespace bicoalg
