#include "bicoalg/examples.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

#include "bicoalg/errors.hpp"

namespace bicoalg {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw Error("empty group table");
  for (const auto& row : table) {
    if (row.size() != n) throw Error("group table is not square");
    for (std::size_t v : row) {
      if (v >= n) throw Error("group table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) throw Error("group table is not associative");
      }
    }
  }
  std::optional<std::size_t> e;
  for (std::size_t a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
    if (ok) e = a;
  }
  if (!e) throw Error("group table has no identity");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] == *e && table[b][a] == *e) inv[a] = b;
    }
    if (inv[a] == n) throw Error("group element without inverse");
  }
  return {n, std::move(table), *e, std::move(inv), std::move(name)};
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return from_table(std::move(t), "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<std::size_t, 3> c{};
      for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return from_table(std::move(t), "S3");
}

FiniteGroup FiniteGroup::klein() {
  std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
  }
  return from_table(std::move(t), "K4");
}

FiniteGroup FiniteGroup::by_name(const std::string& name) {
  if (name == "S3") return symmetric3();
  if (name == "K4" || name == "V4") return klein();
  if (name.size() >= 2 && name[0] == 'Z') {
    std::size_t pos = 0;
    unsigned long n = 0;
    try {
      n = std::stoul(name.substr(1), &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == name.size() - 1 && n >= 1 && n <= 64) return cyclic(n);
  }
  throw Error("unknown group '" + name + "' (expected Z<n>, S3 or K4)");
}

std::vector<FiniteGroup> small_groups() {
  std::vector<FiniteGroup> out;
  for (std::size_t n = 1; n <= 6; ++n) out.push_back(FiniteGroup::cyclic(n));
  out.push_back(FiniteGroup::klein());
  out.push_back(FiniteGroup::symmetric3());
  return out;
}

GSet GSet::regular(const FiniteGroup& g) {
  GSet x{g.order, std::vector<std::vector<std::size_t>>(g.order, std::vector<std::size_t>(g.order)), std::nullopt};
  for (std::size_t a = 0; a < g.order; ++a) {
    for (std::size_t b = 0; b < g.order; ++b) x.action[a][b] = g.mul(a, b);
  }
  return x;
}

GSet GSet::conjugation(const FiniteGroup& g) {
  GSet x = regular(g);
  for (std::size_t a = 0; a < g.order; ++a) {
    for (std::size_t b = 0; b < g.order; ++b) x.action[a][b] = g.mul(g.inverse[b], g.mul(a, b));
  }
  return x;
}

GSet GSet::swap() { return {2, {{0, 1}, {1, 0}}, std::nullopt}; }

GSet GSet::cosets(const FiniteGroup& g, const std::vector<std::size_t>& subgroup) {
  std::vector<std::set<std::size_t>> classes;
  std::vector<std::size_t> class_of(g.order, g.order);
  for (std::size_t a = 0; a < g.order; ++a) {
    if (class_of[a] != g.order) continue;
    std::set<std::size_t> coset;
    for (std::size_t k : subgroup) coset.insert(g.mul(k, a));
    for (std::size_t m : coset) class_of[m] = classes.size();
    classes.push_back(std::move(coset));
  }
  GSet x{classes.size(), std::vector<std::vector<std::size_t>>(classes.size(), std::vector<std::size_t>(g.order)), std::nullopt};
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const std::size_t rep = *classes[c].begin();
    for (std::size_t b = 0; b < g.order; ++b) x.action[c][b] = class_of[g.mul(rep, b)];
  }
  return x;
}

GSet GSet::with_phi(std::vector<std::size_t> phi) const {
  GSet x = *this;
  x.phi = std::move(phi);
  return x;
}

std::optional<std::string> gset_violation(const FiniteGroup& g, const GSet& x) {
  if (x.action.size() != x.size) return "action table has the wrong number of rows";
  for (std::size_t p = 0; p < x.size; ++p) {
    if (x.action[p].size() != g.order) return "action row " + std::to_string(p) + " has the wrong length";
    if (x.action[p][g.identity] != p) return "identity moves point " + std::to_string(p);
    for (std::size_t a = 0; a < g.order; ++a) {
      if (x.action[p][a] >= x.size) return "action value out of range";
    }
  }
  for (std::size_t p = 0; p < x.size; ++p) {
    for (std::size_t a = 0; a < g.order; ++a) {
      for (std::size_t b = 0; b < g.order; ++b) {
        if (x.action[x.action[p][a]][b] != x.action[p][g.mul(a, b)]) {
          return "(x◁g)◁h ≠ x◁(gh) at x=" + std::to_string(p) + ", g=" + std::to_string(a) + ", h=" + std::to_string(b);
        }
      }
    }
  }
  if (x.phi) {
    if (x.phi->size() != x.size) return "phi has the wrong length";
    for (std::size_t v : *x.phi) {
      if (v >= g.order) return "phi value out of range";
    }
  }
  return std::nullopt;
}

namespace {

std::size_t phi_at(const FiniteGroup& g, const GSet& x, std::size_t p) { return x.phi ? (*x.phi)[p] : g.identity; }

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> yd_g_violation(const FiniteGroup& g, const GSet& x) {
  for (std::size_t p = 0; p < x.size; ++p) {
    for (std::size_t a = 0; a < g.order; ++a) {
      if (g.mul(g.inverse[a], g.mul(phi_at(g, x, p), a)) != phi_at(g, x, x.action[p][a])) return std::make_pair(p, a);
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> bcc_g_violation(const FiniteGroup& g, const GSet& x) {
  for (std::size_t p = 0; p < x.size; ++p) {
    if (x.action[p][phi_at(g, x, p)] != p) return p;
  }
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> subgroups(const FiniteGroup& g) {
  std::vector<std::vector<std::size_t>> out;
  if (g.order > 16) throw Error("subgroup enumeration is limited to order 16");
  for (std::uint32_t mask = 1; mask < (1u << g.order); ++mask) {
    if (!(mask & (1u << g.identity))) continue;
    bool closed = true;
    for (std::size_t a = 0; a < g.order && closed; ++a) {
      if (!(mask & (1u << a))) continue;
      for (std::size_t b = 0; b < g.order && closed; ++b) {
        if ((mask & (1u << b)) && !(mask & (1u << g.mul(a, b)))) closed = false;
      }
    }
    if (!closed) continue;
    std::vector<std::size_t> s;
    for (std::size_t a = 0; a < g.order; ++a) {
      if (mask & (1u << a)) s.push_back(a);
    }
    out.push_back(std::move(s));
  }
  return out;
}

GSet random_gset(const FiniteGroup& g, std::size_t max_size, std::mt19937_64& rng) {
  const auto subs = subgroups(g);
  std::vector<GSet> pieces;
  std::size_t total = 0;
  std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
  for (int attempt = 0; attempt < 16; ++attempt) {
    GSet c = GSet::cosets(g, subs[pick(rng)]);
    if (total + c.size > max_size) continue;
    total += c.size;
    pieces.push_back(std::move(c));
    if (rng() % 2 == 0) break;
  }
  if (pieces.empty()) pieces.push_back(GSet::cosets(g, subs.back()));  // one point
  GSet x{0, {}, std::nullopt};
  for (const auto& c : pieces) {
    for (const auto& row : c.action) {
      std::vector<std::size_t> shifted(row);
      for (auto& v : shifted) v += x.size;
      x.action.push_back(std::move(shifted));
    }
    x.size += c.size;
  }
  return x;
}

std::vector<std::size_t> random_yd_phi(const FiniteGroup& g, const GSet& x, std::mt19937_64& rng) {
  std::vector<std::size_t> phi(x.size, g.order);
  for (std::size_t p = 0; p < x.size; ++p) {
    if (phi[p] != g.order) continue;
    std::vector<std::size_t> centralizer;
    for (std::size_t c = 0; c < g.order; ++c) {
      bool ok = true;
      for (std::size_t s = 0; s < g.order && ok; ++s) {
        if (x.action[p][s] == p) ok = g.mul(c, s) == g.mul(s, c);
      }
      if (ok) centralizer.push_back(c);
    }
    const std::size_t v = centralizer[std::uniform_int_distribution<std::size_t>(0, centralizer.size() - 1)(rng)];
    for (std::size_t a = 0; a < g.order; ++a) phi[x.action[p][a]] = g.mul(g.inverse[a], g.mul(v, a));
  }
  return phi;
}

std::vector<std::size_t> random_phi(const FiniteGroup& g, const GSet& x, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, g.order - 1);
  std::vector<std::size_t> phi(x.size);
  for (auto& v : phi) v = pick(rng);
  return phi;
}

FiniteGroupoid action_groupoid(const FiniteGroup& g, const GSet& x) {
  const std::size_t n = g.order;
  FiniteGroupoid gpd;
  gpd.objects = x.size;
  for (std::size_t p = 0; p < x.size; ++p) {
    for (std::size_t a = 0; a < n; ++a) {
      gpd.source.push_back(p);
      gpd.target.push_back(x.action[p][a]);
    }
  }
  const std::size_t m = gpd.arrows();
  gpd.compose.assign(m, std::vector<std::optional<std::size_t>>(m));
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      if (gpd.target[u] == gpd.source[v]) gpd.compose[u][v] = gpd.source[u] * n + g.mul(u % n, v % n);
    }
  }
  for (std::size_t p = 0; p < x.size; ++p) gpd.identity.push_back(p * n + g.identity);
  return gpd;
}

std::optional<std::string> groupoid_violation(const FiniteGroupoid& gpd) {
  const std::size_t m = gpd.arrows();
  if (gpd.target.size() != m || gpd.compose.size() != m || gpd.identity.size() != gpd.objects) return "inconsistent sizes";
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      const bool composable = gpd.target[u] == gpd.source[v];
      if (composable != gpd.compose[u][v].has_value()) return "composition defined off composable pairs";
      if (!composable) continue;
      const std::size_t w = *gpd.compose[u][v];
      if (gpd.source[w] != gpd.source[u] || gpd.target[w] != gpd.target[v]) return "composite has wrong endpoints";
      for (std::size_t t = 0; t < m; ++t) {
        if (gpd.target[v] == gpd.source[t] && gpd.compose[w][t] != gpd.compose[u][*gpd.compose[v][t]]) return "not associative";
      }
    }
    if (gpd.compose[gpd.identity[gpd.source[u]]][u] != u || gpd.compose[u][gpd.identity[gpd.target[u]]] != u) return "identity law fails";
    bool invertible = false;
    for (std::size_t v = 0; v < m && !invertible; ++v) {
      invertible = gpd.compose[u][v] == gpd.identity[gpd.source[u]] && gpd.compose[v][u] == gpd.identity[gpd.target[u]];
    }
    if (!invertible) return "arrow " + std::to_string(u) + " is not invertible";
  }
  return std::nullopt;
}

Coalgebra grouplike_coalgebra(std::size_t n) {
  std::vector<SparseVec> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(SparseVec::unit(i * n + i));
  return {n, LinMap::from_columns(n * n, cols), LinMap(1, n, std::vector<Scalar>(n, 1)), "grouplike" + std::to_string(n)};
}

Coalgebra dual_group_coalgebra(const FiniteGroup& g) {
  const std::size_t n = g.order;
  std::vector<SparseVec> cols;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<SparseVec::Entry> raw;
    for (std::size_t h = 0; h < n; ++h) raw.emplace_back(h * n + g.mul(g.inverse[h], a), 1);
    cols.push_back(SparseVec::from_unsorted(std::move(raw)));
  }
  LinMap counit(1, n);
  counit = counit.with_entry(0, g.identity, 1);
  return {n, LinMap::from_columns(n * n, cols), counit, "k^" + g.name};
}

Bicoalgebroid group_hopf(const FiniteGroup& g) {
  const std::size_t n = g.order;
  Coalgebra h = grouplike_coalgebra(n);
  h.label = "k[" + g.name + "]";
  std::vector<SparseVec> mu;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mu.push_back(SparseVec::unit(g.mul(a, b)));
  }
  LinMap eta = LinMap::from_columns(n, {SparseVec::unit(g.identity)});
  LinMap counit = h.counit;
  return {Coalgebra::ground(), h, counit, counit, LinMap::from_columns(n, mu), eta, h.label};
}

Bicoalgebroid coenveloping_bico(const Coalgebra& c) {
  const std::size_t d = c.dim;
  const LinMap id = LinMap::identity(d);
  Coalgebra total = tensor_coalgebra(coopposite(c), c);
  total.label = c.label + "_cop⊗" + c.label;
  LinMap alpha = tensor_map(c.counit, id);
  LinMap beta = tensor_map(id, c.counit);
  // (c, c̄, d, d̄) ↦ ε(c) ε(d̄) d ⊗ c̄
  LinMap mu = twist(d, d) * tensor_map(tensor_map(c.counit, id), tensor_map(id, c.counit));
  LinMap eta = twist(d, d) * c.delta;
  return {c, total, alpha, beta, mu, eta, "coenveloping(" + c.label + ")"};
}

Bicoalgebroid finite_groupoid_bico(const FiniteGroupoid& gpd) {
  if (auto v = groupoid_violation(gpd)) throw Error("invalid groupoid: " + *v);
  const std::size_t m = gpd.arrows();
  const std::size_t o = gpd.objects;
  std::vector<SparseVec> a, b, mu, eta;
  for (std::size_t u = 0; u < m; ++u) {
    a.push_back(SparseVec::unit(gpd.source[u]));
    b.push_back(SparseVec::unit(gpd.target[u]));
    for (std::size_t v = 0; v < m; ++v) mu.push_back(gpd.compose[u][v] ? SparseVec::unit(*gpd.compose[u][v]) : SparseVec{});
  }
  for (std::size_t x = 0; x < o; ++x) eta.push_back(SparseVec::unit(gpd.identity[x]));
  Coalgebra base = grouplike_coalgebra(o);
  base.label = "k[objects]";
  Coalgebra total = grouplike_coalgebra(m);
  total.label = "k[arrows]";
  return {base, total, LinMap::from_columns(o, a), LinMap::from_columns(o, b), LinMap::from_columns(m, mu),
          LinMap::from_columns(m, eta), "groupoid"};
}

BCCData linearized_gset(const FiniteGroup& g, const GSet& x, const Bicoalgebroid& h) {
  if (h.n() != g.order || h.c() != 1) throw DimensionMismatch("linearized G-sets live over k[G]");
  const std::size_t s = x.size;
  const std::size_t n = g.order;
  Coalgebra d = grouplike_coalgebra(s);
  d.label = "k[X]";
  std::vector<SparseVec> act;
  for (std::size_t p = 0; p < s; ++p) {
    for (std::size_t a = 0; a < n; ++a) act.push_back(SparseVec::unit(x.action[p][a]));
  }
  std::vector<SparseVec> delta;
  for (std::size_t p = 0; p < s; ++p) delta.push_back(SparseVec::unit(phi_at(g, x, p) * s + p));
  LinMap aug = d.counit;
  return make_bcc(d, aug, LinMap::from_columns(s, act), LinMap::from_columns(n * s, delta), h, "k[X]");
}

BCCData action_groupoid_bcc(const FiniteGroup& g, const GSet& x, const Bicoalgebroid& h) {
  if (auto v = gset_violation(g, x)) throw SetLevelViolation("not a G-set: " + *v);
  if (auto v = yd_g_violation(g, x)) {
    throw SetLevelViolation("YD-G fails at x=" + std::to_string(v->first) + ", g=" + std::to_string(v->second));
  }
  if (auto v = bcc_g_violation(g, x)) throw SetLevelViolation("BCC-G fails at x=" + std::to_string(*v) + ": x◁φ(x) ≠ x");
  return linearized_gset(g, x, h);
}

BCCData conjugation_bcc(const FiniteGroup& g, const Bicoalgebroid& h) {
  std::vector<std::size_t> phi(g.order);
  std::iota(phi.begin(), phi.end(), 0);
  return action_groupoid_bcc(g, GSet::conjugation(g).with_phi(std::move(phi)), h);
}

BCCData regular_bcc(const FiniteGroup& g, const Bicoalgebroid& h) {
  const std::size_t n = g.order;
  Coalgebra d = coopposite(h.total());
  d.label = "H_cop";
  std::vector<SparseVec> delta;
  // S⁻¹(g)·g ⊗ g = e ⊗ g on grouplikes
  for (std::size_t a = 0; a < n; ++a) delta.push_back(SparseVec::unit(g.identity * n + a));
  return make_bcc(d, h.total().counit, h.mu_total(), LinMap::from_columns(n * n, delta), h, "H_cop");
}

LeftYDModule regular_left_yd(const FiniteGroup& g, const Bicoalgebroid& h) {
  const std::size_t n = g.order;
  std::vector<SparseVec> delta;
  for (std::size_t a = 0; a < n; ++a) delta.push_back(SparseVec::unit(g.identity * n + a));
  Bicomodule m{n, h.base(), LinMap::identity(n), LinMap::identity(n), "H"};
  return make_left_yd(HComodule{m, LinMap::from_columns(n * n, delta), "H"}, h.mu_total(), h);
}

Bicomodule free_bicomodule(const Coalgebra& c) {
  const LinMap id = LinMap::identity(c.dim);
  return {c.dim * c.dim, c, tensor_map(c.delta, id), tensor_map(id, c.delta), c.label + "⊗" + c.label};
}

std::vector<SparseVec> find_grouplikes(const Coalgebra& c) {
  const std::size_t n = c.dim;
  if (n > 8) throw Error("grouplike search is limited to dimension 8");
  std::vector<SparseVec> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<SparseVec::Entry> raw;
    std::size_t t = code;
    for (std::size_t i = 0; i < n; ++i, t /= 3) {
      if (t % 3 == 1) raw.emplace_back(i, 1);
      if (t % 3 == 2) raw.emplace_back(i, -1);
    }
    SparseVec v = SparseVec::from_sorted(std::move(raw));
    if (!c.counit.apply(v).at(0).is_one()) continue;
    Tensor tv({n}, v);
    std::vector<SparseVec::Entry> sq;
    for (const auto& [i, a] : v.entries()) {
      for (const auto& [j, b] : v.entries()) sq.emplace_back(i * n + j, a * b);
    }
    if (c.delta.apply(v) == SparseVec::from_unsorted(std::move(sq))) out.push_back(std::move(v));
  }
  return out;
}

namespace {

// Product of random elementary matrices together with its inverse.
std::pair<LinMap, LinMap> random_invertible(std::size_t d, std::mt19937_64& rng) {
  LinMap p = LinMap::identity(d);
  LinMap q = LinMap::identity(d);
  if (d < 2) return {p, q};
  std::uniform_int_distribution<std::size_t> idx(0, d - 1);
  std::uniform_int_distribution<int> val(-2, 2);
  for (std::size_t step = 0; step < 2 * d; ++step) {
    const std::size_t i = idx(rng);
    std::size_t j = idx(rng);
    if (i == j) j = (i + 1) % d;
    const Scalar a = val(rng);
    LinMap e = LinMap::identity(d).with_entry(i, j, a);
    LinMap einv = LinMap::identity(d).with_entry(i, j, -a);
    p = e * p;
    q = q * einv;
  }
  return {p, q};
}

}  // namespace

Bicomodule random_bicomodule(const Coalgebra& c, const std::vector<SparseVec>& grouplikes, std::size_t max_dim,
                             std::mt19937_64& rng) {
  const std::size_t n = c.dim;
  std::uniform_int_distribution<std::size_t> dim_pick(1, std::max<std::size_t>(max_dim, 1));
  const std::size_t target = dim_pick(rng);
  // Blocks: (is_regular, u, v)
  struct Block {
    bool regular;
    std::size_t u, v;
  };
  std::vector<Block> blocks;
  std::size_t d = 0;
  std::uniform_int_distribution<std::size_t> gl(0, grouplikes.empty() ? 0 : grouplikes.size() - 1);
  while (d < target) {
    if (d + n <= target && (grouplikes.empty() || rng() % 3 == 0)) {
      blocks.push_back({true, 0, 0});
      d += n;
    } else if (!grouplikes.empty()) {
      blocks.push_back({false, gl(rng), gl(rng)});
      d += 1;
    } else {
      break;
    }
  }
  if (d == 0) {
    blocks.push_back({true, 0, 0});
    d = n;
  }
  std::vector<SparseVec> lam(d), rho(d);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    if (b.regular) {
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<SparseVec::Entry> l, r;
        for (const auto& [k, a] : c.delta.column(i).entries()) {
          const std::size_t x = k / n, y = k % n;
          l.emplace_back(x * d + off + y, a);
          r.emplace_back((off + x) * n + y, a);
        }
        lam[off + i] = SparseVec::from_unsorted(std::move(l));
        rho[off + i] = SparseVec::from_unsorted(std::move(r));
      }
      off += n;
    } else {
      std::vector<SparseVec::Entry> l, r;
      for (const auto& [k, a] : grouplikes[b.u].entries()) l.emplace_back(k * d + off, a);
      for (const auto& [k, a] : grouplikes[b.v].entries()) r.emplace_back(off * n + k, a);
      lam[off] = SparseVec::from_unsorted(std::move(l));
      rho[off] = SparseVec::from_unsorted(std::move(r));
      off += 1;
    }
  }
  LinMap lambda = LinMap::from_columns(n * d, lam);
  LinMap rhom = LinMap::from_columns(d * n, rho);
  auto [p, q] = random_invertible(d, rng);
  const LinMap id = LinMap::identity(n);
  return {d, c, tensor_map(id, p) * lambda * q, tensor_map(p, id) * rhom * q, "M"};
}

Coalgebra in_field(const Coalgebra& c, const Field& f) { return {c.dim, c.delta.in_field(f), c.counit.in_field(f), c.label}; }

Bicomodule in_field(const Bicomodule& m, const Field& f) {
  return {m.dim, in_field(m.base, f), m.lambda.in_field(f), m.rho.in_field(f), m.label};
}

Bicoalgebroid in_field(const Bicoalgebroid& b, const Field& f) {
  return {in_field(b.base(), f), in_field(b.total(), f), b.alpha().in_field(f), b.beta().in_field(f),
          b.mu_total().in_field(f), b.eta().in_field(f), b.label()};
}

BCCData in_field(const BCCData& d, const Field& f, const Bicoalgebroid& b) {
  return make_bcc(in_field(d.coalgebra, f), d.augmentation.in_field(f), d.yd.module.action_total.in_field(f),
                  d.yd.comodule.delta.in_field(f), b, d.yd.label());
}

std::string Mutation::str() const {
  static const char* names[] = {"delta", "counit", "alpha", "beta", "eta", "mu_total"};
  std::ostringstream os;
  os << names[static_cast<int>(target)] << "[" << row << "," << col << "] += " << added.str();
  return os.str();
}

std::pair<Bicoalgebroid, Mutation> mutate(const Bicoalgebroid& b, std::mt19937_64& rng) {
  const Field f{b.total().counit.cols() ? b.total().counit.at(0, 0).modulus() : 0};
  std::uniform_int_distribution<int> which(0, 5);
  std::uniform_int_distribution<int> mag(1, 3);
  Scalar added;
  do {
    added = Scalar(rng() % 2 ? mag(rng) : -mag(rng)).in_field(f);
  } while (added.is_zero());
  auto cell = [&](const LinMap& m, const std::vector<std::size_t>* cols) {
    std::uniform_int_distribution<std::size_t> r(0, m.rows() - 1);
    if (cols) return std::make_pair(r(rng), (*cols)[std::uniform_int_distribution<std::size_t>(0, cols->size() - 1)(rng)]);
    return std::make_pair(r(rng), std::uniform_int_distribution<std::size_t>(0, m.cols() - 1)(rng));
  };
  const auto t = static_cast<MutationTarget>(which(rng));
  Coalgebra base = b.base();
  Coalgebra total = b.total();
  LinMap alpha = b.alpha(), beta = b.beta(), eta = b.eta(), mu = b.mu_total();
  auto bump = [&](LinMap& m, const std::vector<std::size_t>* cols = nullptr) {
    auto [r, c] = cell(m, cols);
    m = m.with_entry(r, c, m.at(r, c) + added);
    return Mutation{t, r, c, added};
  };
  Mutation mut{};
  switch (t) {
    case MutationTarget::Delta: mut = bump(total.delta); break;
    case MutationTarget::Counit: mut = bump(total.counit); break;
    case MutationTarget::Alpha: mut = bump(alpha); break;
    case MutationTarget::Beta: mut = bump(beta); break;
    case MutationTarget::Eta: mut = bump(eta); break;
    case MutationTarget::Mu: mut = bump(mu, &b.cotensor().pivots()); break;
  }
  return {Bicoalgebroid(base, total, alpha, beta, mu, eta, b.label()), mut};
}

}  // namespace bicoalg
