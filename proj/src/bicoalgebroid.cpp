#include "bicoalg/bicoalgebroid.hpp"

#include <algorithm>

#include "bicoalg/errors.hpp"

namespace bicoalg {

Bicoalgebroid::Bicoalgebroid(Coalgebra base, Coalgebra total, LinMap alpha, LinMap beta, LinMap mu_total, LinMap eta,
                             std::string label)
    : base_(std::move(base)), total_(std::move(total)), alpha_(std::move(alpha)), beta_(std::move(beta)), eta_(std::move(eta)),
      label_(std::move(label)) {
  const std::size_t n = total_.dim;
  const std::size_t c = base_.dim;
  if (alpha_.rows() != c || alpha_.cols() != n || beta_.rows() != c || beta_.cols() != n) {
    throw DimensionMismatch("alpha and beta must be maps H -> C");
  }
  if (mu_total.rows() != n || mu_total.cols() != n * n) throw DimensionMismatch("mu_total must be a map H⊗H -> H");
  if (eta_.rows() != n || eta_.cols() != c) throw DimensionMismatch("eta must be a map C -> H");
  const LinMap id = LinMap::identity(n);
  lambda_L_ = tensor_map(alpha_, id) * total_.delta;
  rho_L_ = twist(c, n) * tensor_map(beta_, id) * total_.delta;
  lambda_R_ = twist(n, c) * tensor_map(id, beta_) * total_.delta;
  rho_R_ = tensor_map(id, alpha_) * total_.delta;
  cotensor_ = std::make_shared<const Subspace>(bicoalg::cotensor(rho_L_, lambda_L_, c, "H⊠H"));
  mu_ = RestrictedMap{"mu", std::move(mu_total), cotensor_, {n, n}};
}

Bicoalgebroid Bicoalgebroid::with_mu_total(LinMap mu_total) const {
  if (mu_total.rows() != n() || mu_total.cols() != n() * n()) throw DimensionMismatch("mu_total must be a map H⊗H -> H");
  Bicoalgebroid b = *this;
  b.mu_.total = std::move(mu_total);
  return b;
}

std::vector<SparseVec> Bicoalgebroid::triple_cotensor() const {
  const std::size_t n = this->n();
  const std::size_t c = this->c();
  std::vector<SparseVec> vectors;
  vectors.reserve(cotensor_->dim() * n);
  for (const auto& b : cotensor_->basis()) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<SparseVec::Entry> raw;
      raw.reserve(b.nnz());
      for (const auto& [i, a] : b.entries()) raw.emplace_back(i * n + j, a);
      vectors.push_back(SparseVec::from_sorted(std::move(raw)));
    }
  }
  auto eq = [&](const SparseVec& v) {
    Tensor t({n, n, n}, v);
    return (t.apply(rho_L_, 1, 1, {n, c}) - t.apply(lambda_L_, 2, 1, {c, n})).data();
  };
  return kernel_on_vectors(n * n * n, vectors, eq, n * n * c * n).basis();
}

SweedlerExpr& SweedlerExpr::push(Op op, std::size_t leg) {
  steps_.push_back({op, leg, {}});
  return *this;
}

SweedlerExpr& SweedlerExpr::permute(std::vector<std::size_t> perm) {
  steps_.push_back({Op::Permute, 0, std::move(perm)});
  return *this;
}

SweedlerExpr& SweedlerExpr::swap(std::size_t leg) {
  steps_.push_back({Op::Permute, leg, {}});
  return *this;
}

std::string SweedlerExpr::str() const {
  static const char* names[] = {"Δ", "ε", "α", "β", "η", "μ", "λ_L", "ρ_L", "λ_R", "ρ_R", "Δ_C", "ε_C", "perm"};
  std::string s;
  for (const auto& st : steps_) {
    if (!s.empty()) s += " ; ";
    s += names[static_cast<int>(st.op)];
    if (st.op == Op::Permute && !st.perm.empty()) {
      s += "(";
      for (std::size_t k = 0; k < st.perm.size(); ++k) s += (k ? "," : "") + std::to_string(st.perm[k]);
      s += ")";
    } else {
      s += "@" + std::to_string(st.leg);
    }
  }
  return s;
}

Tensor sweedler_eval(const SweedlerExpr& expr, const Bicoalgebroid& b, const Tensor& arg, const RestrictedMap* mu) {
  const std::size_t n = b.n();
  const std::size_t c = b.c();
  using Op = SweedlerExpr::Op;
  Tensor t = arg;
  for (const auto& st : expr.steps()) {
    switch (st.op) {
      case Op::Delta: t = t.apply(b.total().delta, st.leg, 1, {n, n}); break;
      case Op::Counit: t = t.apply(b.total().counit, st.leg, 1, {}); break;
      case Op::Alpha: t = t.apply(b.alpha(), st.leg); break;
      case Op::Beta: t = t.apply(b.beta(), st.leg); break;
      case Op::Eta: t = t.apply(b.eta(), st.leg); break;
      case Op::Mu: t = t.apply_restricted(mu ? *mu : b.mu(), st.leg); break;
      case Op::LambdaL: t = t.apply(b.lambda_L(), st.leg, 1, {c, n}); break;
      case Op::RhoL: t = t.apply(b.rho_L(), st.leg, 1, {n, c}); break;
      case Op::LambdaR: t = t.apply(b.lambda_R(), st.leg, 1, {c, n}); break;
      case Op::RhoR: t = t.apply(b.rho_R(), st.leg, 1, {n, c}); break;
      case Op::BaseDelta: t = t.apply(b.base().delta, st.leg, 1, {c, c}); break;
      case Op::BaseCounit: t = t.apply(b.base().counit, st.leg, 1, {}); break;
      case Op::Permute: t = st.perm.empty() ? t.swap(st.leg) : t.permute(st.perm); break;
    }
  }
  return t;
}

LinMap random_extension(const LinMap& total, const Subspace& domain, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> row(0, total.rows() - 1);
  std::uniform_int_distribution<int> value(-3, 3);
  std::vector<long> basis_at(domain.ambient_dim(), -1);
  for (std::size_t k = 0; k < domain.dim(); ++k) basis_at[domain.pivots()[k]] = static_cast<long>(k);
  // R has one random entry per column; the result is total + R∘P with P(v) = v − ι(coords at pivots).
  std::vector<SparseVec> r_cols(domain.ambient_dim());
  for (auto& col : r_cols) col = SparseVec::unit(row(rng), value(rng));
  std::vector<SparseVec> cols;
  cols.reserve(total.cols());
  for (std::size_t j = 0; j < total.cols(); ++j) {
    SparseVec p = SparseVec::unit(j);
    if (basis_at[j] >= 0) p = p - domain.basis()[static_cast<std::size_t>(basis_at[j])];
    SparseVec col = total.column(j);
    for (const auto& [i, a] : p.entries()) col.axpy(a, r_cols[i]);
    cols.push_back(std::move(col));
  }
  return LinMap::from_columns(total.rows(), cols);
}

namespace {

using E = SweedlerExpr;

Tensor h_basis(const Bicoalgebroid& b, std::size_t i) { return Tensor::basis({b.n()}, i); }
Tensor c_basis(const Bicoalgebroid& b, std::size_t i) { return Tensor::basis({b.c()}, i); }

void compare_exprs(CheckReport& r, const std::string& name, const Bicoalgebroid& b, std::size_t count,
                   const std::function<Tensor(std::size_t)>& arg, const E& lhs, const E& rhs, const RestrictedMap* mu = nullptr) {
  r.compare(name, count, [&](std::size_t i) { return sweedler_eval(lhs, b, arg(i), mu); },
            [&](std::size_t i) { return sweedler_eval(rhs, b, arg(i), mu); });
}

void structure_checks(CheckReport& r, const Bicoalgebroid& b) {
  const std::size_t n = b.n();
  const std::size_t c = b.c();
  r.merge(verify_coalgebra(b.total()), "total");
  r.merge(verify_coalgebra(b.base()), "base");
  r.merge(verify_coalgebra_map(b.alpha(), b.total(), b.base()), "alpha");
  r.merge(verify_anti_coalgebra_map(b.beta(), b.total(), b.base()), "beta");
  auto h = [&](std::size_t i) { return h_basis(b, i); };
  compare_exprs(r, "alpha_beta_cocommute", b, n, h, E().delta(0).alpha(0).beta(1), E().delta(0).swap(0).alpha(0).beta(1));

  r.merge(verify_left_comodule(b.lambda_L(), b.base(), "lambda_L"));
  r.merge(verify_right_comodule(b.rho_L(), b.base(), "rho_L"));
  r.merge(verify_left_comodule(b.lambda_R(), b.base(), "lambda_R"));
  r.merge(verify_right_comodule(b.rho_R(), b.base(), "rho_R"));
  compare_exprs(r, "lambda_L_lambda_R_commute", b, n, h, E().lambda_L(0).lambda_R(1),
                E().lambda_R(0).lambda_L(1).swap(0));
  compare_exprs(r, "rho_L_rho_R_commute", b, n, h, E().rho_R(0).rho_L(0), E().rho_L(0).rho_R(0).swap(1));
  compare_exprs(r, "lambda_L_rho_L_commute", b, n, h, E().lambda_L(0).rho_L(1), E().rho_L(0).lambda_L(0));
  compare_exprs(r, "lambda_L_rho_R_commute", b, n, h, E().lambda_L(0).rho_R(1), E().rho_R(0).lambda_L(0));
  compare_exprs(r, "lambda_R_rho_L_commute", b, n, h, E().lambda_R(0).rho_L(1), E().rho_L(0).lambda_R(0));
  compare_exprs(r, "lambda_R_rho_R_commute", b, n, h, E().lambda_R(0).rho_R(1), E().rho_R(0).lambda_R(0));

  auto cb = [&](std::size_t i) { return c_basis(b, i); };
  compare_exprs(r, "eta_left_colinear", b, c, cb, E().eta(0).lambda_L(0), E().base_delta(0).eta(1));
  compare_exprs(r, "eta_right_colinear", b, c, cb, E().eta(0).rho_L(0), E().base_delta(0).eta(0));
  compare_exprs(r, "eta_comultiplicative_alpha", b, c, cb, E().eta(0).delta(0), E().eta(0).delta(0).alpha(1).eta(1));
  compare_exprs(r, "eta_comultiplicative_beta", b, c, cb, E().eta(0).delta(0), E().eta(0).delta(0).beta(1).eta(1));
  compare_exprs(r, "eta_counital", b, c, cb, E().eta(0).counit(0), E().base_counit(0));
}

}  // namespace

CheckReport verify_mu_checks(const Bicoalgebroid& b, const RestrictedMap& mu) {
  const std::size_t n = b.n();
  CheckReport r;
  const Subspace& s = b.cotensor();
  auto x = [&](std::size_t k) { return Tensor({n, n}, s.basis()[k]); };
  const std::size_t sd = s.dim();
  compare_exprs(r, "mu_left_colinear", b, sd, x, E().mu(0).lambda_L(0), E().lambda_L(0).mu(1), &mu);
  compare_exprs(r, "mu_right_colinear", b, sd, x, E().mu(0).rho_L(0), E().rho_L(1).mu(0), &mu);

  std::vector<SparseVec> triple = b.triple_cotensor();
  auto t = [&](std::size_t k) { return Tensor({n, n, n}, triple[k]); };
  compare_exprs(r, "mu_associative", b, triple.size(), t, E().mu(0).mu(0), E().mu(1).mu(0), &mu);

  compare_exprs(r, "mu_balanced", b, sd, x, E().rho_R(1).mu(0), E().lambda_R(0).swap(0).permute({0, 2, 1}).mu(0), &mu);
  compare_exprs(r, "mu_comultiplicative", b, sd, x, E().mu(0).delta(0),
                E().delta(0).delta(2).permute({0, 2, 1, 3}).mu(0).mu(1), &mu);
  compare_exprs(r, "mu_counital", b, sd, x, E().mu(0).counit(0), E().counit(0).counit(0), &mu);
  auto h = [&](std::size_t i) { return h_basis(b, i); };
  compare_exprs(r, "unit_left", b, n, h, E().lambda_L(0).eta(0).mu(0), E(), &mu);
  compare_exprs(r, "unit_right", b, n, h, E().rho_L(0).eta(1).mu(0), E(), &mu);
  compare_exprs(r, "alpha_multiplicative", b, sd, x, E().mu(0).alpha(0), E().counit(1).alpha(0), &mu);
  compare_exprs(r, "beta_multiplicative", b, sd, x, E().mu(0).beta(0), E().counit(0).beta(0), &mu);
  return r;
}

CheckReport verify_bicoalgebroid(const Bicoalgebroid& b, const VerifyOptions& opts) {
  CheckReport r;
  structure_checks(r, b);
  std::mt19937_64 rng(opts.seed);
  RestrictedMap mu = b.mu();
  if (opts.second_extension) mu.total = random_extension(mu.total, b.cotensor(), rng);
  CheckReport m = verify_mu_checks(b, mu);
  r.merge(m);
  if (opts.skip_independence) return r;
  RestrictedMap other = mu;
  other.total = random_extension(mu.total, b.cotensor(), rng);
  CheckReport m2 = verify_mu_checks(b, other);
  std::optional<Witness> w;
  for (std::size_t k = 0; k < m.checks().size() && !w; ++k) {
    const auto& x = m.checks()[k];
    const auto& y = m2.checks()[k];
    if (x.passed() != y.passed()) {
      w = Witness{k, x.passed() ? "PASS" : "FAIL", y.passed() ? "PASS" : "FAIL", x.name + " changes with the extension of mu"};
    }
  }
  if (w) {
    r.fail("extension_independence", *w);
  } else {
    r.pass("extension_independence", m.checks().size());
  }
  return r;
}

BoxSquare box_square(const Bicoalgebroid& b) {
  const std::size_t n = b.n();
  const std::size_t c = b.c();
  const Subspace& s = b.cotensor();
  const std::size_t d = s.dim();
  auto amb = [&](std::size_t k) { return Tensor({n, n}, s.basis()[k]); };
  std::vector<SparseVec> lam;
  std::vector<SparseVec> rho;
  std::vector<SparseVec> mu;
  for (std::size_t k = 0; k < d; ++k) {
    lam.push_back(amb(k).apply(b.lambda_R(), 0, 1, {c, n}).corestrict(s, 1, 2).data());
    rho.push_back(amb(k).apply(b.rho_R(), 1, 1, {n, c}).corestrict(s, 0, 2).data());
    mu.push_back(amb(k).apply_restricted(b.mu(), 0).data());
  }
  BoxSquare out;
  out.cotensor = b.cotensor_ptr();
  out.bicomodule = Bicomodule{d, b.base(), LinMap::from_columns(c * d, lam), LinMap::from_columns(d * c, rho), "H⊠H"};
  out.cocenter = cocenter(out.bicomodule);
  out.mu_on_cotensor = LinMap::from_columns(n, mu);
  return out;
}

LinMap phi_map(const Bicoalgebroid& b) { return tensor_map(b.alpha(), b.beta()) * b.total().delta; }

LinMap ce_right_coaction(const Bicoalgebroid& b) {
  return tensor_map(LinMap::identity(b.n()), phi_map(b)) * b.total().delta;
}

LinMap ce_left_coaction(const Bicomodule& m) {
  const std::size_t c = m.base.dim;
  std::vector<SparseVec> cols;
  for (std::size_t i = 0; i < m.dim; ++i) {
    Tensor t({c, m.dim}, m.lambda.column(i));
    cols.push_back(t.apply(m.rho, 1, 1, {m.dim, c}).permute({0, 2, 1}).data());
  }
  return LinMap::from_columns(c * c * m.dim, cols);
}

LinMap delta_bar(const Bicoalgebroid& b, const Subspace& h_box_h) { return corestrict(b.total().delta, h_box_h); }

Bicomodule regular_bicomodule(const Bicoalgebroid& b) { return {b.n(), b.base(), b.lambda_L(), b.rho_L(), "H"}; }

}  // namespace bicoalg
