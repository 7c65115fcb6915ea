#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "bicoalg/coalgebra.hpp"
#include "bicoalg/report.hpp"
#include "bicoalg/tensor.hpp"

namespace bicoalg {

/// Left bicoalgebroid (C, H, α, β, μ, η).
///
/// μ is only meaningful on the cotensor H ⊠_C H (ρ_L against λ_L); the stored
/// mu_total is any extension to H ⊗ H and is never applied outside the
/// cotensor. The four coactions and the cotensor are computed once.
class Bicoalgebroid {
 public:
  Bicoalgebroid() = default;
  Bicoalgebroid(Coalgebra base, Coalgebra total, LinMap alpha, LinMap beta, LinMap mu_total, LinMap eta,
                std::string label = {});

  const Coalgebra& base() const noexcept { return base_; }
  const Coalgebra& total() const noexcept { return total_; }
  const LinMap& alpha() const noexcept { return alpha_; }
  const LinMap& beta() const noexcept { return beta_; }
  const LinMap& mu_total() const noexcept { return mu_.total; }
  const LinMap& eta() const noexcept { return eta_; }
  const std::string& label() const noexcept { return label_; }

  /// λ_L(h) = α(h₁)⊗h₂
  const LinMap& lambda_L() const noexcept { return lambda_L_; }
  /// ρ_L(h) = h₂⊗β(h₁)
  const LinMap& rho_L() const noexcept { return rho_L_; }
  /// λ_R(h) = β(h₂)⊗h₁
  const LinMap& lambda_R() const noexcept { return lambda_R_; }
  /// ρ_R(h) = h₁⊗α(h₂)
  const LinMap& rho_R() const noexcept { return rho_R_; }

  /// H ⊠_C H inside H ⊗ H.
  const Subspace& cotensor() const noexcept { return *cotensor_; }
  std::shared_ptr<const Subspace> cotensor_ptr() const noexcept { return cotensor_; }
  /// μ with membership-checked application.
  const RestrictedMap& mu() const noexcept { return mu_; }

  /// Same structure with another extension of μ (cached data is reused).
  Bicoalgebroid with_mu_total(LinMap mu_total) const;

  std::size_t n() const noexcept { return total_.dim; }
  std::size_t c() const noexcept { return base_.dim; }

  /// Triple cotensor H ⊠_C H ⊠_C H inside H⊗H⊗H (spanning set).
  std::vector<SparseVec> triple_cotensor() const;

 private:
  Coalgebra base_;
  Coalgebra total_;
  LinMap alpha_;
  LinMap beta_;
  LinMap eta_;
  std::string label_;
  LinMap lambda_L_, rho_L_, lambda_R_, rho_R_;
  std::shared_ptr<const Subspace> cotensor_;
  RestrictedMap mu_;
};

/// A Sweedler-style composite: a list of leg operations evaluated on a tensor.
/// Every μ step membership-checks its argument in H ⊠_C H.
class SweedlerExpr {
 public:
  enum class Op { Delta, Counit, Alpha, Beta, Eta, Mu, LambdaL, RhoL, LambdaR, RhoR, BaseDelta, BaseCounit, Permute };
  struct Step {
    Op op;
    std::size_t leg = 0;
    std::vector<std::size_t> perm;
  };

  SweedlerExpr& delta(std::size_t leg) { return push(Op::Delta, leg); }
  SweedlerExpr& counit(std::size_t leg) { return push(Op::Counit, leg); }
  SweedlerExpr& alpha(std::size_t leg) { return push(Op::Alpha, leg); }
  SweedlerExpr& beta(std::size_t leg) { return push(Op::Beta, leg); }
  SweedlerExpr& eta(std::size_t leg) { return push(Op::Eta, leg); }
  /// μ on legs (first, first + 1).
  SweedlerExpr& mu(std::size_t first) { return push(Op::Mu, first); }
  SweedlerExpr& lambda_L(std::size_t leg) { return push(Op::LambdaL, leg); }
  SweedlerExpr& rho_L(std::size_t leg) { return push(Op::RhoL, leg); }
  SweedlerExpr& lambda_R(std::size_t leg) { return push(Op::LambdaR, leg); }
  SweedlerExpr& rho_R(std::size_t leg) { return push(Op::RhoR, leg); }
  SweedlerExpr& base_delta(std::size_t leg) { return push(Op::BaseDelta, leg); }
  SweedlerExpr& base_counit(std::size_t leg) { return push(Op::BaseCounit, leg); }
  SweedlerExpr& permute(std::vector<std::size_t> perm);
  SweedlerExpr& swap(std::size_t leg);

  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::string str() const;

 private:
  SweedlerExpr& push(Op op, std::size_t leg);
  std::vector<Step> steps_;
};

Tensor sweedler_eval(const SweedlerExpr& expr, const Bicoalgebroid& b, const Tensor& arg, const RestrictedMap* mu = nullptr);

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Run every check with a random second extension of μ instead of mu_total.
  bool second_extension = false;
  /// Skip the extension-independence re-run.
  bool skip_independence = false;
};

/// Any total map that agrees with `total` on `domain`, chosen at random off it.
LinMap random_extension(const LinMap& total, const Subspace& domain, std::mt19937_64& rng);

CheckReport verify_bicoalgebroid(const Bicoalgebroid& b, const VerifyOptions& opts = {});
/// The μ-dependent checks alone, evaluated with a given μ.
CheckReport verify_mu_checks(const Bicoalgebroid& b, const RestrictedMap& mu);

/// H ⊠_C H as a bicomodule for (λ_R ⊗ H, H ⊗ ρ_R) plus its cocenter.
struct BoxSquare {
  std::shared_ptr<const Subspace> cotensor;
  Bicomodule bicomodule;
  Cocenter cocenter;
  /// μ in cotensor coordinates.
  LinMap mu_on_cotensor;
};
BoxSquare box_square(const Bicoalgebroid& b);

/// φ = (α⊗β)∘Δ: H -> C ⊗ C.
LinMap phi_map(const Bicoalgebroid& b);
/// H as a right C^e-comodule, h ↦ h₁⊗φ(h₂).
LinMap ce_right_coaction(const Bicoalgebroid& b);
/// A C-bicomodule as a left C^e-comodule, m ↦ m₍₋₁₎⊗m₍₁₎⊗m₍₀₎.
LinMap ce_left_coaction(const Bicomodule& m);
/// Δ̄: H -> H ⊠_{C^e} H, or NotInSubspace.
LinMap delta_bar(const Bicoalgebroid& b, const Subspace& h_box_h);
/// The C-bicomodule (H; λ_L, ρ_L).
Bicomodule regular_bicomodule(const Bicoalgebroid& b);

}  // namespace bicoalg
