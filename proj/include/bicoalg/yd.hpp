#pragma once

#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bicoalg/hcomodule.hpp"

namespace bicoalg {

/// Right H-module: a right C-comodule X with ◁: X ⊠_C H -> X. The action is
/// stored as a total map on X ⊗ H and only applied to members of X ⊠_C H.
struct RightHModule {
  std::size_t dim = 0;
  LinMap rho;
  LinMap action_total;
  std::shared_ptr<const Subspace> domain;  // X ⊠_C H, ρ_X against λ_L
  std::string label;

  RestrictedMap action() const;
};

RightHModule make_right_module(std::size_t dim, LinMap rho, LinMap action_total, const Bicoalgebroid& b, std::string label = {});
CheckReport verify_right_module(const RightHModule& x, const Bicoalgebroid& b);
/// x ↦ β(η(x₁)₂) ⊗ x₀ ◁ η(x₁)₁.
LinMap induced_left_coaction(const RightHModule& x, const Bicoalgebroid& b);
/// The induced coaction is a coaction, forms a bicomodule with ρ_X, makes ◁
/// left colinear, and ◁ factors through the cocenter of X ⊠_C H.
CheckReport check_induced_coaction(const RightHModule& x, const Bicoalgebroid& b);

/// Right-left Yetter–Drinfel'd module ⟨Z, ◁, δ⟩.
struct YDModule {
  HComodule comodule;
  RightHModule module;

  std::size_t dim() const noexcept { return comodule.dim(); }
  const std::string& label() const noexcept { return comodule.label; }
};

YDModule make_yd(HComodule comodule, LinMap action_total, const Bicoalgebroid& b);
/// Module and comodule checks plus the crossed condition
/// z⟨−1⟩h₁ ⊗ z⟨0⟩◁h₂ = h₂(z◁h₁)⟨−1⟩ ⊗ (z◁h₁)⟨0⟩ on Z ⊠_C H.
CheckReport verify_yd(const YDModule& z, const Bicoalgebroid& b);
/// The crossed condition alone.
CheckReport verify_yd_condition(const YDModule& z, const Bicoalgebroid& b);

struct YDTensor {
  Subspace space;  // Z ⊠_C Z′ inside Z ⊗ Z′
  YDModule object;
};
/// (z⊗z′)◁h = z◁h₂ ⊗ z′◁h₁, coaction z⟨−1⟩z′⟨−1⟩ ⊗ z⟨0⟩ ⊗ z′⟨0⟩.
YDTensor yd_tensor(const YDModule& z, const YDModule& zp, const Bicoalgebroid& b);
/// C with c◁h = ε(c)β(h) (cε(h) when C = k) and coaction η(c₁) ⊗ c₂.
YDModule yd_unit(const Bicoalgebroid& b);

/// On legs (leg, leg+1) holding Z and X: z ⊗ x ↦ x⟨0⟩ ⊗ z◁x⟨−1⟩.
Tensor braid_legs(const Tensor& t, std::size_t leg, const YDModule& z, const HComodule& x, const Bicoalgebroid& b);
/// θ_X: Z ⊠ X -> X ⊠ Z in cotensor coordinates; throws NotInSubspace if the
/// image leaves X ⊠_C Z.
LinMap theta_component(const YDModule& z, const HComodule& x, const Bicoalgebroid& b);
/// τ_{Z,Z′} = θ_{Z′}.
LinMap prebraiding(const YDModule& z, const YDModule& zp, const Bicoalgebroid& b);
/// τ_{Z,Z′} commutes with the actions and coactions.
CheckReport check_prebraiding_morphism(const YDModule& z, const YDModule& zp, const Bicoalgebroid& b);
CheckReport yang_baxter_check(const YDModule& z, const YDModule& zp, const YDModule& zpp, const Bicoalgebroid& b);
/// τ_{Z,Z′⊠Z″} = (Z′⊠τ_{Z,Z″})∘(τ_{Z,Z′}⊠Z″).
CheckReport hexagon_check(const YDModule& z, const YDModule& zp, const YDModule& zpp, const Bicoalgebroid& b);

/// HComodule map between two objects of a list, by index.
struct HComoduleMorphism {
  std::size_t from;
  std::size_t to;
  LinMap map;
};
/// Finite weak-center conditions for θ on a list of objects and morphisms.
CheckReport check_center_embedding(const YDModule& z, const std::vector<HComodule>& objects,
                                   const std::vector<HComoduleMorphism>& morphisms, const Bicoalgebroid& b);

/// Left-left Yetter–Drinfel'd module with ▷: H ⊠_C Z -> Z.
struct LeftYDModule {
  HComodule comodule;
  LinMap action_total;  // H ⊗ Z -> Z
  std::shared_ptr<const Subspace> domain;  // H ⊠_C Z, ρ_L against λ_Z

  RestrictedMap action() const;
  std::size_t dim() const noexcept { return comodule.dim(); }
};
LeftYDModule make_left_yd(HComodule comodule, LinMap action_total, const Bicoalgebroid& b);
/// Module checks plus h₁z⟨−1⟩ ⊗ h₂▷z⟨0⟩ = (h₁▷z)⟨−1⟩h₂ ⊗ (h₁▷z)⟨0⟩.
CheckReport verify_left_yd(const LeftYDModule& z, const Bicoalgebroid& b);
/// κ_{Z′,Z}(z′⊗z) = z′⟨−1⟩▷z ⊗ z′⟨0⟩ on the ambient Z′ ⊗ Z.
LinMap kappa_prebraiding(const LeftYDModule& zp, const LeftYDModule& z, const Bicoalgebroid& b);

/// Braided cocommutative coalgebra: coalgebra D with augmentation π: D -> C
/// and a YD structure whose C-coactions are (π⊗D)Δ and (D⊗π)Δ.
struct BCCData {
  Coalgebra coalgebra;
  LinMap augmentation;
  YDModule yd;
};

/// Builds the YD structure with π-induced C-coactions.
BCCData make_bcc(Coalgebra d, LinMap augmentation, LinMap action_total, LinMap delta, const Bicoalgebroid& b,
                 std::string label = "D");
CheckReport verify_bcc(const BCCData& d, const Bicoalgebroid& b);
/// A copy of z whose action uses a random second extension off its domain.
YDModule with_random_action_extension(const YDModule& z, std::mt19937_64& rng);

}  // namespace bicoalg
