#pragma once

#include <string>

#include "bicoalg/bicoalgebroid.hpp"

namespace bicoalg {

/// Comodule over a bicoalgebroid: a C-bicomodule M with δ: M -> H⊗M landing
/// in H ⊠_{C^e} M, written δ(m) = m⟨−1⟩⊗m⟨0⟩.
struct HComodule {
  Bicomodule module;
  LinMap delta;
  std::string label;

  std::size_t dim() const noexcept { return module.dim; }
};

/// H ⊠_{C^e} M: kernel of h₁⊗φ(h₂)⊗m − h⊗m₍₋₁₎⊗m₍₁₎⊗m₍₀₎.
Subspace h_box_ce(const Bicoalgebroid& b, const Bicomodule& m);

CheckReport verify_h_comodule(const HComodule& m, const Bicoalgebroid& b);

/// (H; λ_L, ρ_L) with δ = Δ.
HComodule regular_h_comodule(const Bicoalgebroid& b);
/// C with both coactions Δ_C and δ_C(c) = η(c)₁ ⊗ α(η(c)₂).
HComodule unit_h_comodule(const Bicoalgebroid& b);

struct HComoduleTensor {
  Subspace space;  // M ⊠_C N inside M ⊗ N
  HComodule object;
};

/// M ⊠_C N with δ(m⊗n) = m⟨−1⟩n⟨−1⟩ ⊗ m⟨0⟩ ⊗ n⟨0⟩; μ is membership-checked.
HComoduleTensor h_comodule_tensor(const HComodule& m, const HComodule& n, const Bicoalgebroid& b,
                                  const RestrictedMap* mu = nullptr);

}  // namespace bicoalg
