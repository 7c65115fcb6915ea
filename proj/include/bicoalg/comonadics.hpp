#pragma once

#include <vector>

#include "bicoalg/yd.hpp"

namespace bicoalg {

/// G(X) = H ⊠_{C^e} X for a C-bicomodule X: the subspace of H ⊗ X and the
/// C-bicomodule it carries through λ_L and ρ_L on the H leg.
struct GObject {
  Subspace space;
  Bicomodule module;
};
GObject bicomonad_image(const Bicoalgebroid& b, const Bicomodule& x);

/// Comonad laws, (a)–(d), κ associativity and unit laws on the given
/// bicomodules, and agreement of the lifted monoidal structure with
/// h_comodule_tensor / unit_h_comodule on the given H-comodules.
CheckReport verify_bicomonad(const Bicoalgebroid& b, const std::vector<Bicomodule>& objects,
                             const std::vector<HComodule>& comodules = {});

/// G = D ⊠_C − on H-comodules: comonad laws, opmonoidal unit laws, the four
/// compatibility diagrams, and invertibility of D ⊠_C (X ⊠ Y) -> (D⊠X) ⊠_D (D⊠Y).
CheckReport verify_opmonoidal_comonad(const BCCData& d, const Bicoalgebroid& b, const std::vector<HComodule>& objects);

}  // namespace bicoalg
