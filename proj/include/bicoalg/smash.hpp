#pragma once

#include <cstddef>
#include <vector>

#include "bicoalg/yd.hpp"

namespace bicoalg {

/// D⋊H on the cotensor D ⊠_C H (ρ_D against λ_L), in cotensor coordinates.
struct SmashCoproduct {
  Subspace space;
  Coalgebra coalgebra;
};

/// Δ(d⋊h) = d₁ ⋊ d₂⟨−1⟩h₁ ⊗ d₂⟨0⟩ ⋊ h₂ and ε(d⋊h) = ε(d)ε_H(h).
/// Throws NotInSubspace / NotInCotensorDomain when D is not an H-comodule coalgebra.
SmashCoproduct smash_coproduct(const BCCData& d, const Bicoalgebroid& b);

/// For an H-comodule X with a D-coaction δ_D: checks that (D⊗δ)∘δ_D is a
/// counital coassociative D⋊H-coaction and that it splits back into δ_D and δ.
CheckReport smash_comodule_correspondence(const HComodule& x, const LinMap& delta_d, const BCCData& d, const Bicoalgebroid& b);

/// The bicoalgebroid D⋊H over D; refuses inputs failing verify_bcc with BCCViolation.
Bicoalgebroid scalar_extension(const BCCData& d, const Bicoalgebroid& b);
/// Same construction without the precondition gate.
Bicoalgebroid scalar_extension_unchecked(const BCCData& d, const Bicoalgebroid& b);

/// Entry-wise comparison of two bicoalgebroids under basis permutations:
/// total index i of b1 corresponds to total_perm[i] of b2, and likewise for the base.
CheckReport compare_bicoalgebroids(const Bicoalgebroid& b1, const Bicoalgebroid& b2, const std::vector<std::size_t>& total_perm,
                                   const std::vector<std::size_t>& base_perm);

}  // namespace bicoalg
