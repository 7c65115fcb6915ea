#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bicoalg/linalg.hpp"
#include "bicoalg/report.hpp"
#include "bicoalg/tensor.hpp"

namespace bicoalg {

struct Coalgebra {
  std::size_t dim = 0;
  LinMap delta;   // dim^2 x dim
  LinMap counit;  // 1 x dim
  std::string label;

  /// The one-dimensional coalgebra k.
  static Coalgebra ground();
  Tensor basis(std::size_t i) const { return Tensor::basis({dim}, i); }
};

/// C-bicomodule (M; λ, ρ) with λ: M -> C⊗M and ρ: M -> M⊗C.
struct Bicomodule {
  std::size_t dim = 0;
  Coalgebra base;
  LinMap lambda;
  LinMap rho;
  std::string label;

  /// C over itself, both coactions Δ.
  static Bicomodule regular(const Coalgebra& c);
};

CheckReport verify_coalgebra(const Coalgebra& c);
/// Δ_D∘f = (f⊗f)∘Δ_C and ε_D∘f = ε_C.
CheckReport verify_coalgebra_map(const LinMap& f, const Coalgebra& from, const Coalgebra& to);
/// Δ_D∘f = (f⊗f)∘tw∘Δ_C and ε_D∘f = ε_C.
CheckReport verify_anti_coalgebra_map(const LinMap& f, const Coalgebra& from, const Coalgebra& to);
/// Coassociativity and counit of both coactions, plus their compatibility.
CheckReport verify_left_comodule(const LinMap& lambda, const Coalgebra& c, const std::string& prefix = "left");
CheckReport verify_right_comodule(const LinMap& rho, const Coalgebra& c, const std::string& prefix = "right");
CheckReport verify_bicomodule(const Bicomodule& m);

/// Equalizer M ⊠_C N = ker(ρ_M ⊗ N − M ⊗ λ_N) inside M ⊗ N.
Subspace cotensor(const LinMap& rho_m, const LinMap& lambda_n, std::size_t base_dim, std::string label = {});
/// Kernel of f restricted to span(vectors), as a subspace of the ambient space.
Subspace kernel_on_vectors(std::size_t ambient, const std::vector<SparseVec>& vectors,
                           const std::function<SparseVec(const SparseVec&)>& f, std::size_t target_dim);

/// Basis of A ⊠ B ⊠ C inside A ⊗ B ⊗ C, given A ⊠ B and the coactions meeting at B|C.
std::vector<SparseVec> triple_cotensor(const Subspace& ab, std::size_t da, std::size_t db, std::size_t dc, const LinMap& rho_b,
                                       const LinMap& lambda_c, std::size_t base);

/// The cotensor of two bicomodules as a bicomodule in its own coordinates:
/// λ acts on the left factor, ρ on the right factor.
struct CotensorBicomodule {
  Subspace space;
  Bicomodule module;
};
CotensorBicomodule cotensor_bicomodule(const Bicomodule& m, const Bicomodule& n);

struct Cocenter {
  Quotient quotient;
  LinMap zeta;                          // M -> Z(M)
  std::vector<SparseVec> relations;     // image of Φ, slices (M ⊗ e^j)(ρ(m) − tw λ(m))
  std::vector<SparseVec> w_span;        // W_M spanning set ρ(m) − tw λ(m) in M ⊗ C
};

Cocenter cocenter(const Bicomodule& m);
/// The unique f′ with f = f′∘ζ, or CocenterObstruction.
LinMap factor_through_cocenter(const LinMap& f, const Bicomodule& m, const Cocenter& z);
LinMap factor_through_cocenter(const LinMap& f, const Bicomodule& m);

Coalgebra coopposite(const Coalgebra& c);
/// C ⊗ D with tw₂₃∘(Δ_C ⊗ Δ_D) and ε ⊗ ε.
Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d);
/// C^e = C ⊗ C_cop.
Coalgebra coenveloping(const Coalgebra& c);

/// id_a ⊗ twist(b, c) ⊗ id_d.
LinMap twist_middle(std::size_t a, std::size_t b, std::size_t c, std::size_t d);

}  // namespace bicoalg
