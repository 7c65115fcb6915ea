#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bicoalg/bicoalgebroid.hpp"
#include "bicoalg/hcomodule.hpp"
#include "bicoalg/yd.hpp"

namespace bicoalg {

/// Group given by its Cayley table; element 0 need not be the identity.
struct FiniteGroup {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
  std::string name;

  std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }
  /// Validates the table and derives identity and inverses; throws Error.
  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table, std::string name = {});
  static FiniteGroup cyclic(std::size_t n);
  /// Permutations of {0,1,2} in lexicographic order; index 0 is the identity.
  static FiniteGroup symmetric3();
  static FiniteGroup klein();
  /// "Z<n>", "S3", "K4".
  static FiniteGroup by_name(const std::string& name);
};

/// Every group of order at most 6 up to isomorphism.
std::vector<FiniteGroup> small_groups();

/// Right action x◁g of a finite group on {0..size-1}, with an optional φ: X -> G.
struct GSet {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> action;  // action[x][g] = x◁g
  std::optional<std::vector<std::size_t>> phi;

  static GSet regular(const FiniteGroup& g);
  static GSet conjugation(const FiniteGroup& g);  // x◁g = g⁻¹xg
  /// Z2 swapping two points.
  static GSet swap();
  /// Right cosets Kx of a subgroup K (given as a list of elements).
  static GSet cosets(const FiniteGroup& g, const std::vector<std::size_t>& subgroup);
  GSet with_phi(std::vector<std::size_t> phi) const;
};

/// Action axioms; returns a description of the first failure.
std::optional<std::string> gset_violation(const FiniteGroup& g, const GSet& x);
/// First (x, g) with g⁻¹φ(x)g ≠ φ(x◁g).
std::optional<std::pair<std::size_t, std::size_t>> yd_g_violation(const FiniteGroup& g, const GSet& x);
/// First x with x◁φ(x) ≠ x.
std::optional<std::size_t> bcc_g_violation(const FiniteGroup& g, const GSet& x);

/// Subgroups of g as sorted element lists.
std::vector<std::vector<std::size_t>> subgroups(const FiniteGroup& g);
/// Disjoint union of random coset spaces, at most max_size points.
GSet random_gset(const FiniteGroup& g, std::size_t max_size, std::mt19937_64& rng);
/// φ satisfying YD-G: a centralizer element of the stabilizer on each orbit
/// representative, transported by conjugation.
std::vector<std::size_t> random_yd_phi(const FiniteGroup& g, const GSet& x, std::mt19937_64& rng);
/// Uniformly random φ.
std::vector<std::size_t> random_phi(const FiniteGroup& g, const GSet& x, std::mt19937_64& rng);

/// Groupoid with arrows as indices; compose(a, b) is "a then b" and needs target(a) = source(b).
struct FiniteGroupoid {
  std::size_t objects = 0;
  std::vector<std::size_t> source;
  std::vector<std::size_t> target;
  std::vector<std::vector<std::optional<std::size_t>>> compose;
  std::vector<std::size_t> identity;

  std::size_t arrows() const noexcept { return source.size(); }
};

/// Arrows (x, g): x -> x◁g with index x·|G| + g; (x,g)(x◁g,g′) = (x,gg′).
FiniteGroupoid action_groupoid(const FiniteGroup& g, const GSet& x);
std::optional<std::string> groupoid_violation(const FiniteGroupoid& gpd);

/// k^n with every basis vector grouplike.
Coalgebra grouplike_coalgebra(std::size_t n);
/// Dual of k[G]: Δδ_g = Σ_h δ_h ⊗ δ_{h⁻¹g}.
Coalgebra dual_group_coalgebra(const FiniteGroup& g);
/// k[G] over C = k.
Bicoalgebroid group_hopf(const FiniteGroup& g);
/// Co-enveloping bicoalgebroid on C_cop ⊗ C.
Bicoalgebroid coenveloping_bico(const Coalgebra& c);
/// Grouplike bicoalgebroid of a groupoid: α source, β target, μ composition.
Bicoalgebroid finite_groupoid_bico(const FiniteGroupoid& gpd);

/// Linearized G-set over group_hopf(g): D grouplike on X, action by table,
/// coaction x ↦ φ(x) ⊗ x. No Set-level checks.
BCCData linearized_gset(const FiniteGroup& g, const GSet& x, const Bicoalgebroid& h);
/// Same after checking the action axioms, YD-G and BCC-G; throws SetLevelViolation.
BCCData action_groupoid_bcc(const FiniteGroup& g, const GSet& x, const Bicoalgebroid& h);
/// X = G under conjugation with φ = id.
BCCData conjugation_bcc(const FiniteGroup& g, const Bicoalgebroid& h);
/// H_cop over k[G] with action μ and coaction S⁻¹(h₃)h₁ ⊗ h₂.
BCCData regular_bcc(const FiniteGroup& g, const Bicoalgebroid& h);
/// ⟨k[G], Ad_L, μ⟩ as a left-left YD module.
LeftYDModule regular_left_yd(const FiniteGroup& g, const Bicoalgebroid& h);

/// C ⊗ C with λ = Δ ⊗ C and ρ = C ⊗ Δ.
Bicomodule free_bicomodule(const Coalgebra& c);
/// Sum of copies of C and one-dimensional grouplike pieces under a random
/// change of basis; `grouplikes` lists grouplike elements of C used for the
/// one-dimensional pieces.
Bicomodule random_bicomodule(const Coalgebra& c, const std::vector<SparseVec>& grouplikes, std::size_t max_dim,
                             std::mt19937_64& rng);
/// Grouplike elements of C with coefficients in {-1, 0, 1}.
std::vector<SparseVec> find_grouplikes(const Coalgebra& c);

/// Same structures read in another field.
Coalgebra in_field(const Coalgebra& c, const Field& f);
Bicomodule in_field(const Bicomodule& m, const Field& f);
Bicoalgebroid in_field(const Bicoalgebroid& b, const Field& f);
BCCData in_field(const BCCData& d, const Field& f, const Bicoalgebroid& b);

/// Which structure map a mutation touches.
enum class MutationTarget { Delta, Counit, Alpha, Beta, Eta, Mu };
struct Mutation {
  MutationTarget target;
  std::size_t row;
  std::size_t col;
  Scalar added;
  std::string str() const;
};
/// One random nonzero integer added to one entry. μ is only perturbed on
/// columns that meet the cotensor (pivot columns), so the change is visible.
std::pair<Bicoalgebroid, Mutation> mutate(const Bicoalgebroid& b, std::mt19937_64& rng);

}  // namespace bicoalg
