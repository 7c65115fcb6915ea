#include <random>

#include "bicoalg/comonadics.hpp"
#include "bicoalg/examples.hpp"
#include "doctest.h"

using namespace bicoalg;

TEST_CASE("bicomonad laws for k[Z2]") {
  const Bicoalgebroid b = group_hopf(FiniteGroup::cyclic(2));
  const CheckReport r = verify_bicomonad(b, {Bicomodule::regular(b.base()), regular_bicomodule(b)},
                                         {unit_h_comodule(b), regular_h_comodule(b)});
  CHECK_MESSAGE(r.passed(), r.text());
}

TEST_CASE("G(X) over k is H ⊗ X") {
  const Bicoalgebroid b = group_hopf(FiniteGroup::symmetric3());
  const GObject g = bicomonad_image(b, regular_bicomodule(b));
  CHECK(g.space.dim() == 36);
}

TEST_CASE("bicomonad laws fail for a broken multiplication") {
  const Bicoalgebroid b = coenveloping_bico(grouplike_coalgebra(2));
  std::mt19937_64 rng(4);
  bool caught = false;
  for (int i = 0; i < 10 && !caught; ++i) {
    auto [bad, m] = mutate(b, rng);
    if (m.target != MutationTarget::Mu) continue;
    caught = !verify_bicomonad(bad, {Bicomodule::regular(bad.base())}).passed();
  }
  CHECK(caught);
}

TEST_CASE("opmonoidal comonad from the regular G-set") {
  const FiniteGroup g = FiniteGroup::cyclic(3);
  const Bicoalgebroid h = group_hopf(g);
  const CheckReport r = verify_opmonoidal_comonad(action_groupoid_bcc(g, GSet::regular(g), h), h,
                                                  {unit_h_comodule(h), regular_h_comodule(h)});
  CHECK_MESSAGE(r.passed(), r.text());
  std::size_t inverse_checks = 0;
  for (const auto& c : r.checks()) inverse_checks += c.name.rfind("G2_inverse_", 0) == 0;
  CHECK(inverse_checks == 12);  // lands, left, right on four ordered pairs
}

TEST_CASE("a grading off the identity breaks the opmonoidal structure") {
  const FiniteGroup g = FiniteGroup::cyclic(3);
  const Bicoalgebroid h = group_hopf(g);
  const BCCData d = linearized_gset(g, GSet::regular(g).with_phi({1, 1, 1}), h);
  CHECK_FALSE(verify_opmonoidal_comonad(d, h, {unit_h_comodule(h), regular_h_comodule(h)}).passed());
}
