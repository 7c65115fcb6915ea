#include <random>

#include "bicoalg/bicoalgebroid.hpp"
#include "bicoalg/errors.hpp"
#include "bicoalg/examples.hpp"
#include "doctest.h"

using namespace bicoalg;

TEST_CASE("standard bicoalgebroids pass every check") {
  for (const Bicoalgebroid& b : {group_hopf(FiniteGroup::klein()), coenveloping_bico(grouplike_coalgebra(2)),
                                 coenveloping_bico(dual_group_coalgebra(FiniteGroup::cyclic(2))),
                                 finite_groupoid_bico(action_groupoid(FiniteGroup::cyclic(3), GSet::regular(FiniteGroup::cyclic(3))))}) {
    CAPTURE(b.label());
    const CheckReport r = verify_bicoalgebroid(b);
    CHECK_MESSAGE(r.passed(), r.text());
  }
}

TEST_CASE("a unit that is not a coalgebra map is caught") {
  const Bicoalgebroid h = group_hopf(FiniteGroup::cyclic(3));
  const Bicoalgebroid bad(h.base(), h.total(), h.alpha(), h.beta(), h.mu_total(), h.eta().with_entry(1, 0, Scalar(1)), "bad eta");
  const CheckReport r = verify_bicoalgebroid(bad);
  CHECK_FALSE(r.passed());
}

TEST_CASE("cotensor of k[G] over k is everything") {
  const Bicoalgebroid h = group_hopf(FiniteGroup::symmetric3());
  CHECK(h.cotensor().dim() == 36);
}

TEST_CASE("groupoid cotensor holds the composable pairs") {
  const FiniteGroup g = FiniteGroup::cyclic(2);
  const FiniteGroupoid gpd = action_groupoid(g, GSet::swap());
  const Bicoalgebroid b = finite_groupoid_bico(gpd);
  std::size_t composable = 0;
  for (std::size_t a = 0; a < gpd.arrows(); ++a)
    for (std::size_t c = 0; c < gpd.arrows(); ++c) composable += gpd.target[a] == gpd.source[c];
  CHECK(b.cotensor().dim() == composable);
}

TEST_CASE("the verdict does not depend on the extension of mu") {
  std::mt19937_64 rng(2);
  const Bicoalgebroid b = coenveloping_bico(grouplike_coalgebra(3));
  const LinMap other = random_extension(b.mu_total(), b.cotensor(), rng);
  CHECK_FALSE(other == b.mu_total());
  CHECK(verify_bicoalgebroid(b.with_mu_total(other)).passed());
}

TEST_CASE("mutations are detected") {
  std::mt19937_64 rng(8);
  const Bicoalgebroid b = group_hopf(FiniteGroup::cyclic(3));
  for (int i = 0; i < 10; ++i) {
    auto [bad, m] = mutate(b, rng);
    CAPTURE(m.str());
    CHECK_FALSE(verify_bicoalgebroid(bad).passed());
  }
}
