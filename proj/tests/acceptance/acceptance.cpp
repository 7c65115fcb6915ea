// One line per acceptance criterion: "CRITERION <n>: PASS|FAIL <summary>".
// With an argument, runs only that criterion. Exit status is nonzero iff a
// selected criterion fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../common/helpers.hpp"
#include "bicoalg/comonadics.hpp"
#include "bicoalg/errors.hpp"
#include "bicoalg/examples.hpp"
#include "bicoalg/linalg.hpp"
#include "bicoalg/smash.hpp"

using namespace bicoalg;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [" << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::string failed_list(const CheckReport& r) {
  std::string s;
  for (const auto& f : r.failed_names()) s += (s.empty() ? "" : ",") + f;
  return s;
}

std::map<std::string, bool> verdicts(const CheckReport& r) {
  std::map<std::string, bool> out;
  for (const auto& c : r.checks()) out[c.name] = c.passed();
  return out;
}

struct Named {
  std::string name;
  Bicoalgebroid b;
};

std::vector<Named> criterion1_instances() {
  return {{"group_hopf(Z2)", group_hopf(FiniteGroup::cyclic(2))},
          {"group_hopf(Z3)", group_hopf(FiniteGroup::cyclic(3))},
          {"group_hopf(S3)", group_hopf(FiniteGroup::symmetric3())},
          {"coenveloping(grouplike2)", coenveloping_bico(grouplike_coalgebra(2))},
          {"coenveloping(grouplike3)", coenveloping_bico(grouplike_coalgebra(3))},
          {"groupoid(Z2 on 2 points)", finite_groupoid_bico(action_groupoid(FiniteGroup::cyclic(2), GSet::swap()))}};
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t checks = 0;
  for (const auto& [name, b] : criterion1_instances()) {
    CheckReport r = verify_bicoalgebroid(b);
    checks += r.checks().size();
    o.require(r.passed(), name + " fails " + failed_list(r));
  }
  const double t = seconds_since(t0);
  o.require(t < 60.0, "runtime over 60 s");
  o.note << " 6 instances, " << checks << " checks, " << t << " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const char* gname : {"Z2", "S3"}) {
    const FiniteGroup g = FiniteGroup::by_name(gname);
    for (const Field f : {Field::rationals(), Field::prime(10007)}) {
      const auto t0 = Clock::now();
      Bicoalgebroid h = in_field(group_hopf(g), f);
      BCCData d = in_field(action_groupoid_bcc(g, GSet::regular(g), group_hopf(g)), f, h);
      Bicoalgebroid s = scalar_extension(d, h);
      CheckReport r = verify_bicoalgebroid(s);
      Bicoalgebroid gpd = in_field(finite_groupoid_bico(action_groupoid(g, GSet::regular(g))), f);
      CheckReport cmp = compare_bicoalgebroids(s, gpd, iota_vec(s.n()), iota_vec(s.c()));
      const double t = seconds_since(t0);
      const std::string tag = std::string(gname) + "/" + f.name();
      o.require(r.passed(), tag + " extension fails " + failed_list(r));
      o.require(cmp.passed(), tag + " differs from groupoid at " + failed_list(cmp));
      o.require(t < (f.is_rational() ? 600.0 : 60.0), tag + " too slow");
      o.note << " " << tag << ": dim " << s.n() << ", " << t << " s;";
    }
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const char* gname : {"Z3", "S3"}) {
    const FiniteGroup g = FiniteGroup::by_name(gname);
    Bicoalgebroid h = group_hopf(g);
    BCCData d = conjugation_bcc(g, h);
    CheckReport pre = verify_bcc(d, h);
    o.require(pre.passed(), std::string(gname) + " verify_bcc fails " + failed_list(pre));
    try {
      CheckReport r = verify_bicoalgebroid(scalar_extension(d, h));
      o.require(r.passed(), std::string(gname) + " extension fails " + failed_list(r));
    } catch (const BCCViolation&) {
      CheckReport r = verify_bicoalgebroid(scalar_extension_unchecked(d, h));
      o.require(false, std::string(gname) + " extension refused; ungated candidate " + (r.passed() ? "passes" : "fails " + failed_list(r)));
    }
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 rng(20241);
  std::vector<Coalgebra> bases{grouplike_coalgebra(1), grouplike_coalgebra(2), grouplike_coalgebra(3),
                               dual_group_coalgebra(FiniteGroup::cyclic(2)), dual_group_coalgebra(FiniteGroup::cyclic(3)),
                               testing_support::divided_power(2), testing_support::divided_power(3),
                               testing_support::skew_primitive()};
  std::uniform_int_distribution<int> small(-3, 3);
  std::size_t positive = 0, negative = 0, instances = 0, nontrivial = 0;
  for (std::size_t round = 0; round < 4; ++round) {
    for (const auto& c : bases) {
      const Bicomodule m = random_bicomodule(c, find_grouplikes(c), 4, rng);
      ++instances;
      const Cocenter z = cocenter(m);
      const std::size_t md = m.dim, cd = c.dim;
      // Annihilation oracle: (f ⊗ C)(w) = 0 for every w in the W_M spanning set.
      auto annihilates = [&](const LinMap& f) {
        for (const auto& w : z.w_span) {
          if (!Tensor({md, cd}, w).apply(f, 0).is_zero()) return false;
        }
        return true;
      };
      // Maps killing every relation slice: rows drawn from the annihilator.
      const LinMap rel_rows = LinMap::from_columns(md, z.relations).transpose();
      const Subspace ann = z.relations.empty() ? Subspace::full(md) : kernel(rel_rows);
      const std::size_t r = 1 + rng() % 3;
      std::vector<Scalar> data;
      for (std::size_t i = 0; i < r; ++i) {
        SparseVec row;
        for (const auto& v : ann.basis()) row.axpy(Scalar(small(rng)), v);
        for (std::size_t j = 0; j < md; ++j) data.push_back(row.at(j));
      }
      const LinMap f(r, md, data);
      o.require(annihilates(f), "constructed map does not annihilate W_M");
      try {
        const LinMap fp = factor_through_cocenter(f, m, z);
        o.require(fp * z.zeta == f, "f' o zeta != f");
        // Second section: shift each lifted column by a random element of the relation span.
        const LinMap s = z.quotient.section();
        std::vector<SparseVec> cols;
        for (std::size_t q = 0; q < s.cols(); ++q) {
          SparseVec v = s.column(q);
          for (const auto& rel : z.relations) v.axpy(Scalar(small(rng)), rel);
          cols.push_back(v);
        }
        const LinMap s2 = LinMap::from_columns(md, cols);
        o.require(f * s2 == fp, "factorization depends on the section");
        o.require(rank(z.zeta) == z.quotient.dim(), "zeta not surjective");
        ++positive;
      } catch (const CocenterObstruction& e) {
        o.require(false, std::string("annihilating map obstructed: ") + e.what());
      }
      // Random maps that do not annihilate must be refused. Whenever W_M is
      // nonzero some map fails to kill it, and a random one almost surely does.
      bool w_nonzero = false;
      for (const auto& w : z.w_span) w_nonzero = w_nonzero || !w.is_zero();
      nontrivial += w_nonzero;
      for (int attempt = 0; w_nonzero && attempt < 8; ++attempt) {
        const LinMap g = testing_support::dense(2, md, [&](std::size_t, std::size_t) { return Scalar(small(rng)); });
        if (annihilates(g)) continue;
        try {
          factor_through_cocenter(g, m, z);
          o.require(false, "non-annihilating map factored");
        } catch (const CocenterObstruction&) {
          ++negative;
        }
        break;
      }
    }
  }
  o.require(instances >= 20, "fewer than 20 bicomodules");
  o.require(negative == nontrivial, "a bicomodule with nonzero W_M produced no obstruction");
  o.note << " " << instances << " bicomodules, " << positive << " factorizations, " << negative << " obstructions (" << nontrivial << " with nonzero W_M)";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::vector<Coalgebra> cs{grouplike_coalgebra(1),
                            grouplike_coalgebra(2),
                            grouplike_coalgebra(3),
                            dual_group_coalgebra(FiniteGroup::cyclic(2)),
                            dual_group_coalgebra(FiniteGroup::cyclic(3)),
                            dual_group_coalgebra(FiniteGroup::symmetric3()),
                            dual_group_coalgebra(FiniteGroup::klein()),
                            testing_support::divided_power(3),
                            coopposite(dual_group_coalgebra(FiniteGroup::symmetric3())),
                            tensor_coalgebra(grouplike_coalgebra(2), dual_group_coalgebra(FiniteGroup::cyclic(2))),
                            coenveloping(dual_group_coalgebra(FiniteGroup::cyclic(2))),
                            coenveloping_bico(grouplike_coalgebra(2)).total()};
  for (const auto& c : cs) {
    const std::size_t n = c.dim;
    Subspace cc = cotensor(c.delta, c.delta, n, "C⊠C");
    o.require(cc.dim() == n, c.label + " dim(C⊠C) != dim C");
    if (cc.dim() != n) continue;
    const LinMap into = corestrict(c.delta, cc);                                  // Δ: C -> C⊠C
    const LinMap back = tensor_map(c.counit, LinMap::identity(n)) * cc.inclusion();  // ε⊗C: C⊠C -> C
    o.require(back * into == LinMap::identity(n), c.label + " (ε⊗C)Δ != id");
    o.require(into * back == LinMap::identity(n), c.label + " Δ(ε⊗C) != id on C⊠C");
  }
  std::mt19937_64 rng(55);
  const Coalgebra k = Coalgebra::ground();
  for (int i = 0; i < 6; ++i) {
    Bicomodule m = random_bicomodule(k, find_grouplikes(k), 3, rng);
    Bicomodule nn = random_bicomodule(k, find_grouplikes(k), 3, rng);
    o.require(cotensor(m.rho, nn.lambda, 1).dim() == m.dim * nn.dim, "M⊠N != M⊗N over k");
  }
  o.note << " " << cs.size() << " coalgebras, 6 pairs over k";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(6006);
  const auto groups = small_groups();
  std::size_t agree = 0, yd = 0, non_yd = 0;
  for (int i = 0; i < 50; ++i) {
    const FiniteGroup& g = groups[rng() % groups.size()];
    GSet x = random_gset(g, 6, rng);
    x = x.with_phi(rng() % 2 ? random_yd_phi(g, x, rng) : random_phi(g, x, rng));
    const Bicoalgebroid h = group_hopf(g);
    const BCCData d = linearized_gset(g, x, h);
    const bool linear = verify_yd(d.yd, h).passed();
    const bool set_level = !yd_g_violation(g, x).has_value();
    (set_level ? yd : non_yd)++;
    if (linear == set_level) ++agree;
  }
  o.require(agree == 50, "verify_yd disagrees with the Set-level condition");
  o.require(yd > 0 && non_yd > 0, "random sample missed one of the outcomes");
  // Pre-braidings on every pair and triple of generated YD modules per group.
  std::size_t pairs = 0, triples = 0;
  for (const char* gname : {"Z2", "Z3", "S3"}) {
    const FiniteGroup g = FiniteGroup::by_name(gname);
    const Bicoalgebroid h = group_hopf(g);
    std::vector<YDModule> zs{yd_unit(h), conjugation_bcc(g, h).yd, regular_bcc(g, h).yd};
    for (int tries = 0; zs.size() < 5 && tries < 50; ++tries) {
      GSet x = random_gset(g, 4, rng);
      x = x.with_phi(random_yd_phi(g, x, rng));
      zs.push_back(linearized_gset(g, x, h).yd);
    }
    for (const auto& a : zs) {
      for (const auto& b : zs) {
        CheckReport r = check_prebraiding_morphism(a, b, h);
        o.require(r.passed(), std::string(gname) + " prebraiding " + failed_list(r));
        ++pairs;
        for (const auto& c : zs) {
          CheckReport yb = yang_baxter_check(a, b, c, h);
          o.require(yb.passed(), std::string(gname) + " Yang-Baxter " + failed_list(yb));
          ++triples;
        }
      }
    }
  }
  const Bicoalgebroid ce = coenveloping_bico(grouplike_coalgebra(2));
  const YDModule u = yd_unit(ce);
  o.require(check_prebraiding_morphism(u, u, ce).passed() && yang_baxter_check(u, u, u, ce).passed(), "coenveloping unit");
  o.note << " " << agree << "/50 agree (" << yd << " YD, " << non_yd << " not), " << pairs << " pairs, " << triples << " triples";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& [name, b] : criterion1_instances()) {
    if (name.rfind("groupoid", 0) == 0) continue;
    CheckReport r = verify_bicomonad(b, {Bicomodule::regular(b.base()), regular_bicomodule(b), free_bicomodule(b.base())},
                                     {unit_h_comodule(b), regular_h_comodule(b)});
    checks += r.checks().size();
    o.require(r.passed(), name + " bicomonad " + failed_list(r));
    for (const char* axiom : {"a_delta_kappa", "b_delta_xi", "c_eps_kappa", "d_eps_xi"}) {
      bool seen = false;
      for (const auto& c : r.checks()) seen = seen || c.name.rfind(axiom, 0) == 0;
      o.require(seen, name + " missing " + axiom);
    }
  }
  for (const char* gname : {"Z3", "S3"}) {
    const FiniteGroup g = FiniteGroup::by_name(gname);
    const Bicoalgebroid h = group_hopf(g);
    CheckReport r = verify_opmonoidal_comonad(conjugation_bcc(g, h), h, {unit_h_comodule(h), regular_h_comodule(h)});
    checks += r.checks().size();
    o.require(r.passed(), std::string(gname) + " opmonoidal " + failed_list(r));
    std::size_t inverse = 0;
    for (const auto& c : r.checks()) inverse += c.name.rfind("G2_inverse_", 0) == 0 && c.passed();
    o.require(inverse == 12, std::string(gname) + " G2 inverse checks missing");
  }
  o.note << " " << checks << " checks";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(808);
  std::size_t caught = 0, total = 0;
  for (const auto& [name, b] : criterion1_instances()) {
    for (int i = 0; i < 20; ++i) {
      auto [bad, mutation] = mutate(b, rng);
      CheckReport r = verify_bicoalgebroid(bad);
      ++total;
      bool witnessed = false;
      for (const auto& c : r.checks()) {
        if (!c.passed() && !c.witness->str().empty()) witnessed = true;
      }
      if (witnessed) {
        ++caught;
      } else {
        o.require(false, name + " survives " + mutation.str());
      }
    }
  }
  o.note << " " << caught << "/" << total << " mutations detected";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(909);
  std::vector<Named> inst = criterion1_instances();
  for (const char* gname : {"Z2", "S3"}) {
    const FiniteGroup g = FiniteGroup::by_name(gname);
    const Bicoalgebroid h = group_hopf(g);
    inst.push_back({std::string("extension ") + gname, scalar_extension(action_groupoid_bcc(g, GSet::regular(g), h), h)});
  }
  for (std::size_t i = 0, n = inst.size(); i < n; ++i) inst.push_back({inst[i].name + " mutated", mutate(inst[i].b, rng).first});
  std::size_t compared = 0;
  for (const auto& [name, b] : inst) {
    const auto first = verdicts(verify_bicoalgebroid(b, {11, false, true}));
    const auto second = verdicts(verify_bicoalgebroid(b, {12, true, true}));
    o.require(first == second, name + ": verdicts change under a second μ extension");
    ++compared;
  }
  // Action-dependent checks under a second extension of ◁.
  for (const char* gname : {"Z2", "Z3", "S3"}) {
    const FiniteGroup g = FiniteGroup::by_name(gname);
    const Bicoalgebroid h = group_hopf(g);
    GSet noisy = random_gset(g, 5, rng);
    noisy = noisy.with_phi(random_phi(g, noisy, rng));
    std::vector<BCCData> ds{conjugation_bcc(g, h), regular_bcc(g, h), action_groupoid_bcc(g, GSet::regular(g), h),
                            linearized_gset(g, noisy, h)};
    for (const auto& d : ds) {
      BCCData d2 = d;
      d2.yd = with_random_action_extension(d.yd, rng);
      o.require(verdicts(verify_bcc(d, h)) == verdicts(verify_bcc(d2, h)), std::string(gname) + " verify_bcc verdicts change");
      o.require(verdicts(check_prebraiding_morphism(d.yd, d.yd, h)) == verdicts(check_prebraiding_morphism(d2.yd, d2.yd, h)),
                std::string(gname) + " prebraiding verdicts change");
      compared += 2;
    }
    // The extension built from the second action extension is the same bicoalgebroid.
    const BCCData d = ds[2];
    BCCData d2 = d;
    d2.yd = with_random_action_extension(d.yd, rng);
    const Bicoalgebroid s1 = scalar_extension(d, h), s2 = scalar_extension(d2, h);
    o.require(compare_bicoalgebroids(s1, s2, iota_vec(s1.n()), iota_vec(s1.c())).passed(), std::string(gname) + " extension depends on ◁ off domain");
    ++compared;
  }
  o.note << " " << compared << " verdict comparisons";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"bicoalgebroid axioms on the standard instances", criterion1},
      {"scalar extension reproduces the action groupoid", criterion2},
      {"conjugation BCC and its scalar extension", criterion3},
      {"cocenter universal property", criterion4},
      {"cotensor unit laws", criterion5},
      {"YD verdicts, pre-braidings, Yang-Baxter", criterion6},
      {"bicomonad and opmonoidal comonad diagrams", criterion7},
      {"mutation sensitivity", criterion8},
      {"extension independence", criterion9},
  };
  std::size_t only = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 0;
  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && only != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << " [exception: " << e.what() << "]";
    }
    all_pass = all_pass && o.pass;
    std::cout << "CRITERION " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " --" << o.note.str()
              << std::endl;
  }
  return all_pass ? 0 : 1;
}
