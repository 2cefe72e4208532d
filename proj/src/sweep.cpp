#include "mvgamma/sweep.hpp"

#include <algorithm>
#include <map>

#include "mvgamma/errors.hpp"
#include "mvgamma/json_io.hpp"

namespace mvg {

namespace {

const std::vector<std::string>& suite_order() {
  static const std::vector<std::string> order{
      "mv_axioms",    "spectrum",          "star_roundtrip", "chang_group",    "chain_roundtrip",
      "morphism_search", "iota_naturality", "chain_star_morphism", "functoriality", "lmap",
      "upsilon_naturality", "upsilon",     "theorem1",       "segment_generation", "good_sequences",
      "free_quotient"};
  return order;
}

// Collects reports per suite name and emits them in suite_order().
class Collector {
 public:
  void add(const CheckReport& r) {
    auto [it, fresh] = suites_.try_emplace(r.name, CheckReport{r.name, 0, {}});
    (void)fresh;
    it->second.absorb(r);
  }
  void add(const std::vector<CheckReport>& rs) {
    for (const CheckReport& r : rs) add(r);
  }
  std::vector<CheckReport> finish() const {
    std::vector<CheckReport> out;
    for (const std::string& name : suite_order()) {
      auto it = suites_.find(name);
      if (it != suites_.end()) out.push_back(it->second);
    }
    for (const auto& [name, r] : suites_)
      if (std::find(suite_order().begin(), suite_order().end(), name) == suite_order().end()) out.push_back(r);
    return out;
  }

 private:
  std::map<std::string, CheckReport> suites_;
};

CheckReport free_quotient_check(const StarAlgebra& star) {
  CheckReport r{"free_quotient", 0, {}};
  const SNFReport with_zero = free_quotient_experiment(star, true);
  const SNFReport keep_zero = free_quotient_experiment(star, false);
  const auto witness = [&] {
    return Json{{"algebra", algebra_to_json(star.source)},
                {"identify_zero", snf_report_to_json(with_zero)},
                {"keep_zero", snf_report_to_json(keep_zero)}};
  };
  r.expect(with_zero.isomorphic, "Free(|A|)/~ with e_0 = 0 matches A*", witness);
  r.expect(with_zero.star_factors.size() == star.spectrum.primes.size(), "A* is free of rank |Sp(A)|", witness);
  r.expect(!keep_zero.isomorphic, "without e_0 = 0 an extra free generator remains", witness);
  return r;
}

}  // namespace

std::vector<ProductLuGroup> representable_family(int max_fibers, int max_chain, Int max_unit_height) {
  std::vector<std::pair<int, Int>> choices;
  for (int n = 1; n <= max_chain; ++n)
    for (Int h = 1; h <= max_unit_height; ++h) choices.emplace_back(n, h);

  std::vector<ProductLuGroup> out;
  for (int k = 1; k <= max_fibers; ++k) {
    std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
    while (true) {
      std::vector<ChangChainGroup> fibers;
      GroupElement unit;
      for (std::size_t c : pick) {
        fibers.emplace_back(make_chain(choices[c].first));
        unit.coords.push_back(fibers.back().delinearize(choices[c].second));
      }
      out.emplace_back(std::move(fibers), std::move(unit));
      std::size_t i = pick.size();
      while (i > 0 && ++pick[i - 1] == choices.size()) pick[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

std::vector<CheckReport> algebra_suites(const FiniteMVAlgebra& alg, const SweepConfig& config) {
  std::vector<CheckReport> out;
  out.push_back(axiom_check(alg));
  if (!out.back().ok()) return out;
  out.push_back(spectrum_check(alg));
  out.push_back(star_roundtrip_check(alg));
  if (alg.is_totally_ordered()) {
    if (alg.size() - 1 <= config.chang_max_chain) out.push_back(chain_group_check(star_chain(alg), config.window));
    out.push_back(chain_roundtrip_check(alg, config.window));
  }
  if (alg.size() <= config.free_quotient_max_size) out.push_back(free_quotient_check(star_algebra(alg)));
  return out;
}

std::vector<CheckReport> group_suites(const ProductLuGroup& g, const SweepConfig& config) {
  std::vector<CheckReport> out;
  const Upsilon ups(g);
  out.push_back(verify_upsilon(ups, config.window));
  out.push_back(theorem1_checks(ups.segment()));
  out.push_back(segment_generation_check(ups.segment(), config.window));
  out.push_back(good_sequence_check(ups.segment(), config.window));
  return out;
}

std::vector<CheckReport> run_sweep(const SweepConfig& config) {
  Collector c;
  const std::vector<NamedAlgebra> algebras = generate_algebras(config.max_size, config.max_size - 1);
  std::vector<StarAlgebra> stars;
  for (const NamedAlgebra& a : algebras) {
    c.add(algebra_suites(a.algebra, config));
    stars.push_back(star_algebra(a.algebra));
  }

  // morphisms[i][j]: all maps algebras[i] → algebras[j]
  const std::size_t k = algebras.size();
  std::vector<std::vector<std::vector<MVMorphism>>> morphisms(k, std::vector<std::vector<MVMorphism>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      MorphismSearch s = enumerate_morphisms(algebras[i].algebra, algebras[j].algebra, config.morphism_cap);
      CheckReport r{"morphism_search", 0, {}};
      r.expect(!s.capped, "search completes within the candidate cap",
               [&] { return Json{{"dom", algebras[i].name}, {"cod", algebras[j].name}}; });
      for (const MVMorphism& h : s.found)
        r.expect(check_morphism(h).ok(), "found maps are morphisms", [&] { return morphism_to_json(h); });
      c.add(r);
      morphisms[i][j] = std::move(s.found);
    }

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (const MVMorphism& h : morphisms[i][j]) {
        c.add(iota_naturality_check(h, stars[i], stars[j], config.lattice_window));
        if (h.dom.is_totally_ordered() && h.cod.is_totally_ordered()) c.add(chain_star_morphism_check(h, config.window));
        for (std::size_t l = 0; l < k; ++l)
          for (const MVMorphism& h2 : morphisms[j][l])
            c.add(functoriality_check(h, h2, stars[i], stars[j], stars[l], config.lattice_window));
      }

  for (const ProductLuGroup& g : representable_family(config.max_group_fibers, config.max_group_chain, config.max_unit_height))
    c.add(group_suites(g, config));

  const std::vector<ProductLuGroup> lgroups =
      representable_family(config.lmap_group_fibers, config.lmap_group_chain, config.max_unit_height);
  std::vector<Upsilon> upsilons;
  for (const ProductLuGroup& g : lgroups) upsilons.emplace_back(g);
  for (std::size_t i = 0; i < lgroups.size(); ++i)
    for (std::size_t j = 0; j < lgroups.size(); ++j)
      for (const UnitalLMap& phi : enumerate_unital_lmaps(lgroups[i], lgroups[j])) {
        c.add(lmap_check(phi, config.lattice_window));
        c.add(upsilon_naturality_check(phi, upsilons[i], upsilons[j], config.window));
      }
  return c.finish();
}

}  // namespace mvg
