#include "mvgamma/free_quotient.hpp"

#include <algorithm>

namespace mvg {

namespace {

std::vector<Int> drop_units(std::vector<Int> factors) {
  factors.erase(std::remove(factors.begin(), factors.end(), Int{1}), factors.end());
  return factors;
}

}  // namespace

IntMatrix relation_matrix(const FiniteMVAlgebra& alg, bool identify_zero) {
  const auto n = static_cast<std::size_t>(alg.size());
  IntMatrix rows;
  for (Elem a = 0; a < alg.size(); ++a)
    for (Elem b = a; b < alg.size(); ++b) {
      std::vector<Int> row(n, 0);
      row[static_cast<std::size_t>(a)] += 1;
      row[static_cast<std::size_t>(b)] += 1;
      row[static_cast<std::size_t>(alg.oplus(a, b))] -= 1;
      row[static_cast<std::size_t>(alg.odot(a, b))] -= 1;
      rows.push_back(std::move(row));
    }
  if (identify_zero) {
    std::vector<Int> row(n, 0);
    row[0] = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

SNFReport free_quotient_experiment(const StarAlgebra& star, bool identify_zero) {
  const FiniteMVAlgebra& alg = star.source;
  SNFReport r;
  r.identify_zero = identify_zero;
  const IntMatrix relations = relation_matrix(alg, identify_zero);
  r.relation_rows = relations.size();
  r.relation_cols = static_cast<std::size_t>(alg.size());
  r.free_factors = cokernel_factors(smith_normal_form(relations, r.relation_cols));

  IntMatrix generators;
  for (const GroupElement& x : star.a_circle) generators.push_back(star.ambient.linearize(x));
  const SmithForm g = smith_normal_form(generators, star.ambient.fiber_count());
  r.star_factors.assign(g.rank(), 0);
  r.star_index_factors = g.invariant_factors;

  r.isomorphic = drop_units(r.free_factors) == drop_units(r.star_factors);
  return r;
}

SNFReport free_quotient_experiment(const FiniteMVAlgebra& alg, bool identify_zero) {
  return free_quotient_experiment(star_algebra(alg), identify_zero);
}

nlohmann::ordered_json snf_report_to_json(const SNFReport& r) {
  nlohmann::ordered_json j;
  j["free_factors"] = r.free_factors;
  j["star_factors"] = r.star_factors;
  j["isomorphic"] = r.isomorphic;
  j["identify_zero"] = r.identify_zero;
  j["relation_rows"] = r.relation_rows;
  j["relation_cols"] = r.relation_cols;
  j["star_index_factors"] = r.star_index_factors;
  return j;
}

}  // namespace mvg
