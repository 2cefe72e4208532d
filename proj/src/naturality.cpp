#include "mvgamma/checks.hpp"

#include <functional>

#include "mvgamma/errors.hpp"
#include "mvgamma/json_io.hpp"

namespace mvg {

namespace {

Json pair_json(const ChangPair& p) { return Json{{"m", p.m}, {"a", p.a}}; }

Json lmap_json(const UnitalLMap& phi) {
  return Json{{"dom", group_to_json(phi.dom)},
              {"cod", group_to_json(phi.cod)},
              {"source_fiber", phi.source_fiber},
              {"multiplier", phi.multiplier}};
}

void check_lattice_map(CheckReport& r, const ProductLuGroup& dom, const ProductLuGroup& cod,
                       const std::vector<GroupElement>& sample,
                       const std::function<GroupElement(const GroupElement&)>& f, const std::function<Json()>& context) {
  for (const GroupElement& x : sample)
    for (const GroupElement& y : sample) {
      const GroupElement fx = f(x), fy = f(y);
      const auto witness = [&] { return Json{{"map", context()}, {"x", element_to_json(x)}, {"y", element_to_json(y)}}; };
      r.expect(f(dom.add(x, y)) == cod.add(fx, fy), "additive", witness);
      r.expect(f(dom.meet(x, y)) == cod.meet(fx, fy), "preserves meets", witness);
      r.expect(f(dom.join(x, y)) == cod.join(fx, fy), "preserves joins", witness);
    }
}

}  // namespace

GroupElement UnitalLMap::operator()(const GroupElement& x) const {
  const std::vector<Int> lin = dom.linearize(x);
  std::vector<Int> out;
  out.reserve(source_fiber.size());
  for (std::size_t j = 0; j < source_fiber.size(); ++j) out.push_back(checked_mul(multiplier[j], lin.at(source_fiber[j])));
  return cod.delinearize(out);
}

std::vector<UnitalLMap> enumerate_unital_lmaps(const ProductLuGroup& g, const ProductLuGroup& h) {
  const std::vector<Int> u = g.linearize(g.unit());
  const std::vector<Int> v = h.linearize(h.unit());
  std::vector<std::vector<std::size_t>> choices(v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t s = 0; s < u.size(); ++s)
      if (v[j] % u[s] == 0) choices[j].push_back(s);

  std::vector<UnitalLMap> maps;
  std::vector<std::size_t> pick(v.size(), 0);
  for (const auto& c : choices)
    if (c.empty()) return maps;
  while (true) {
    UnitalLMap phi{g, h, {}, {}};
    for (std::size_t j = 0; j < v.size(); ++j) {
      const std::size_t s = choices[j][pick[j]];
      phi.source_fiber.push_back(s);
      phi.multiplier.push_back(v[j] / u[s]);
    }
    maps.push_back(std::move(phi));
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == choices[j].size()) pick[j++] = 0;
    if (j == pick.size()) break;
  }
  return maps;
}

MVMorphism gamma_of(const UnitalLMap& phi, const GammaSegment& gs, const GammaSegment& hs) {
  std::vector<Elem> map;
  for (Elem e = 0; e < gs.algebra.size(); ++e) {
    const auto image = hs.find(phi(gs.element_of(e)));
    if (!image) throw DomainError("map does not send [0, u] into [0, v]");
    map.push_back(*image);
  }
  return MVMorphism(gs.algebra, hs.algebra, std::move(map));
}

CheckReport lmap_check(const UnitalLMap& phi, Int bound) {
  CheckReport r{"lmap", 0, {}};
  r.expect(phi(phi.dom.unit()) == phi.cod.unit(), "unital", [&] { return lmap_json(phi); });
  check_lattice_map(r, phi.dom, phi.cod, window(phi.dom, bound), phi, [&] { return lmap_json(phi); });
  return r;
}

CheckReport chain_star_morphism_check(const MVMorphism& h, Int bound) {
  CheckReport r{"chain_star_morphism", 0, {}};
  const ChainStarMorphism hs = star_chain_morphism(h);
  const auto context = [&] { return morphism_to_json(h); };
  r.expect(hs(hs.dom.unit()) == hs.cod.unit(), "h* is unital", context);

  const Int ratio = hs.cod.order() / hs.dom.order();
  std::vector<ChangPair> w;
  for (Int m = -bound; m <= bound; ++m)
    for (int k = 0; k < hs.dom.order(); ++k) w.push_back({m, hs.dom.at_height(k)});
  for (const ChangPair& x : w) {
    const ChangPair fx = hs(x);
    const auto wx = [&] { return Json{{"map", context()}, {"x", pair_json(x)}}; };
    r.expect(fx == hs.cod.normalize(x.m, h(x.a)), "h*(n, a) = (n, h(a))", wx);
    r.expect(hs.cod.linearize(fx) == ratio * hs.dom.linearize(x), "h* is multiplication by the order ratio", wx);
    for (const ChangPair& y : w) {
      const auto wxy = [&] { return Json{{"map", context()}, {"x", pair_json(x)}, {"y", pair_json(y)}}; };
      r.expect(hs(hs.dom.add(x, y)) == hs.cod.add(fx, hs(y)), "h* is additive", wxy);
      if (hs.dom.leq(x, y)) r.expect(hs.cod.leq(fx, hs(y)), "h* is order preserving", wxy);
    }
  }
  return r;
}

CheckReport iota_naturality_check(const MVMorphism& h, const StarAlgebra& dom, const StarAlgebra& cod, Int bound) {
  CheckReport r{"iota_naturality", 0, {}};
  const StarMorphism hs = star_morphism(h, dom, cod);
  const auto context = [&] { return morphism_to_json(h); };
  for (Elem a = 0; a < h.dom.size(); ++a)
    r.expect(hs(dom.iota(a)) == cod.iota(h(a)), "h* iota a = iota h(a)", [&] { return Json{{"map", context()}, {"a", a}}; });
  r.expect(hs(dom.unit()) == cod.unit(), "h* is unital", context);
  check_lattice_map(r, dom.ambient, cod.ambient, window(dom.ambient, bound), hs, context);
  return r;
}

CheckReport upsilon_naturality_check(const UnitalLMap& phi, const Upsilon& g, const Upsilon& h, Int bound) {
  CheckReport r{"upsilon_naturality", 0, {}};
  const MVMorphism gphi = gamma_of(phi, g.segment(), h.segment());
  r.expect(check_morphism(gphi).ok(), "Gamma of an l-map is an MV-morphism", [&] { return lmap_json(phi); });
  if (!r.ok()) return r;
  const StarMorphism star = star_morphism(gphi, g.star(), h.star());
  for (const GroupElement& sigma : window(g.star().ambient, bound)) {
    if (!star_membership(g.star(), sigma)) continue;
    r.expect(phi(g.apply(sigma)) == h.apply(star(sigma)), "phi upsilon = upsilon (Gamma phi)*",
             [&] { return Json{{"map", lmap_json(phi)}, {"sigma", element_to_json(sigma)}}; });
  }
  return r;
}

CheckReport functoriality_check(const MVMorphism& h1, const MVMorphism& h2, const StarAlgebra& a, const StarAlgebra& b,
                                const StarAlgebra& c, Int bound) {
  CheckReport r{"functoriality", 0, {}};
  const StarMorphism s1 = star_morphism(h1, a, b);
  const StarMorphism s2 = star_morphism(h2, b, c);
  const StarMorphism s12 = star_morphism(compose(h1, h2), a, c);
  for (const GroupElement& sigma : window(a.ambient, bound))
    r.expect(s12(sigma) == s2(s1(sigma)), "(h2 h1)* = h2* h1*", [&] {
      return Json{{"h1", morphism_to_json(h1)}, {"h2", morphism_to_json(h2)}, {"sigma", element_to_json(sigma)}};
    });
  return r;
}

CheckReport naturality_and_functoriality_check(const MVMorphism& h, Int bound) {
  CheckReport r{"naturality", 0, {}};
  const StarAlgebra dom = star_algebra(h.dom);
  const StarAlgebra cod = star_algebra(h.cod);
  r.absorb(iota_naturality_check(h, dom, cod, bound));
  if (h.dom.is_totally_ordered() && h.cod.is_totally_ordered()) r.absorb(chain_star_morphism_check(h, bound));
  r.absorb(functoriality_check(identity_morphism(h.dom), h, dom, dom, cod, bound));
  r.absorb(functoriality_check(h, identity_morphism(h.cod), dom, cod, cod, bound));
  return r;
}

CheckReport naturality_and_functoriality_check(const UnitalLMap& phi, Int bound) {
  CheckReport r{"naturality", 0, {}};
  r.absorb(lmap_check(phi, bound));
  const Upsilon g(phi.dom);
  const Upsilon h(phi.cod);
  r.absorb(upsilon_naturality_check(phi, g, h, bound));
  return r;
}

}  // namespace mvg
