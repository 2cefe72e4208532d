#include <doctest.h>

#include <limits>

#include "mvgamma/checks.hpp"
#include "oracles.hpp"

using namespace mvg;

namespace {

GroupElement el(std::initializer_list<ChangPair> c) { return GroupElement{GroupElement::Coords(c.begin(), c.end())}; }

// Z^k with the given integer unit, as a product of (Ł1)* fibers.
ProductLuGroup integers(std::vector<Int> unit) {
  std::vector<ChangPair> u;
  for (Int v : unit) u.push_back({v, 0});
  return make_chain_product_group(std::vector<int>(unit.size(), 1), u);
}

GroupElement ints(std::initializer_list<Int> v) {
  GroupElement x;
  for (Int m : v) x.coords.push_back({m, 0});
  return x;
}

}  // namespace

TEST_SUITE("lgroup_core") {
  TEST_CASE("carry arithmetic in (Ł2)*") {
    const ChangChainGroup g(make_chain(2));
    CHECK(g.add({0, 1}, {0, 1}) == ChangPair{1, 0});
    CHECK(g.neg({0, 1}) == ChangPair{-1, 1});
    CHECK(g.unit() == ChangPair{1, 0});
    for (Int m = -3; m <= 3; ++m)
      for (Elem a = 0; a < 2; ++a) CHECK(g.add({m, a}, g.zero()) == ChangPair{m, a});
  }

  TEST_CASE("normalization identifies (m, top) with (m + 1, 0)") {
    const ChangChainGroup g(make_chain(3));
    CHECK(g.normalize(4, 3) == ChangPair{5, 0});
    CHECK(g.normalize(-1, 2) == ChangPair{-1, 2});
    CHECK(g.is_normalized({0, 2}));
    CHECK_FALSE(g.is_normalized({0, 3}));
    CHECK_THROWS_AS(g.normalize(0, 4), DomainError);
    CHECK_THROWS_AS(ChangChainGroup(make_product(make_chain(1), make_chain(1))), DomainError);
  }

  TEST_CASE("chain arithmetic matches integer arithmetic") {
    for (int n = 1; n <= 5; ++n) {
      const ChangChainGroup g(make_chain(n));
      for (Int v = -15; v <= 15; ++v) {
        const ChangPair x = oracle::chain_pair(n, v);
        CHECK(g.linearize(x) == v);
        CHECK(g.delinearize(v) == x);
        CHECK(g.neg(x) == oracle::chain_pair(n, -v));
        for (Int k = 0; k <= 4; ++k) CHECK(g.scale(x, k) == oracle::chain_pair(n, k * v));
        for (Int w = -15; w <= 15; ++w) {
          const ChangPair y = oracle::chain_pair(n, w);
          CHECK(g.add(x, y) == oracle::chain_pair(n, v + w));
          CHECK(g.sub(x, y) == oracle::chain_pair(n, v - w));
          CHECK(g.leq(x, y) == (v <= w));
          CHECK(g.meet(x, y) == oracle::chain_pair(n, std::min(v, w)));
          CHECK(g.join(x, y) == oracle::chain_pair(n, std::max(v, w)));
        }
      }
    }
  }

  TEST_CASE("unnormalized carries agree after normalization") {
    for (int n = 1; n <= 5; ++n) {
      const ChangChainGroup g(make_chain(n));
      for (Int m1 = -2; m1 <= 2; ++m1)
        for (Elem a = 0; a <= n; ++a)
          for (Int m2 = -2; m2 <= 2; ++m2)
            for (Elem b = 0; b <= n; ++b) {
              const ChangPair raw = g.add_raw({m1, a}, {m2, b});
              CHECK(g.normalize(raw.m, raw.a) == g.add(g.normalize(m1, a), g.normalize(m2, b)));
            }
    }
  }

  TEST_CASE("arithmetic overflow is an error") {
    const ChangChainGroup g(make_chain(1));
    const Int big = std::numeric_limits<Int>::max();
    CHECK_THROWS_AS(g.add({big, 0}, {1, 0}), OverflowError);
    CHECK_THROWS_AS(g.neg({std::numeric_limits<Int>::min(), 0}), OverflowError);
    CHECK_THROWS_AS(ChangChainGroup(make_chain(2)).linearize({big, 0}), OverflowError);
    CHECK_THROWS_AS(make_chain_product_group({2}, {{big, 1}}).scale(el({{big, 1}}), 3), OverflowError);
  }

  TEST_CASE("chain group suite for Ł1..Ł5") {
    for (int n = 1; n <= 5; ++n) {
      const CheckReport r = chain_group_check(ChangChainGroup(make_chain(n)), 4);
      CHECK(r.ok());
      CHECK(r.cases > 0);
    }
  }

  TEST_CASE("product groups and strong units") {
    const ProductLuGroup z2 = integers({1, 2});
    CHECK(z2.fiber_count() == 2);
    CHECK(z2.unit() == ints({1, 2}));
    CHECK_THROWS_AS(integers({1, 0}), DomainError);
    CHECK_THROWS_AS(integers({1, -1}), DomainError);
    CHECK_THROWS_AS(make_chain_product_group({}, {}), DomainError);
    CHECK_THROWS_AS(make_chain_product_group({1, 1}, {{1, 0}}), DomainError);
    CHECK_THROWS_AS(make_chain_product_group({2}, {{0, 2}}), DomainError);
    CHECK_THROWS_AS(z2.validate(ints({1})), DomainError);
    CHECK_THROWS_AS(make_chain_product_group({2}, {{1, 0}}).validate(el({{0, 2}})), DomainError);
  }

  TEST_CASE("pointwise lattice and order") {
    const ProductLuGroup z2 = integers({1, 1});
    CHECK(z2.meet(ints({1, 0}), ints({0, 1})) == ints({0, 0}));
    CHECK(z2.join(ints({1, 0}), ints({0, 1})) == ints({1, 1}));
    CHECK_FALSE(z2.leq(ints({1, 0}), ints({0, 1})));
    CHECK_FALSE(z2.leq(ints({0, 1}), ints({1, 0})));
    CHECK(z2.add(ints({3, -1}), ints({-1, 4})) == ints({2, 3}));
    CHECK(z2.sub(ints({3, -1}), ints({-1, 4})) == ints({4, -5}));
    CHECK(z2.neg(ints({3, -1})) == ints({-3, 1}));

    const ProductLuGroup g = make_chain_product_group({1, 2}, {{1, 0}, {1, 0}});
    const std::vector<GroupElement> w = window(g, 1);
    for (const GroupElement& x : w)
      for (const GroupElement& y : w) {
        const GroupElement m = g.meet(x, y), j = g.join(x, y);
        CHECK(g.leq(m, x));
        CHECK(g.leq(m, y));
        CHECK(g.leq(x, j));
        CHECK(g.leq(y, j));
        for (const GroupElement& z : w) {
          if (g.leq(z, x) && g.leq(z, y)) CHECK(g.leq(z, m));
          if (g.leq(x, z) && g.leq(y, z)) CHECK(g.leq(j, z));
        }
      }
  }

  TEST_CASE("positive and negative parts") {
    const ProductLuGroup z = integers({1});
    const AbsDecomposition zero = abs_decompose(z, ints({0}));
    CHECK(zero.plus == ints({0}));
    CHECK(zero.minus == ints({0}));
    CHECK(zero.abs == ints({0}));
    const AbsDecomposition m5 = abs_decompose(z, ints({-5}));
    CHECK(m5.plus == ints({0}));
    CHECK(m5.minus == ints({5}));
    CHECK(m5.abs == ints({5}));
    const AbsDecomposition d = abs_decompose(integers({1, 1}), ints({3, -2}));
    CHECK(d.plus == ints({3, 0}));
    CHECK(d.minus == ints({0, 2}));
    CHECK(d.abs == ints({3, 2}));

    const ProductLuGroup g = make_chain_product_group({2, 3}, {{1, 0}, {0, 2}});
    for (const GroupElement& x : window(g, 2)) {
      const AbsDecomposition a = abs_decompose(g, x);
      CHECK(g.sub(a.plus, a.minus) == x);
      CHECK(g.meet(a.plus, a.minus) == g.zero());
      CHECK(g.add(a.plus, a.minus) == a.abs);
      CHECK(g.leq(g.zero(), a.abs));
    }
  }

  TEST_CASE("unit bounds") {
    CHECK(unit_bound(integers({2}), ints({0})) == 0);
    CHECK(unit_bound(integers({2}), ints({-5})) == 3);
    CHECK(unit_bound(integers({2}), ints({4})) == 2);
    CHECK(unit_bound(make_chain_product_group({2}, {{0, 1}}), el({{2, 0}})) == 4);
    CHECK(unit_bound(integers({1, 3}), ints({2, -7})) == 3);
  }

  TEST_CASE("Γ segments") {
    const GammaSegment z1 = gamma_segment(integers({1}));
    CHECK(z1.algebra == make_chain(1));

    const GammaSegment z3 = gamma_segment(integers({3}));
    REQUIRE(z3.algebra.size() == 4);
    const Elem one = z3.index_of(ints({1})), two = z3.index_of(ints({2})), three = z3.index_of(ints({3}));
    CHECK(z3.algebra.oplus(two, two) == three);
    CHECK(z3.algebra.neg(one) == two);
    CHECK(find_isomorphism(z3.algebra, make_chain(3)).has_value());
    CHECK_THROWS_AS(z3.index_of(ints({4})), DomainError);
    CHECK_FALSE(z3.find(ints({-1})).has_value());

    const GammaSegment z12 = gamma_segment(integers({1, 2}));
    CHECK(z12.algebra.size() == 6);
    CHECK(check_mv_axioms(z12.algebra).ok());
    CHECK(oracle::isomorphic_by_permutation(z12.algebra, make_product(make_chain(1), make_chain(2))));
    for (Elem e = 0; e < z12.algebra.size(); ++e) CHECK(z12.index_of(z12.element_of(e)) == e);
    CHECK(z12.element_of(0) == ints({0, 0}));
  }

  TEST_CASE("segments of star chains recover the chain") {
    for (int n = 1; n <= 8; ++n) {
      const GammaSegment s = gamma_segment(make_chain_product_group({n}, {{1, 0}}));
      CHECK(s.algebra == make_chain(n));
      for (Elem a = 0; a < n; ++a) CHECK(s.element_of(a) == el({{0, a}}));
    }
  }

  TEST_CASE("group spectra") {
    CHECK(group_spectrum(integers({1})).size() == 1);
    const std::vector<CoordinateIdeal> z2 = group_spectrum(integers({1, 1}));
    REQUIRE(z2.size() == 2);
    CHECK(z2[0].contains(ints({0, 5})));
    CHECK_FALSE(z2[0].contains(ints({1, 0})));
    CHECK(z2[1].contains(ints({5, 0})));
    CHECK(group_spectrum(make_chain_product_group({2, 1, 1}, {{1, 0}, {1, 0}, {1, 0}})).size() == 3);

    const std::vector<CoordinateIdeal> all = coordinate_ideals(integers({1, 1, 1}));
    CHECK(all.size() == 8);
    CHECK_FALSE(all.back().is_proper());
    CHECK(all.front().is_proper());
    CHECK(all.front().contains(ints({0, 0, 0})));
    CHECK_FALSE(all.front().contains(ints({0, 1, 0})));
  }

  TEST_CASE("windows") {
    const std::vector<GroupElement> w = window(integers({1}), 2);
    REQUIRE(w.size() == 5);
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(w[i] == ints({static_cast<Int>(i) - 2}));
    const ProductLuGroup g = make_chain_product_group({2, 1}, {{0, 1}, {2, 0}});
    const std::vector<GroupElement> w2 = window(g, 2);
    CHECK(w2.size() == 5 * 9);
    for (const GroupElement& x : w2) CHECK(unit_bound(g, x) <= 2);
    for (std::size_t i = 1; i < w2.size(); ++i) CHECK(g.linearize(w2[i - 1]) < g.linearize(w2[i]));
    const std::vector<GroupElement> p = positive_window(g, 2);
    CHECK(p.size() == 3 * 5);
    for (const GroupElement& x : p) CHECK(g.leq(g.zero(), x));
  }
}
