#include "mvgamma/lgroup.hpp"

#include <algorithm>

#include "mvgamma/errors.hpp"

namespace mvg {

namespace {

constexpr std::size_t kMaxSegmentSize = 4096;
constexpr std::size_t kMaxWindowSize = 10'000'000;

}  // namespace

ChangChainGroup::ChangChainGroup(FiniteMVAlgebra chain) : chain_(std::move(chain)) {
  by_height_ = chain_.chain_order();  // throws on non-chains
  height_.resize(by_height_.size());
  for (std::size_t h = 0; h < by_height_.size(); ++h) height_[static_cast<std::size_t>(by_height_[h])] = static_cast<int>(h);
}

void ChangChainGroup::out_of_range(const ChangPair& x) const {
  throw DomainError("pair component " + std::to_string(x.a) + " outside the chain");
}

ChangPair ChangChainGroup::normalize(Int m, Elem a) const {
  check({m, a});
  if (a == chain_.top()) return {checked_add(m, 1), chain_.zero()};
  return {m, a};
}

bool ChangChainGroup::is_normalized(const ChangPair& x) const { return x.a >= 0 && x.a < chain_.size() && x.a != chain_.top(); }

ChangPair ChangChainGroup::add_raw(const ChangPair& x, const ChangPair& y) const {
  check(x);
  check(y);
  const Elem s = chain_.oplus(x.a, y.a);
  if (s != chain_.top()) return {checked_add(x.m, y.m), s};
  return {checked_add(checked_add(x.m, y.m), 1), chain_.odot(x.a, y.a)};
}

ChangPair ChangChainGroup::add(const ChangPair& x, const ChangPair& y) const {
  ChangPair r = add_raw(x, y);
  return normalize(r.m, r.a);
}

ChangPair ChangChainGroup::neg(const ChangPair& x) const {
  check(x);
  return normalize(checked_sub(checked_neg(x.m), 1), chain_.neg(x.a));
}

std::strong_ordering ChangChainGroup::compare(const ChangPair& x, const ChangPair& y) const {
  check(x);
  check(y);
  if (x.m != y.m) return x.m <=> y.m;
  return height(x.a) <=> height(y.a);
}

ChangPair ChangChainGroup::scale(const ChangPair& x, Int k) const {
  ChangPair base = k < 0 ? neg(x) : x;
  // k = INT64_MIN cannot be negated; it overflows any realistic group anyway.
  Int e = k < 0 ? checked_neg(k) : k;
  ChangPair acc = zero();
  while (e > 0) {
    if (e & 1) acc = add(acc, base);
    e >>= 1;
    if (e > 0) base = add(base, base);
  }
  return acc;
}

Int ChangChainGroup::linearize(const ChangPair& x) const {
  check(x);
  return checked_add(checked_mul(x.m, order()), height(x.a));
}

ChangPair ChangChainGroup::delinearize(Int v) const {
  const Int n = order();
  return {floor_div(v, n), at_height(static_cast<int>(floor_mod(v, n)))};
}

ProductLuGroup::ProductLuGroup(std::vector<ChangChainGroup> fibers, GroupElement unit)
    : fibers_(std::move(fibers)), unit_(std::move(unit)) {
  if (fibers_.empty()) throw DomainError("product group needs at least one fiber");
  validate(unit_);
  for (std::size_t i = 0; i < fibers_.size(); ++i)
    if (!(fibers_[i].compare(fibers_[i].zero(), unit_.coords[i]) == std::strong_ordering::less))
      throw DomainError("unit is not strictly positive in fiber " + std::to_string(i) + ", so it is not a strong unit");
}

void ProductLuGroup::validate(const GroupElement& x) const {
  if (x.coords.size() != fibers_.size())
    throw DomainError("element has " + std::to_string(x.coords.size()) + " coordinates, group has " + std::to_string(fibers_.size()) + " fibers");
  for (std::size_t i = 0; i < fibers_.size(); ++i)
    if (!fibers_[i].is_normalized(x.coords[i])) throw DomainError("coordinate " + std::to_string(i) + " is not a normalized pair of its fiber");
}

GroupElement ProductLuGroup::zero() const { return GroupElement{GroupElement::Coords(fibers_.size())}; }

GroupElement ProductLuGroup::add(const GroupElement& x, const GroupElement& y) const {
  GroupElement r;
  r.coords.reserve(fibers_.size());
  for (std::size_t i = 0; i < fibers_.size(); ++i) r.coords.push_back(fibers_[i].add(x.coords.at(i), y.coords.at(i)));
  return r;
}

GroupElement ProductLuGroup::neg(const GroupElement& x) const {
  GroupElement r;
  r.coords.reserve(fibers_.size());
  for (std::size_t i = 0; i < fibers_.size(); ++i) r.coords.push_back(fibers_[i].neg(x.coords.at(i)));
  return r;
}

GroupElement ProductLuGroup::sub(const GroupElement& x, const GroupElement& y) const { return add(x, neg(y)); }

GroupElement ProductLuGroup::meet(const GroupElement& x, const GroupElement& y) const {
  GroupElement r;
  r.coords.reserve(fibers_.size());
  for (std::size_t i = 0; i < fibers_.size(); ++i) r.coords.push_back(fibers_[i].meet(x.coords.at(i), y.coords.at(i)));
  return r;
}

GroupElement ProductLuGroup::join(const GroupElement& x, const GroupElement& y) const {
  GroupElement r;
  r.coords.reserve(fibers_.size());
  for (std::size_t i = 0; i < fibers_.size(); ++i) r.coords.push_back(fibers_[i].join(x.coords.at(i), y.coords.at(i)));
  return r;
}

GroupElement ProductLuGroup::scale(const GroupElement& x, Int k) const {
  GroupElement r;
  r.coords.reserve(fibers_.size());
  for (std::size_t i = 0; i < fibers_.size(); ++i) r.coords.push_back(fibers_[i].scale(x.coords.at(i), k));
  return r;
}

bool ProductLuGroup::leq(const GroupElement& x, const GroupElement& y) const {
  for (std::size_t i = 0; i < fibers_.size(); ++i)
    if (!fibers_[i].leq(x.coords.at(i), y.coords.at(i))) return false;
  return true;
}

std::vector<Int> ProductLuGroup::linearize(const GroupElement& x) const {
  validate(x);
  std::vector<Int> v(fibers_.size());
  for (std::size_t i = 0; i < fibers_.size(); ++i) v[i] = fibers_[i].linearize(x.coords[i]);
  return v;
}

GroupElement ProductLuGroup::delinearize(const std::vector<Int>& v) const {
  if (v.size() != fibers_.size()) throw DomainError("linear vector length does not match fiber count");
  GroupElement r;
  r.coords.reserve(fibers_.size());
  for (std::size_t i = 0; i < fibers_.size(); ++i) r.coords.push_back(fibers_[i].delinearize(v[i]));
  return r;
}

ProductLuGroup make_product_group(std::vector<ChangChainGroup> fibers, GroupElement unit) {
  return ProductLuGroup(std::move(fibers), std::move(unit));
}

ProductLuGroup make_chain_product_group(const std::vector<int>& orders, const std::vector<ChangPair>& unit) {
  std::vector<ChangChainGroup> fibers;
  fibers.reserve(orders.size());
  for (int n : orders) fibers.emplace_back(make_chain(n));
  return ProductLuGroup(std::move(fibers), GroupElement{GroupElement::Coords(unit.begin(), unit.end())});
}

AbsDecomposition abs_decompose(const ProductLuGroup& g, const GroupElement& x) {
  g.validate(x);
  const GroupElement zero = g.zero();
  AbsDecomposition d{g.join(zero, x), g.join(zero, g.neg(x)), {}};
  d.abs = g.add(d.plus, d.minus);
  if (!(g.sub(d.plus, d.minus) == x)) throw InternalError("x != x+ - x-");
  if (!(g.join(x, g.neg(x)) == d.abs)) throw InternalError("|x| != x+ + x-");
  return d;
}

Int unit_bound(const ProductLuGroup& g, const GroupElement& x) {
  g.validate(x);
  const GroupElement abs = g.join(x, g.neg(x));
  Int best = 0;
  for (std::size_t i = 0; i < g.fiber_count(); ++i) {
    const ChangChainGroup& f = g.fiber(i);
    ChangPair acc = f.zero();
    Int n = 0;
    while (!f.leq(abs.coords[i], acc)) {
      acc = f.add(acc, g.unit().coords[i]);
      n = checked_add(n, 1);
    }
    best = std::max(best, n);
  }
  return best;
}

namespace {

std::vector<int> segment_radices(const ProductLuGroup& g) {
  std::vector<int> radices;
  std::size_t total = 1;
  for (std::size_t i = 0; i < g.fiber_count(); ++i) {
    const Int height = g.fiber(i).linearize(g.unit().coords[i]);
    if (height + 1 > static_cast<Int>(kMaxSegmentSize)) throw DomainError("segment too large to tabulate");
    radices.push_back(static_cast<int>(height + 1));
    total *= static_cast<std::size_t>(height + 1);
    if (total > kMaxSegmentSize) throw DomainError("segment too large to tabulate");
  }
  return radices;
}

std::optional<Elem> segment_find(const ProductLuGroup& g, const std::vector<int>& radices, const GroupElement& x) {
  if (x.coords.size() != g.fiber_count()) return std::nullopt;
  std::vector<int> digits(radices.size());
  for (std::size_t i = 0; i < radices.size(); ++i) {
    if (!g.fiber(i).is_normalized(x.coords[i])) return std::nullopt;
    const Int v = g.fiber(i).linearize(x.coords[i]);
    if (v < 0 || v >= radices[i]) return std::nullopt;
    digits[i] = static_cast<int>(v);
  }
  return static_cast<Elem>(product_index(radices, digits));
}

}  // namespace

std::optional<Elem> GammaSegment::find(const GroupElement& x) const { return segment_find(group, segment_radices(group), x); }

Elem GammaSegment::index_of(const GroupElement& x) const {
  auto k = find(x);
  if (!k) throw DomainError("element is not in the segment [0, u]");
  return *k;
}

GammaSegment gamma_segment(const ProductLuGroup& g) {
  const std::vector<int> radices = segment_radices(g);
  std::size_t total = 1;
  for (int r : radices) total *= static_cast<std::size_t>(r);

  std::vector<GroupElement> elements;
  elements.reserve(total);
  for (std::size_t k = 0; k < total; ++k) {
    const std::vector<int> digits = product_digits(radices, k);
    std::vector<Int> lin(digits.begin(), digits.end());
    elements.push_back(g.delinearize(lin));
  }

  // Every table value goes through the lookup, so results outside [0, u] are caught.
  auto index_of = [&](const GroupElement& x) {
    auto k = segment_find(g, radices, x);
    if (!k) throw InternalError("segment operation left [0, u]");
    return *k;
  };
  const GroupElement& u = g.unit();
  std::vector<std::vector<Elem>> oplus(total, std::vector<Elem>(total));
  std::vector<Elem> neg(total);
  for (std::size_t x = 0; x < total; ++x) {
    neg[x] = index_of(g.sub(u, elements[x]));
    for (std::size_t y = 0; y < total; ++y) oplus[x][y] = index_of(g.meet(u, g.add(elements[x], elements[y])));
  }
  FiniteMVAlgebra alg(static_cast<int>(total), oplus, std::move(neg));
  return GammaSegment{g, std::move(alg), std::move(elements)};
}

bool CoordinateIdeal::contains(const GroupElement& x) const {
  if (x.coords.size() != unrestricted.size()) return false;
  for (std::size_t i = 0; i < unrestricted.size(); ++i)
    if (!unrestricted[i] && !(x.coords[i] == ChangPair{})) return false;
  return true;
}

bool CoordinateIdeal::is_proper() const { return std::find(unrestricted.begin(), unrestricted.end(), false) != unrestricted.end(); }

std::vector<CoordinateIdeal> group_spectrum(const ProductLuGroup& g) {
  std::vector<CoordinateIdeal> primes;
  for (std::size_t i = 0; i < g.fiber_count(); ++i) {
    CoordinateIdeal p{std::vector<bool>(g.fiber_count(), true)};
    p.unrestricted[i] = false;
    primes.push_back(std::move(p));
  }
  return primes;
}

std::vector<CoordinateIdeal> coordinate_ideals(const ProductLuGroup& g) {
  const std::size_t k = g.fiber_count();
  if (k >= 20) throw DomainError("too many fibers to enumerate coordinate ideals");
  std::vector<CoordinateIdeal> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    CoordinateIdeal j{std::vector<bool>(k)};
    for (std::size_t i = 0; i < k; ++i) j.unrestricted[i] = (mask >> i) & 1U;
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<GroupElement> window(const ProductLuGroup& g, Int bound) {
  if (bound < 0) throw DomainError("window bound must be nonnegative");
  std::vector<Int> lo, span;
  std::size_t total = 1;
  for (std::size_t i = 0; i < g.fiber_count(); ++i) {
    const Int r = checked_mul(bound, g.fiber(i).linearize(g.unit().coords[i]));
    lo.push_back(-r);
    span.push_back(checked_add(checked_mul(2, r), 1));
    total *= static_cast<std::size_t>(span.back());
    if (total > kMaxWindowSize) throw DomainError("window too large to enumerate");
  }
  std::vector<GroupElement> out;
  out.reserve(total);
  std::vector<Int> lin(lo);
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t rest = k;
    for (std::size_t i = g.fiber_count(); i-- > 0;) {
      const auto s = static_cast<std::size_t>(span[i]);
      lin[i] = lo[i] + static_cast<Int>(rest % s);
      rest /= s;
    }
    out.push_back(g.delinearize(lin));
  }
  return out;
}

std::vector<GroupElement> positive_window(const ProductLuGroup& g, Int bound) {
  std::vector<GroupElement> out;
  const GroupElement zero = g.zero();
  for (GroupElement& x : window(g, bound))
    if (g.leq(zero, x)) out.push_back(std::move(x));
  return out;
}

}  // namespace mvg
