#include "mvgamma/json_io.hpp"

#include <fstream>
#include <sstream>

#include "mvgamma/errors.hpp"

namespace mvg {

namespace {

const Json& field(const Json& j, const std::string& pointer, const char* key) {
  if (!j.is_object()) throw SchemaError(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(pointer, std::string("missing key \"") + key + "\"");
  return *it;
}

Int integer(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer()) throw SchemaError(pointer, "expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw SchemaError(pointer, "integer out of range");
  return j.get<Int>();
}

int index_in(const Json& j, const std::string& pointer, Int bound) {
  const Int v = integer(j, pointer);
  if (v < 0 || v >= bound) throw SchemaError(pointer, "index outside [0, " + std::to_string(bound) + ")");
  return static_cast<int>(v);
}

const Json& array(const Json& j, const std::string& pointer, std::size_t expected) {
  if (!j.is_array()) throw SchemaError(pointer, "expected an array");
  if (j.size() != expected)
    throw SchemaError(pointer, "expected " + std::to_string(expected) + " entries, found " + std::to_string(j.size()));
  return j;
}

std::string at(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }
std::string at(const std::string& pointer, std::size_t i) { return pointer + "/" + std::to_string(i); }

}  // namespace

Json algebra_to_json(const FiniteMVAlgebra& alg) {
  Json j;
  j["size"] = alg.size();
  j["oplus"] = alg.oplus_table();
  j["neg"] = alg.neg_table();
  return j;
}

FiniteMVAlgebra algebra_from_json(const Json& j, const std::string& pointer) {
  const Int raw_size = integer(field(j, pointer, "size"), at(pointer, "size"));
  if (raw_size < 2 || raw_size > 4096) throw SchemaError(at(pointer, "size"), "size must lie in [2, 4096]");
  const auto n = static_cast<std::size_t>(raw_size);
  const std::string op = at(pointer, "oplus");
  const Json& rows = array(field(j, pointer, "oplus"), op, n);
  std::vector<std::vector<Elem>> oplus(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a) {
    const Json& row = array(rows[a], at(op, a), n);
    for (std::size_t b = 0; b < n; ++b) oplus[a][b] = index_in(row[b], at(at(op, a), b), raw_size);
  }
  const std::string np = at(pointer, "neg");
  const Json& negs = array(field(j, pointer, "neg"), np, n);
  std::vector<Elem> neg(n);
  for (std::size_t a = 0; a < n; ++a) neg[a] = index_in(negs[a], at(np, a), raw_size);
  return FiniteMVAlgebra(static_cast<int>(n), oplus, std::move(neg));
}

Json morphism_to_json(const MVMorphism& h) {
  Json j;
  j["dom"] = algebra_to_json(h.dom);
  j["cod"] = algebra_to_json(h.cod);
  j["map"] = h.map;
  return j;
}

MVMorphism morphism_from_json(const Json& j, const std::string& pointer) {
  FiniteMVAlgebra dom = algebra_from_json(field(j, pointer, "dom"), at(pointer, "dom"));
  FiniteMVAlgebra cod = algebra_from_json(field(j, pointer, "cod"), at(pointer, "cod"));
  const std::string mp = at(pointer, "map");
  const Json& entries = array(field(j, pointer, "map"), mp, static_cast<std::size_t>(dom.size()));
  std::vector<Elem> map;
  for (std::size_t i = 0; i < entries.size(); ++i) map.push_back(index_in(entries[i], at(mp, i), cod.size()));
  return MVMorphism(std::move(dom), std::move(cod), std::move(map));
}

Json ideal_to_json(const Ideal& ideal) {
  Json j;
  j["members"] = ideal.members();
  return j;
}

Json spectrum_to_json(const Spectrum& sp) {
  Json primes = Json::array();
  for (const Ideal& p : sp.primes) primes.push_back(p.members());
  Json j;
  j["primes"] = std::move(primes);
  return j;
}

Json element_to_json(const GroupElement& x) {
  Json coords = Json::array();
  for (const ChangPair& p : x.coords) coords.push_back(Json{{"m", p.m}, {"a", p.a}});
  Json j;
  j["coords"] = std::move(coords);
  return j;
}

GroupElement element_from_json(const Json& j, const std::string& pointer) {
  const std::string cp = at(pointer, "coords");
  const Json& coords = field(j, pointer, "coords");
  if (!coords.is_array()) throw SchemaError(cp, "expected an array");
  GroupElement x;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const std::string ip = at(cp, i);
    const Int m = integer(field(coords[i], ip, "m"), at(ip, "m"));
    const Int a = integer(field(coords[i], ip, "a"), at(ip, "a"));
    if (a < 0 || a > INT32_MAX) throw SchemaError(at(ip, "a"), "chain index must be nonnegative");
    x.coords.push_back({m, static_cast<Elem>(a)});
  }
  return x;
}

Json group_to_json(const ProductLuGroup& g) {
  Json fibers = Json::array();
  for (const ChangChainGroup& f : g.fibers()) fibers.push_back(f.order());
  Json j;
  j["fibers"] = std::move(fibers);
  j["u"] = element_to_json(g.unit());
  return j;
}

ProductLuGroup group_from_json(const Json& j, const std::string& pointer) {
  const std::string fp = at(pointer, "fibers");
  const Json& fibers = field(j, pointer, "fibers");
  if (!fibers.is_array() || fibers.empty()) throw SchemaError(fp, "expected a nonempty array");
  std::vector<int> orders;
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    const Int n = integer(fibers[i], at(fp, i));
    if (n < 1 || n > 4096) throw SchemaError(at(fp, i), "chain order must lie in [1, 4096]");
    orders.push_back(static_cast<int>(n));
  }
  const std::string up = at(pointer, "u");
  GroupElement u = element_from_json(field(j, pointer, "u"), up);
  if (u.coords.size() != orders.size()) throw SchemaError(at(up, "coords"), "unit must have one coordinate per fiber");
  try {
    return make_chain_product_group(orders, std::vector<ChangPair>(u.coords.begin(), u.coords.end()));
  } catch (const DomainError& e) {
    throw SchemaError(up, e.what());
  }
}

Json check_report_to_json(const CheckReport& r) {
  Json failures = Json::array();
  for (const CheckFailure& f : r.failures) failures.push_back(Json{{"property", f.property}, {"counterexample", f.counterexample}});
  Json j;
  j["suite"] = r.name;
  j["cases"] = r.cases;
  j["pass"] = r.ok();
  j["failures"] = std::move(failures);
  return j;
}

Json value_to_json(const JsonValue& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiniteMVAlgebra>) return algebra_to_json(x);
        else if constexpr (std::is_same_v<T, MVMorphism>) return morphism_to_json(x);
        else return group_to_json(x);
      },
      v);
}

JsonValue value_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("", "expected an object");
  if (j.contains("map")) return morphism_from_json(j);
  if (j.contains("fibers")) return group_from_json(j);
  if (j.contains("size")) return algebra_from_json(j);
  throw SchemaError("", "not an algebra, morphism or group");
}

void write_json_file(const Json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw Error("write to " + path + " failed");
}

void export_json(const JsonValue& v, const std::string& path) { write_json_file(value_to_json(v), path); }

JsonValue import_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path + " for reading");
  std::stringstream buf;
  buf << in.rdbuf();
  Json j = Json::parse(buf.str(), nullptr, false);
  if (j.is_discarded()) throw SchemaError("", "malformed JSON in " + path);
  return value_from_json(j);
}

}  // namespace mvg
