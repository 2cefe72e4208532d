#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "mvgamma/json_io.hpp"
#include "mvgamma/sweep.hpp"

using namespace mvg;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "mvgamma_json_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write_text(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string schema_pointer(const Json& j) {
  try {
    (void)value_from_json(j);
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "<accepted>";
}

}  // namespace

TEST_SUITE("json_io") {
  TEST_CASE("export then import Ł3") {
    const fs::path p = scratch("l3.json");
    export_json(make_chain(3), p.string());
    const JsonValue v = import_json(p.string());
    REQUIRE(std::holds_alternative<FiniteMVAlgebra>(v));
    CHECK(std::get<FiniteMVAlgebra>(v) == make_chain(3));
  }

  TEST_CASE("algebra layout") {
    const Json j = algebra_to_json(make_chain(1));
    CHECK(j.dump() == R"({"size":2,"oplus":[[0,1],[1,1]],"neg":[1,0]})");
  }

  TEST_CASE("the Boolean table and the XOR table") {
    const fs::path boolean = scratch("bool.json"), xor_path = scratch("xor.json");
    write_text(boolean, R"({"size":2,"oplus":[[0,1],[1,1]],"neg":[1,0]})");
    write_text(xor_path, R"({"size":2,"oplus":[[0,1],[1,0]],"neg":[1,0]})");
    const FiniteMVAlgebra b = std::get<FiniteMVAlgebra>(import_json(boolean.string()));
    CHECK(check_mv_axioms(b).ok());
    CHECK(b == make_chain(1));
    const FiniteMVAlgebra x = std::get<FiniteMVAlgebra>(import_json(xor_path.string()));
    CHECK_FALSE(check_mv_axioms(x).ok());
  }

  TEST_CASE("schema violations carry JSON pointers") {
    CHECK(schema_pointer(Json::parse(R"({"size":2,"oplus":[[0,1],[1]],"neg":[1,0]})")) == "/oplus/1");
    CHECK(schema_pointer(Json::parse(R"({"size":2,"oplus":[[0,1]],"neg":[1,0]})")) == "/oplus");
    CHECK(schema_pointer(Json::parse(R"({"size":2,"oplus":[[0,1],[1,5]],"neg":[1,0]})")) == "/oplus/1/1");
    CHECK(schema_pointer(Json::parse(R"({"size":2,"oplus":[[0,1],[1,1]],"neg":[1,"x"]})")) == "/neg/1");
    CHECK(schema_pointer(Json::parse(R"({"size":1,"oplus":[[0]],"neg":[0]})")) == "/size");
    CHECK(schema_pointer(Json::parse(R"({"size":2.5,"oplus":[],"neg":[]})")) == "/size");
    CHECK(schema_pointer(Json::parse(R"({"oplus":[[0]]})")) != "<accepted>");
    CHECK(schema_pointer(Json::parse(R"([1,2])")) != "<accepted>");
    CHECK(schema_pointer(Json::parse(R"({"fibers":[1],"u":{"coords":[{"m":0,"a":0}]}})")) == "/u");
    CHECK(schema_pointer(Json::parse(R"({"fibers":[0],"u":{"coords":[{"m":1,"a":0}]}})")) != "<accepted>");
    CHECK(schema_pointer(Json::parse(R"({"fibers":[1],"u":{"coords":[{"m":1}]}})")) == "/u/coords/0");
    CHECK(schema_pointer(Json::parse(R"({"fibers":[1],"u":{"coords":[{"m":1,"a":-1}]}})")) == "/u/coords/0/a");
  }

  TEST_CASE("malformed and missing files") {
    const fs::path bad = scratch("bad.json");
    write_text(bad, "{\"size\": 2,");
    CHECK_THROWS_AS(import_json(bad.string()), SchemaError);
    CHECK_THROWS_AS(import_json((scratch("nowhere") / "missing.json").string()), Error);
    CHECK_THROWS_AS(export_json(make_chain(1), (scratch("nowhere") / "x" / "y.json").string()), Error);
  }

  TEST_CASE("morphisms and groups round trip") {
    const MVMorphism h(make_chain(1), make_chain(2), {0, 2});
    const Json hj = morphism_to_json(h);
    CHECK(morphism_from_json(hj) == h);
    CHECK(std::get<MVMorphism>(value_from_json(hj)) == h);

    const ProductLuGroup g = make_chain_product_group({2, 1}, {{0, 1}, {3, 0}});
    const Json gj = group_to_json(g);
    CHECK(gj.dump() == R"({"fibers":[2,1],"u":{"coords":[{"m":0,"a":1},{"m":3,"a":0}]}})");
    CHECK(group_from_json(gj) == g);

    const fs::path p = scratch("g.json");
    export_json(g, p.string());
    CHECK(std::get<ProductLuGroup>(import_json(p.string())) == g);

    GroupElement x;
    x.coords.push_back({-4, 1});
    CHECK(element_from_json(element_to_json(x)) == x);
  }

  TEST_CASE("report and spectrum layout") {
    CHECK(spectrum_to_json(spectrum(make_product(make_chain(1), make_chain(1)))).dump() == R"({"primes":[[0,1],[0,2]]})");
    CHECK(ideal_to_json(Ideal::from_members(3, {0})).dump() == R"({"members":[0]})");
    CheckReport r{"demo", 0, {}};
    r.expect(false, "property", [] { return Json{{"x", 1}}; });
    CHECK(check_report_to_json(r).dump() ==
          R"({"suite":"demo","cases":1,"pass":false,"failures":[{"property":"property","counterexample":{"x":1}}]})");
  }

  TEST_CASE("every generated algebra round trips") {
    for (const NamedAlgebra& n : generate_algebras(16, 8)) {
      const Json j = value_to_json(n.algebra);
      CHECK(std::get<FiniteMVAlgebra>(value_from_json(j)) == n.algebra);
      CHECK(std::get<FiniteMVAlgebra>(value_from_json(Json::parse(j.dump()))) == n.algebra);
    }
  }
}
