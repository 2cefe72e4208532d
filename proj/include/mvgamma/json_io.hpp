#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "mvgamma/lgroup.hpp"
#include "mvgamma/report.hpp"
#include "mvgamma/spectrum.hpp"

namespace mvg {

using Json = nlohmann::ordered_json;

// {"size": k, "oplus": [[...]], "neg": [...]}, zero implicit at index 0.
Json algebra_to_json(const FiniteMVAlgebra& alg);
FiniteMVAlgebra algebra_from_json(const Json& j, const std::string& pointer = "");

// {"dom": <algebra>, "cod": <algebra>, "map": [...]}
Json morphism_to_json(const MVMorphism& h);
MVMorphism morphism_from_json(const Json& j, const std::string& pointer = "");

// {"members": [...]} and {"primes": [[...], ...]}
Json ideal_to_json(const Ideal& ideal);
Json spectrum_to_json(const Spectrum& sp);

// {"coords": [{"m": int, "a": int}, ...]}
Json element_to_json(const GroupElement& x);
GroupElement element_from_json(const Json& j, const std::string& pointer = "");

// {"fibers": [n, ...], "u": <element>}; fiber entries are chain orders n of Ł_n.
Json group_to_json(const ProductLuGroup& g);
ProductLuGroup group_from_json(const Json& j, const std::string& pointer = "");

Json check_report_to_json(const CheckReport& r);

using JsonValue = std::variant<FiniteMVAlgebra, MVMorphism, ProductLuGroup>;

Json value_to_json(const JsonValue& v);

/// Detects the value kind from its keys. Throws SchemaError.
JsonValue value_from_json(const Json& j);

/// Writes pretty-printed JSON with a trailing newline. Throws Error on I/O failure.
void export_json(const JsonValue& v, const std::string& path);
void write_json_file(const Json& j, const std::string& path);

/// Throws Error on I/O failure and SchemaError on malformed content.
JsonValue import_json(const std::string& path);

}  // namespace mvg
