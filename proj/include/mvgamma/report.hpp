#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace mvg {

struct CheckFailure {
  std::string property;
  nlohmann::ordered_json counterexample;
};

/// Outcome of one property suite: how many cases ran and which failed.
struct CheckReport {
  std::string name;
  std::size_t cases = 0;
  std::vector<CheckFailure> failures;

  bool ok() const { return failures.empty(); }

  void fail(std::string property, nlohmann::ordered_json counterexample) {
    failures.push_back({std::move(property), std::move(counterexample)});
  }

  // Records one case and, if `holds` is false, a failure built lazily.
  template <class MakeWitness>
  void expect(bool holds, const char* property, MakeWitness&& witness) {
    ++cases;
    if (!holds) fail(property, witness());
  }

  void absorb(const CheckReport& other) {
    cases += other.cases;
    for (const auto& f : other.failures) failures.push_back(f);
  }
};

}  // namespace mvg
