#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tmzv {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Description of the first failing input, empty when everything passed.
  std::string counterexample;

  bool pass() const { return failures == 0; }
};

/// Names of the randomized property suites, in run order.
const std::vector<std::string>& property_names();

/// Runs one suite with `cases` random inputs drawn from a generator seeded
/// with `seed`. Throws BadParams for an unknown name.
PropertyResult run_property(const std::string& name, std::uint64_t seed, std::size_t cases);

std::vector<PropertyResult> run_properties(std::uint64_t seed, std::size_t cases);

std::string property_to_text(const PropertyResult& r);

}  // namespace tmzv
