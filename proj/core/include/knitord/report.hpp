#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace knitord {

struct Violation {
  std::uint64_t index = 0;  // position in the enumeration, for reproducibility
  std::vector<std::string> witness;
  std::string expected;
  std::string actual;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CheckOptions {
  int workers = 1;
  std::size_t max_violations = 20;
};

// Outcome of one verification suite. Serialization is deterministic: same
// instance and radii give byte-identical output regardless of worker count.
struct VerificationReport {
  std::string suite;
  std::string instance;
  std::vector<int> radii;
  std::uint64_t checked = 0;
  std::vector<Violation> violations;
  std::map<std::string, std::uint64_t> stats;

  bool passed() const { return violations.empty(); }

  void truncate(std::size_t max_violations);

  std::string to_json_line() const;
  std::string to_text() const;
};

}  // namespace knitord
