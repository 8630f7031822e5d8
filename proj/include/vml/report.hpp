#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vml/core.hpp"

namespace vml {

/// Outcome of an axiom or inequality check. Failures carry the first
/// violation in lexicographic scan order.
struct CheckReport {
  bool pass = true;
  /// Which axiom or inequality failed, e.g. "exchange", "2", "2(ii)", "ulc".
  std::string axiom;
  std::string message;

  // Witness payload; which fields are filled depends on the checker.
  std::vector<Subset> sets;
  std::vector<int> elements;
  std::vector<MultiIndex> indices;
  std::optional<int> k;
  std::string lhs;
  std::string rhs;

  explicit operator bool() const { return pass; }

  static CheckReport ok() { return {}; }
  static CheckReport failure(std::string axiom, std::string message) {
    CheckReport r;
    r.pass = false;
    r.axiom = std::move(axiom);
    r.message = std::move(message);
    return r;
  }
};

}  // namespace vml
