#ifndef NETKIT_REPORT_HPP
#define NETKIT_REPORT_HPP

#include "netkit/linalg.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace netkit {

/// One failed identity instance: which rule, on which basis tuple, and the
/// nonzero residual (left side minus right side, flattened for matrices).
struct Violation {
  std::string rule;
  std::vector<std::size_t> indices;
  Vector residual;
};

/// Outcome of an axiom or identity check. Violations are recorded in
/// lexicographic order of (rule order, basis tuple), so the front entry is
/// the first failing tuple.
struct Report {
  std::string check;
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }
  const Violation* firstFailure() const { return violations.empty() ? nullptr : &violations.front(); }

  void fail(std::string rule, std::vector<std::size_t> indices, Vector residual) {
    violations.push_back({std::move(rule), std::move(indices), std::move(residual)});
  }
  /// Records a failure when the residual is nonzero.
  void require(const std::string& rule, std::vector<std::size_t> indices, Vector residual) {
    if (!isZero(residual)) fail(rule, std::move(indices), std::move(residual));
  }
  void merge(const Report& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

} // namespace netkit

#endif
