#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hv/numeric.hpp"

namespace hv {

enum class CohStatus { Zero, Exact, NonzeroAtLeast, Unknown };

inline const char* to_string(CohStatus s) {
  switch (s) {
    case CohStatus::Zero: return "Zero";
    case CohStatus::Exact: return "Exact";
    case CohStatus::NonzeroAtLeast: return "NonzeroAtLeast";
    case CohStatus::Unknown: return "Unknown";
  }
  return "?";
}

// Result of a cohomology dimension query.  `value` is the dimension for
// Exact and a lower bound for NonzeroAtLeast; the trace lists the rules a
// derivation went through, one step per line.
struct CohomologyDim {
  CohStatus status = CohStatus::Unknown;
  BigInt value = 0;
  std::vector<std::string> trace;

  static CohomologyDim zero(std::string rule) {
    CohomologyDim r;
    r.status = CohStatus::Zero;
    r.trace.push_back(std::move(rule));
    return r;
  }

  // Exact(0) is normalized to Zero.
  static CohomologyDim exact(BigInt v, std::string rule) {
    CohomologyDim r;
    if (v < 0) throw std::logic_error("CohomologyDim: negative dimension");
    r.status = v == 0 ? CohStatus::Zero : CohStatus::Exact;
    r.value = std::move(v);
    r.trace.push_back(std::move(rule));
    return r;
  }

  static CohomologyDim nonzero_at_least(BigInt bound, std::string rule) {
    CohomologyDim r;
    if (bound < 1) throw std::logic_error("CohomologyDim: nonzero bound must be >= 1");
    r.status = CohStatus::NonzeroAtLeast;
    r.value = std::move(bound);
    r.trace.push_back(std::move(rule));
    return r;
  }

  static CohomologyDim unknown(std::string rule) {
    CohomologyDim r;
    r.status = CohStatus::Unknown;
    r.trace.push_back(std::move(rule));
    return r;
  }

  bool is_zero() const { return status == CohStatus::Zero; }
  bool is_exact() const { return status == CohStatus::Exact || status == CohStatus::Zero; }
  bool known_nonzero() const {
    return status == CohStatus::Exact || status == CohStatus::NonzeroAtLeast;
  }

  // dimension when the status pins one (Zero or Exact)
  BigInt exact_value() const {
    if (!is_exact()) throw std::logic_error("CohomologyDim: value not exact");
    return status == CohStatus::Zero ? BigInt(0) : value;
  }

  CohomologyDim& note(std::string line) {
    trace.push_back(std::move(line));
    return *this;
  }

  CohomologyDim& prepend_trace(const std::vector<std::string>& lines) {
    trace.insert(trace.begin(), lines.begin(), lines.end());
    return *this;
  }
};

}  // namespace hv
