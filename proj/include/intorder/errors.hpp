#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace intorder {

/// Stable machine-readable error codes; these names appear verbatim in the
/// CLI's JSON error bodies.
enum class Errc {
  cycle,
  unknown_element,
  duplicate_element,
  not_a_permutation,
  invalid_extension,
  need_two_extensions,
  empty_interval,
  ground_set_mismatch,
  not_interval_order,
  degenerate_interval,
  pair_not_incomparable,
  not_disjoint,
  internal_cycle,
  not_unit_mixed,
  not_zero_one,
  not_closed,
  inconsistent,
  self_check_failed,
  limit_exceeded,
  size_bound,
  unknown_name,
  invalid_policy,
  not_unit_interval,
  is_chain,
};

const char* errc_name(Errc code);

class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  Errc code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

/// Raised when a poset claimed to be an interval order contains an induced
/// 2+2; carries the witnessing embedding as (pattern element, host element)
/// name pairs in the order a1, b1, a2, b2.
class NotIntervalOrderError : public DomainError {
 public:
  using Witness = std::vector<std::pair<std::string, std::string>>;

  explicit NotIntervalOrderError(Witness witness)
      : DomainError(Errc::not_interval_order, "induced 2+2 present"),
        witness_(std::move(witness)) {}

  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

/// Thrown by parsers for malformed input (distinct from domain errors so the
/// CLI can map it to a different exit code).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace intorder
