#include "intorder/errors.hpp"

namespace intorder {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::cycle: return "cycle";
    case Errc::unknown_element: return "unknown_element";
    case Errc::duplicate_element: return "duplicate_element";
    case Errc::not_a_permutation: return "not_a_permutation";
    case Errc::invalid_extension: return "invalid_extension";
    case Errc::need_two_extensions: return "need_two_extensions";
    case Errc::empty_interval: return "empty_interval";
    case Errc::ground_set_mismatch: return "ground_set_mismatch";
    case Errc::not_interval_order: return "not_interval_order";
    case Errc::degenerate_interval: return "degenerate_interval";
    case Errc::pair_not_incomparable: return "pair_not_incomparable";
    case Errc::not_disjoint: return "not_disjoint";
    case Errc::internal_cycle: return "internal_cycle";
    case Errc::not_unit_mixed: return "not_unit_mixed";
    case Errc::not_zero_one: return "not_zero_one";
    case Errc::not_closed: return "not_closed";
    case Errc::inconsistent: return "inconsistent";
    case Errc::self_check_failed: return "self_check_failed";
    case Errc::limit_exceeded: return "limit_exceeded";
    case Errc::size_bound: return "size_bound";
    case Errc::unknown_name: return "unknown_name";
    case Errc::invalid_policy: return "invalid_policy";
    case Errc::not_unit_interval: return "not_unit_interval";
    case Errc::is_chain: return "is_chain";
  }
  return "unknown";
}

}  // namespace intorder
