#include "macposets/errors.hpp"

namespace macposets {

const char* errc_name(errc c) {
  switch (c) {
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::unknown_label: return "UnknownLabel";
    case errc::cycle_detected: return "CycleDetected";
    case errc::not_ranked: return "NotRanked";
    case errc::invalid_size: return "InvalidSize";
    case errc::size_out_of_range: return "SizeOutOfRange";
    case errc::not_a_segment: return "NotASegment";
    case errc::incomplete_order: return "IncompleteOrder";
    case errc::too_large: return "TooLarge";
    case errc::parse_error: return "ParseError";
    case errc::unknown_variable: return "UnknownVariable";
    case errc::non_homogeneous_ideal: return "NonHomogeneousIdeal";
    case errc::zero_generator: return "ZeroGenerator";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::not_artinian: return "NotArtinian";
    case errc::no_unique_maximum: return "NoUniqueMaximum";
    case errc::no_unique_minimum: return "NoUniqueMinimum";
    case errc::not_injective: return "NotInjective";
    case errc::not_monotone: return "NotMonotone";
    case errc::not_rank_preserving: return "NotRankPreserving";
    case errc::shared_domain_mismatch: return "SharedDomainMismatch";
    case errc::not_self_dual: return "NotSelfDual";
    case errc::inconsistent_identification: return "InconsistentIdentification";
    case errc::bad_format: return "BadFormat";
    case errc::io_error: return "IOError";
  }
  return "Error";
}

}  // namespace macposets
