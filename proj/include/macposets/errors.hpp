#pragma once

#include <stdexcept>
#include <string>

namespace macposets {

// Every failure the library reports deliberately, keyed so callers can
// branch without parsing messages.
enum class errc {
  duplicate_label,
  unknown_label,
  cycle_detected,
  not_ranked,
  invalid_size,
  size_out_of_range,
  not_a_segment,
  incomplete_order,
  too_large,
  parse_error,
  unknown_variable,
  non_homogeneous_ideal,
  zero_generator,
  field_mismatch,
  not_artinian,
  no_unique_maximum,
  no_unique_minimum,
  not_injective,
  not_monotone,
  not_rank_preserving,
  shared_domain_mismatch,
  not_self_dual,
  inconsistent_identification,
  bad_format,
  io_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace macposets
