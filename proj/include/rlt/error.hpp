#pragma once

#include <stdexcept>
#include <string>

namespace rlt {

/// Error kinds surfaced by the toolkit.  The CLI maps these onto its
/// exit-code contract (input errors, verification failures, budgets).
enum class errc {
  not_prime,
  not_irreducible,
  char_two_unsupported,
  dimension_mismatch,
  budget_exceeded,
  not_an_ideal,
  not_unipotent,
  dimension_too_small,
  zero_vector,
  not_p_nilpotent,
  not_p_closed,
  not_constant_rank_on_plane,
  not_endotrivial_on_plane,
  walk_depth_exceeded,
  empty_e2,
  dimension_divisible_by_p,
  not_supersolvable,
  not_endotrivial,
  not_split,
  unknown_entry,
  bad_parameters,
  axiom_failure,
  format_error,
  verify_failed,
  undecided,
  internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void check(bool ok, errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace rlt
