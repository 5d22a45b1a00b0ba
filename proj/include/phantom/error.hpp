#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace phantom {

// Error identities used across the pipeline. Tests match on these, so the
// set is part of the public contract.
enum class Errc {
  // forge / transport
  credential,
  retry_after,
  transport,
  schema,
  log_unavailable,
  // git history / workspaces
  unresolvable_integration,
  topology_mismatch,
  not_found,
  provisioning,
  empty_diff,
  // ci configuration
  parse,
  no_ci,
  no_build_stage,
  no_image,
  matrix_limit,
  // sandbox
  runtime_unavailable,
  // log parsing / classification
  no_fatal_error,
  unclassified,
  // corpus / prompting
  unminable,
  stale_diagnostic,
  no_examples,
  inconsistency,
  budget_too_small,
  unextractable,
  // repair
  drift,
  rejected_multifile,
  provider_error,
  // statistics
  degenerate_table,
  insufficient_conditions,
  // cli / config / misc
  dependency,
  usage,
  config,
  precondition,
  io,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Error(Errc code, std::string message, std::int64_t detail)
      : Error(code, std::move(message)) {
    detail_ = detail;
  }

  Errc code() const noexcept { return code_; }

  // Meaning depends on code: retry_after -> seconds to wait,
  // parse -> offending line number.
  std::int64_t detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::int64_t detail_ = 0;
};

[[noreturn]] inline void raise(Errc code, std::string message) {
  throw Error(code, std::move(message));
}

[[noreturn]] inline void raise(Errc code, std::string message,
                               std::int64_t detail) {
  throw Error(code, std::move(message), detail);
}

}  // namespace phantom
