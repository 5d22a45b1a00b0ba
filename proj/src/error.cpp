#include "phantom/error.hpp"

namespace phantom {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::credential: return "credential error";
    case Errc::retry_after: return "retry-after error";
    case Errc::transport: return "transport error";
    case Errc::schema: return "schema error";
    case Errc::log_unavailable: return "log-unavailable error";
    case Errc::unresolvable_integration: return "unresolvable-integration error";
    case Errc::topology_mismatch: return "topology-mismatch error";
    case Errc::not_found: return "not-found error";
    case Errc::provisioning: return "provisioning error";
    case Errc::empty_diff: return "empty-diff error";
    case Errc::parse: return "parse error";
    case Errc::no_ci: return "no-ci error";
    case Errc::no_build_stage: return "no-build-stage error";
    case Errc::no_image: return "no-image error";
    case Errc::matrix_limit: return "matrix-limit error";
    case Errc::runtime_unavailable: return "runtime-unavailable error";
    case Errc::no_fatal_error: return "no-fatal-error error";
    case Errc::unclassified: return "unclassified error";
    case Errc::unminable: return "unminable error";
    case Errc::stale_diagnostic: return "stale-diagnostic error";
    case Errc::no_examples: return "no-examples error";
    case Errc::inconsistency: return "inconsistency error";
    case Errc::budget_too_small: return "budget-too-small error";
    case Errc::unextractable: return "unextractable error";
    case Errc::drift: return "drift error";
    case Errc::rejected_multifile: return "rejected-multifile error";
    case Errc::provider_error: return "provider error";
    case Errc::degenerate_table: return "degenerate-table error";
    case Errc::insufficient_conditions: return "insufficient-conditions error";
    case Errc::dependency: return "dependency error";
    case Errc::usage: return "usage error";
    case Errc::config: return "config error";
    case Errc::precondition: return "precondition violation";
    case Errc::io: return "io error";
  }
  return "unknown error";
}

}  // namespace phantom
