#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aris {

// Every failure the engine can signal, across all subsystems. Keeping one
// flat vocabulary lets the orchestrator and CLI classify errors without
// knowing which module raised them.
enum class Errc {
  // skill registry
  missing_frontmatter,
  missing_field,
  malformed_frontmatter,
  skill_not_found,
  unknown_reference,
  duplicate_skill,
  // artifact store
  io_failure,
  not_found,
  version_not_found,
  unknown_run,
  corrupt_checkpoint,
  lock_held,
  // wiki
  duplicate_id,
  unknown_endpoint,
  unknown_relation,
  duplicate_edge,
  unknown_node,
  not_a_claim,
  // review engine
  scope_violation,
  bridge_failure,
  unparseable_review,
  unknown_error_class,
  policy_unsatisfiable,
  // assurance
  missing_evidence_ref,
  unparseable_findings,
  unknown_category,
  // model bridges
  auth_missing,
  timeout,
  provider_error,
  script_exhausted,
  unknown_route,
  // figure renderer
  degenerate_direction,
  // orchestrator
  invalid_value,
  step_failed,
  gate_declined,
  contract_violation,
  // meta optimizer
  stale_target,
  // cli
  unknown_verb,
  bad_directive,
  pending_approval,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::missing_frontmatter: return "MissingFrontmatter";
    case Errc::missing_field: return "MissingField";
    case Errc::malformed_frontmatter: return "MalformedFrontmatter";
    case Errc::skill_not_found: return "SkillNotFound";
    case Errc::unknown_reference: return "UnknownReference";
    case Errc::duplicate_skill: return "DuplicateSkill";
    case Errc::io_failure: return "IoFailure";
    case Errc::not_found: return "NotFound";
    case Errc::version_not_found: return "VersionNotFound";
    case Errc::unknown_run: return "UnknownRun";
    case Errc::corrupt_checkpoint: return "CorruptCheckpoint";
    case Errc::lock_held: return "LockHeld";
    case Errc::duplicate_id: return "DuplicateId";
    case Errc::unknown_endpoint: return "UnknownEndpoint";
    case Errc::unknown_relation: return "UnknownRelation";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::unknown_node: return "UnknownNode";
    case Errc::not_a_claim: return "NotAClaim";
    case Errc::scope_violation: return "ScopeViolation";
    case Errc::bridge_failure: return "BridgeFailure";
    case Errc::unparseable_review: return "UnparseableReview";
    case Errc::unknown_error_class: return "UnknownErrorClass";
    case Errc::policy_unsatisfiable: return "PolicyUnsatisfiable";
    case Errc::missing_evidence_ref: return "MissingEvidenceRef";
    case Errc::unparseable_findings: return "UnparseableFindings";
    case Errc::unknown_category: return "UnknownCategory";
    case Errc::auth_missing: return "AuthMissing";
    case Errc::timeout: return "Timeout";
    case Errc::provider_error: return "ProviderError";
    case Errc::script_exhausted: return "ScriptExhausted";
    case Errc::unknown_route: return "UnknownRoute";
    case Errc::degenerate_direction: return "DegenerateDirection";
    case Errc::invalid_value: return "InvalidValue";
    case Errc::step_failed: return "StepFailed";
    case Errc::gate_declined: return "GateDeclined";
    case Errc::contract_violation: return "ContractViolation";
    case Errc::stale_target: return "StaleTarget";
    case Errc::unknown_verb: return "UnknownVerb";
    case Errc::bad_directive: return "BadDirective";
    case Errc::pending_approval: return "PendingApproval";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace aris
