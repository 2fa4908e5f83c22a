#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace condb {

/// Machine-readable failure categories. Every error carries exactly one code;
/// the REST layer maps each code to a fixed HTTP status, so the same taxonomy
/// is observable through the service, the fake backend and the client library.
enum class ErrorCode {
  InvalidName,
  InvalidIov,
  InvalidChecksum,
  InvalidPayloadUrl,
  InvalidParameter,
  GlobalTagNotFound,
  PayloadTypeNotFound,
  PayloadListNotFound,
  NoValidIov,
  GlobalTagExists,
  PayloadTypeExists,
  PayloadListExists,
  DuplicateIovStart,
  GlobalTagLocked,
  ReadOnlyMode,
  StrategyNotAllowed,
  SchemaVersionConflict,
  StoreUnavailable,
  QueueOverflow,
  InternalError,
  // client-side only; never produced by the service
  IoError,
  IntegrityMismatch,
  Connectivity,
  NoWritablePrefix,
};

/// Stable wire identifier, e.g. ErrorCode::GlobalTagLocked -> "global_tag_locked".
std::string_view error_code_name(ErrorCode code) noexcept;

/// Inverse of error_code_name; nullopt for unknown strings.
std::optional<ErrorCode> error_code_from_name(std::string_view name) noexcept;

/// Deterministic HTTP status for a code (client-only codes map to 500).
int http_status(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail)
      : std::runtime_error(std::move(detail)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace condb
