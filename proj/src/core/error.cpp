#include "condb/error.hpp"

#include <array>

namespace condb {

namespace {

struct CodeEntry {
  ErrorCode code;
  std::string_view name;
  int status;
};

constexpr std::array<CodeEntry, 24> kCodeTable{{
    {ErrorCode::InvalidName, "invalid_name", 400},
    {ErrorCode::InvalidIov, "invalid_iov", 400},
    {ErrorCode::InvalidChecksum, "invalid_checksum", 400},
    {ErrorCode::InvalidPayloadUrl, "invalid_payload_url", 400},
    {ErrorCode::InvalidParameter, "invalid_parameter", 400},
    {ErrorCode::GlobalTagNotFound, "global_tag_not_found", 404},
    {ErrorCode::PayloadTypeNotFound, "payload_type_not_found", 404},
    {ErrorCode::PayloadListNotFound, "payload_list_not_found", 404},
    {ErrorCode::NoValidIov, "no_valid_iov", 404},
    {ErrorCode::GlobalTagExists, "global_tag_exists", 409},
    {ErrorCode::PayloadTypeExists, "payload_type_exists", 409},
    {ErrorCode::PayloadListExists, "payload_list_exists", 409},
    {ErrorCode::DuplicateIovStart, "duplicate_iov_start", 409},
    {ErrorCode::GlobalTagLocked, "global_tag_locked", 423},
    {ErrorCode::ReadOnlyMode, "read_only_mode", 403},
    {ErrorCode::StrategyNotAllowed, "strategy_not_allowed", 400},
    {ErrorCode::SchemaVersionConflict, "schema_version_conflict", 500},
    {ErrorCode::StoreUnavailable, "store_unavailable", 503},
    {ErrorCode::QueueOverflow, "queue_overflow", 503},
    {ErrorCode::InternalError, "internal_error", 500},
    {ErrorCode::IoError, "io_error", 500},
    {ErrorCode::IntegrityMismatch, "integrity_mismatch", 500},
    {ErrorCode::Connectivity, "connectivity", 500},
    {ErrorCode::NoWritablePrefix, "no_writable_prefix", 500},
}};

}  // namespace

std::string_view error_code_name(ErrorCode code) noexcept {
  for (const auto& e : kCodeTable) {
    if (e.code == code) return e.name;
  }
  return "internal_error";
}

std::optional<ErrorCode> error_code_from_name(std::string_view name) noexcept {
  for (const auto& e : kCodeTable) {
    if (e.name == name) return e.code;
  }
  return std::nullopt;
}

int http_status(ErrorCode code) noexcept {
  for (const auto& e : kCodeTable) {
    if (e.code == code) return e.status;
  }
  return 500;
}

}  // namespace condb
