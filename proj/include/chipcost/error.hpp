#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chipcost {

enum class ErrorCode {
    EmptySystem,
    MonolithicWithD2D,
    NodeMismatchWithinChiplet,
    ParseError,
    UnknownNodeReference,
    UnknownReference,
    ConflictingDefinition,
    InvariantViolation,
    NegativeArea,
    DieLargerThanWafer,
    OutOfRangeYield,
    ZeroYield,
    FlowNotSupported,
    NonMonolithicInSoCGroup,
    ZeroQuantity,
    EmptyCounts,
    FootprintMismatch,
    Overflow,
    InvalidArgument,
    IoError,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported as an Error carrying a stable code and,
/// when the failure originates in a configuration document, the offending
/// key path (e.g. "nodes.7nm.wafer_cost" or "systems[1].chiplets[0].count").
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string path = {})
        : std::runtime_error(message), code_(code), path_(std::move(path)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& path() const noexcept { return path_; }

private:
    ErrorCode code_;
    std::string path_;
};

}  // namespace chipcost
