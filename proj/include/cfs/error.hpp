#pragma once

#include <stdexcept>
#include <string>

namespace cfs {

enum class ErrorCode {
    Parse,
    NotModalized,
    NonClosedSubstituend,
    NotClosed,
    NotBoxFinal,
    CutMismatch,
    MeasureViolation,
    RulesetUnsupported,
    NotFixedPoint,
    ConditionMissing,
    InvalidInput,
    Internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Parse failures carry a byte offset into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error(ErrorCode::Parse, "at offset " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace cfs
