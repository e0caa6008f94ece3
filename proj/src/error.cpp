#include "cfs/error.hpp"

namespace cfs {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parse: return "parse";
        case ErrorCode::NotModalized: return "not-modalized";
        case ErrorCode::NonClosedSubstituend: return "non-closed-substituend";
        case ErrorCode::NotClosed: return "not-closed";
        case ErrorCode::NotBoxFinal: return "not-box-final";
        case ErrorCode::CutMismatch: return "cut-mismatch";
        case ErrorCode::MeasureViolation: return "measure-violation";
        case ErrorCode::RulesetUnsupported: return "ruleset-unsupported";
        case ErrorCode::NotFixedPoint: return "not-fixed-point";
        case ErrorCode::ConditionMissing: return "condition-missing";
        case ErrorCode::InvalidInput: return "invalid-input";
        case ErrorCode::Internal: return "internal";
    }
    return "?";
}

}  // namespace cfs
