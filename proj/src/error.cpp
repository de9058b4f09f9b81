#include "tsbench/error.hpp"

namespace tsbench {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::file_not_found: return "file_not_found";
    case ErrorCode::missing_column: return "missing_column";
    case ErrorCode::unparseable_value: return "unparseable_value";
    case ErrorCode::unknown_dataset: return "unknown_dataset";
    case ErrorCode::invalid_split: return "invalid_split";
    case ErrorCode::patch_too_large: return "patch_too_large";
    case ErrorCode::length_mismatch: return "length_mismatch";
    case ErrorCode::empty_input: return "empty_input";
    case ErrorCode::zero_observation: return "zero_observation";
    case ErrorCode::zero_variance: return "zero_variance";
    case ErrorCode::duplicate_name: return "duplicate_name";
    case ErrorCode::duplicate_method: return "duplicate_method";
    case ErrorCode::unknown_method: return "unknown_method";
    case ErrorCode::unknown_metric: return "unknown_metric";
    case ErrorCode::series_too_short: return "series_too_short";
    case ErrorCode::unsupported_strategy: return "unsupported_strategy";
    case ErrorCode::invalid_forecast: return "invalid_forecast";
    case ErrorCode::invalid_config: return "invalid_config";
    }
    return "unknown";
}

} // namespace tsbench
