#pragma once

#include <stdexcept>
#include <string>

namespace tsbench {

enum class ErrorCode {
    file_not_found,
    missing_column,
    unparseable_value,
    unknown_dataset,
    invalid_split,
    patch_too_large,
    length_mismatch,
    empty_input,
    zero_observation,
    zero_variance,
    duplicate_name,
    duplicate_method,
    unknown_method,
    unknown_metric,
    series_too_short,
    unsupported_strategy,
    invalid_forecast,
    invalid_config,
};

const char* to_string(ErrorCode code);

/// Library-wide exception. `code()` identifies the failure class so callers
/// can branch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace tsbench
