#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gspf {

enum class ErrorCode {
    invalid_parameter,
    degenerate_input,
    invalid_input,
    dimension_mismatch,
    infeasible_sampling,
    singular_sampling,
    singular_normalization,
    invalid_observation,
    infinite_moment,
    invalid_order,
    degenerate_system,
    stability_violation,
    degenerate_frame,
    parse_error,
    io_error,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Library-wide exception. Every failure the library reports carries a code
/// so callers (and the CLI) can branch on the category without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::degenerate_input: return "degenerate-input";
    case ErrorCode::invalid_input: return "invalid-input";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::infeasible_sampling: return "infeasible-sampling";
    case ErrorCode::singular_sampling: return "singular-sampling";
    case ErrorCode::singular_normalization: return "singular-normalization";
    case ErrorCode::invalid_observation: return "invalid-observation";
    case ErrorCode::infinite_moment: return "infinite-moment";
    case ErrorCode::invalid_order: return "invalid-order";
    case ErrorCode::degenerate_system: return "degenerate-system";
    case ErrorCode::stability_violation: return "stability-violation";
    case ErrorCode::degenerate_frame: return "degenerate-frame";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::io_error: return "io-error";
    }
    return "unknown";
}

}  // namespace gspf
