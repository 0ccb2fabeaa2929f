#pragma once

#include <stdexcept>
#include <string>

namespace atk {

// Domain failure codes. Each maps to a stable name used in CLI error output.
enum class errc {
    zero_vector,
    length_out_of_range,
    not_toric,
    not_contractible,
    length_mismatch,
    no_mark_available,
    not_opposite,
    not_found_within_bounds,
    unknown_continuation,
    not_negative_definite,
};

inline const char* errc_name(errc code) {
    switch (code) {
    case errc::zero_vector: return "ZeroVector";
    case errc::length_out_of_range: return "LengthOutOfRange";
    case errc::not_toric: return "NotToric";
    case errc::not_contractible: return "NotContractible";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::no_mark_available: return "NoMarkAvailable";
    case errc::not_opposite: return "NotOpposite";
    case errc::not_found_within_bounds: return "NotFoundWithinBounds";
    case errc::unknown_continuation: return "UnknownContinuation";
    case errc::not_negative_definite: return "NotNegativeDefinite";
    }
    return "Unknown";
}

class domain_error : public std::runtime_error {
public:
    domain_error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw domain_error(code, message);
}

} // namespace atk
