#pragma once

#include <stdexcept>
#include <string>

namespace ledti {

// Categories cross the C boundary as status codes; the what() string is
// surfaced through the last-error buffer.
enum class ErrorCategory {
    Argument,     // bad parameter value, width, or range
    Format,       // malformed file contents (names the offending field)
    Io,           // filesystem failure
    Verify,       // a TI property or self-check failed
    State,        // operation invalid in the current simulator state
};

class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, const std::string& msg)
        : std::runtime_error(msg), category_(cat) {}
    ErrorCategory category() const { return category_; }

private:
    ErrorCategory category_;
};

inline Error argument_error(const std::string& msg) {
    return Error(ErrorCategory::Argument, msg);
}
inline Error format_error(const std::string& msg) {
    return Error(ErrorCategory::Format, msg);
}
inline Error io_error(const std::string& msg) {
    return Error(ErrorCategory::Io, msg);
}
inline Error verify_error(const std::string& msg) {
    return Error(ErrorCategory::Verify, msg);
}
inline Error state_error(const std::string& msg) {
    return Error(ErrorCategory::State, msg);
}

}  // namespace ledti
