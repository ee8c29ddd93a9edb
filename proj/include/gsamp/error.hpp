#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsamp {

enum class ErrorKind {
    invalid_parameter,
    parse_error,
    data_error,
    numeric_error,
    range_error,
    generation_failure,
    io_error,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind categories
/// so callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }
    /// The message without the kind prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline void require(bool condition, const std::string& message)
{
    if (!condition) {
        fail(ErrorKind::invalid_parameter, message);
    }
}

}  // namespace gsamp
