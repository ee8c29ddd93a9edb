#include "gsamp/error.hpp"

namespace gsamp {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::data_error: return "data-error";
    case ErrorKind::numeric_error: return "numeric-error";
    case ErrorKind::range_error: return "range-error";
    case ErrorKind::generation_failure: return "generation-failure";
    case ErrorKind::io_error: return "io-error";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message)
{
}

void fail(ErrorKind kind, const std::string& message)
{
    throw Error(kind, message);
}

}  // namespace gsamp
