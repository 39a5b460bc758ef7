#pragma once

#include <stdexcept>
#include <string>

namespace airrev {

enum class ErrorKind {
    argument,  // bad parameter or precondition violation
    io,        // filesystem failure
    parse,     // unusable input data
    numeric,   // numerical method failed
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_argument(const std::string& message) {
    throw Error(ErrorKind::argument, message);
}

[[noreturn]] inline void throw_io(const std::string& message) {
    throw Error(ErrorKind::io, message);
}

[[noreturn]] inline void throw_parse(const std::string& message) {
    throw Error(ErrorKind::parse, message);
}

[[noreturn]] inline void throw_numeric(const std::string& message) {
    throw Error(ErrorKind::numeric, message);
}

}  // namespace airrev
