#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace distrank {

/// Base of every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Self-loop or otherwise inadmissible vertex pair.
class invalid_edge_error : public error {
public:
    using error::error;
};

class index_error : public error {
public:
    using error::error;
};

/// Argument outside the mathematical domain of an operation.
class domain_error : public error {
public:
    using error::error;
};

class not_connected_error : public error {
public:
    not_connected_error() : error("graph is not connected") {}
};

class shape_error : public error {
public:
    using error::error;
};

class degenerate_operation_error : public error {
public:
    using error::error;
};

/// Malformed textual input. `line` is 1-based, `byte` is the 1-based column
/// within that line; either may be 0 when not meaningful.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t line, std::size_t byte)
        : error(describe(what, line, byte)), line_(line), byte_(byte) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t byte() const noexcept { return byte_; }

private:
    static std::string describe(const std::string& what, std::size_t line, std::size_t byte) {
        std::string out = "parse error";
        if (line != 0)
            out += " at line " + std::to_string(line);
        if (byte != 0)
            out += (line != 0 ? ", byte " : " at byte ") + std::to_string(byte);
        return out + ": " + what;
    }

    std::size_t line_;
    std::size_t byte_;
};

/// Raised when an invariant that should be impossible to violate is violated.
class consistency_error : public error {
public:
    using error::error;
};

} // namespace distrank
