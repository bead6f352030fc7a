#pragma once

#include <stdexcept>
#include <string>

namespace gentop {

enum class ErrorKind { Structural, Validation, Precondition, Resource, UnknownId, Parse };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace gentop
