#pragma once

#include <stdexcept>
#include <string>

namespace lietk {

enum class ErrorKind {
    InvalidArgument,
    DimensionMismatch,
    DivisionByZero,
    NotIdeal,
    NotClosed,
    NotFiniteType,
    NotNilpotent,
    NonSplit,
    NotSemisimple,
    Parse,
    InternalDefect,
};

const char *to_string(ErrorKind kind);

class LieError : public std::runtime_error {
  public:
    LieError(ErrorKind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) {
    throw LieError(kind, what);
}

} // namespace lietk
