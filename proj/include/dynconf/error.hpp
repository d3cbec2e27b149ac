#pragma once

#include <stdexcept>
#include <string>

namespace dynconf {

enum class ErrorCode {
    Ok = 0,
    IllegalRank,
    IllegalGroup,
    NotWeaklyAdmissible,
    NotClassicalType,
    InvalidConfiguration,
    NonTerminating,
    UnknownVertex,
    NotAConfiguration,
    NotPlain,
    WrongClass,
    NotGStable,
    CountMismatch,
    Clipped,
    Overflow,
    ParseError,
    IoError,
    InvalidArgument,
    TimeBudgetExceeded,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace dynconf
