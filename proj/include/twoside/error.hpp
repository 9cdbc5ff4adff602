#pragma once

#include <stdexcept>
#include <string>

namespace twoside {

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
    Validation,  // bad input or a violated precondition (exit 2)
    Tier,        // result undetermined at the available certification tier (exit 3)
    Resource,    // configured size or degree limit exceeded (exit 4)
    Internal,    // a verified identity failed; indicates a bug (exit 1)
};

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Validation: return 2;
        case ErrorKind::Tier: return 3;
        case ErrorKind::Resource: return 4;
        case ErrorKind::Internal: return 1;
    }
    return 1;
}

}  // namespace twoside
