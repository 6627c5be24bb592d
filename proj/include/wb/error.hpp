#pragma once
#include <stdexcept>
#include <string>

namespace wb {

// Error taxonomy mirrored by CLI exit codes: usage errors (1), violated
// mathematical preconditions (2), failed internal certificates (3).
enum class ErrorKind { usage = 1, precondition = 2, certificate = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, std::string detail = {})
        : std::runtime_error(detail.empty() ? code : code + ": " + detail),
          kind_(kind),
          code_(std::move(code)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& code() const { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

inline Error usage_error(std::string code, std::string detail = {}) {
    return Error(ErrorKind::usage, std::move(code), std::move(detail));
}
inline Error precondition_error(std::string code, std::string detail = {}) {
    return Error(ErrorKind::precondition, std::move(code), std::move(detail));
}
inline Error certificate_error(std::string code, std::string detail = {}) {
    return Error(ErrorKind::certificate, std::move(code), std::move(detail));
}

}  // namespace wb
