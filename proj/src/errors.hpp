#pragma once

#include <stdexcept>
#include <string>

namespace chitop {

// Error taxonomy shared by the whole engine. The numeric codes double as
// process exit codes and as C API status values.
enum class ErrorKind : int {
    Parse = 2,
    Precondition = 3,
    Budget = 4,
    Internal = 5,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg, int line = -1, int col = -1)
        : std::runtime_error(std::move(msg)), kind(kind), line(line), col(col) {}

    ErrorKind kind;
    int line;
    int col;
};

inline Error parse_error(std::string msg, int line = -1, int col = -1) {
    return Error(ErrorKind::Parse, std::move(msg), line, col);
}
inline Error precondition_error(std::string msg) {
    return Error(ErrorKind::Precondition, std::move(msg));
}
inline Error budget_error(std::string msg) {
    return Error(ErrorKind::Budget, std::move(msg));
}
inline Error internal_error(std::string msg) {
    return Error(ErrorKind::Internal, std::move(msg));
}

} // namespace chitop
