#pragma once

#include <stdexcept>
#include <string>

#include "resilq/resilq.h"

namespace resilq {

/// Exception carrying one of the public status codes. The C layer maps it
/// back to rq_status; internal code throws and lets RAII unwind.
class Error : public std::runtime_error {
public:
    Error(rq_status code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    rq_status code() const noexcept { return code_; }

private:
    rq_status code_;
};

[[noreturn]] inline void fail(rq_status code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, rq_status code, const std::string& message) {
    if (!condition) fail(code, message);
}

}  // namespace resilq
