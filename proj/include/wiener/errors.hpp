#pragma once

#include <stdexcept>
#include <string>

namespace wiener {

// Breach of an internal invariant (never a user-input problem).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw InternalError(what);
}

}  // namespace wiener
