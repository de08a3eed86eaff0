#pragma once

#include <stdexcept>
#include <string>

namespace gasket {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the caller's input was violated (bad level, vertex not in
/// the graph, disconnected domain, missing field value, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// The constructive solver reached an internally inconsistent state.
class LazarusError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InputError(msg);
}

} // namespace detail
} // namespace gasket
