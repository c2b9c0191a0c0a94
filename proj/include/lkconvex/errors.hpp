#ifndef LKCONVEX_ERRORS_HPP
#define LKCONVEX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lkconvex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph construction or unparsable graph text.
class InvalidGraph : public Error {
public:
    using Error::Error;
};

class InvalidVertex : public Error {
public:
    using Error::Error;
};

/// An operation that assumes a connected host graph received a disconnected one.
class DisconnectedGraph : public Error {
public:
    DisconnectedGraph() : Error("graph is not connected") {}
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Exponential enumerations refuse graphs above a vertex cap.
class CapExceeded : public Error {
public:
    CapExceeded(std::size_t n, std::size_t cap)
        : Error("graph has " + std::to_string(n) + " vertices; exhaustive enumeration is capped at "
                + std::to_string(cap) + " (raise the cap explicitly to proceed)"),
          n_(n), cap_(cap) {}

    std::size_t vertices() const noexcept { return n_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t n_;
    std::size_t cap_;
};

} // namespace lkconvex

#endif // LKCONVEX_ERRORS_HPP
