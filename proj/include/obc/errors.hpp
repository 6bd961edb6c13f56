#pragma once

#include <stdexcept>
#include <string>

namespace obc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParameterError : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

struct NotACodewordError : Error {
    using Error::Error;
};

struct StreamUnderflowError : Error {
    using Error::Error;
};

struct CapacityExceededError : Error {
    CapacityExceededError(const std::string& msg, std::uint64_t required, std::uint64_t available)
        : Error(msg), required_bits(required), available_bits(available) {}
    std::uint64_t required_bits;
    std::uint64_t available_bits;
};

struct CorruptFrameError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (byte offset " + std::to_string(offset) + ")"), byte_offset(offset) {}
    std::size_t byte_offset;
};

struct UnreachableStateError : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

struct InvalidCodeError : Error {
    using Error::Error;
};

} // namespace obc
