#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ewi {

// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structural problem with an input graph (self-loop, duplicate edge,
// disconnected, out-of-range id, ...).
class GraphError : public Error {
public:
    using Error::Error;
};

// Malformed text input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// 64-bit unsigned arithmetic would have wrapped.
class OverflowError : public Error {
public:
    using Error::Error;
};

// An internal invariant failed; indicates a bug or invalid input that slipped
// through validation.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// Hexagon set does not describe a valid (hole-free, connected) benzenoid.
class BenzenoidError : public Error {
public:
    struct Hex { int q, r; };

    BenzenoidError(const std::string& what, std::vector<Hex> offending)
        : Error(what), offending_(std::move(offending)) {}
    const std::vector<Hex>& offending() const noexcept { return offending_; }

private:
    std::vector<Hex> offending_;
};

enum class RejectReason {
    OddCycle,
    ClassNotACut,
    LabelingMismatch,
};

inline const char* to_string(RejectReason r) {
    switch (r) {
    case RejectReason::OddCycle: return "not a partial cube (odd cycle)";
    case RejectReason::ClassNotACut: return "not a partial cube (class not a cut)";
    case RejectReason::LabelingMismatch: return "not a partial cube (labeling distance mismatch)";
    }
    return "not a partial cube";
}

// Input graph is not a partial cube. Thrown by operations that require one;
// certify_partial_cube() reports the same information as a value instead.
class NotPartialCube : public Error {
public:
    NotPartialCube(RejectReason reason, const std::string& detail = {})
        : Error(detail.empty() ? std::string(to_string(reason))
                               : std::string(to_string(reason)) + ": " + detail),
          reason_(reason) {}
    RejectReason reason() const noexcept { return reason_; }

private:
    RejectReason reason_;
};

} // namespace ewi
