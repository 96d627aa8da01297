#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace augnewton {

/// Input text does not conform to the polynomial grammar.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A mathematical consistency check failed (transcription bug, broken
/// invariant, expected-count mismatch). Callers treat this as exit code 1.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The polytope dimension policy rejects this input: full hull and counting
/// support exists for intrinsic dimension <= 3, and for simplices (vertex
/// count d+1) in any dimension. Everything else fails loudly here.
class UnsupportedDimension : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace augnewton
