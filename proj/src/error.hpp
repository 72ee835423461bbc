#pragma once

#include <stdexcept>
#include <string>

namespace orb {

// Every failure the engine can diagnose (bad file, schema violation, broken
// precondition) is thrown as one of these with a message naming the spot.
struct OrbError : std::runtime_error {
  explicit OrbError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input that is not even well-formed JSON.
struct OrbParseError : OrbError {
  explicit OrbParseError(const std::string& msg) : OrbError(msg) {}
};

// A file that cannot be read at all.
struct OrbIoError : OrbError {
  explicit OrbIoError(const std::string& msg) : OrbError(msg) {}
};

} // namespace orb
