#pragma once

#include <stdexcept>
#include <string>

namespace sudiag {

// Raised when a requested ground-set size exceeds the configured bound
// (kMaxN).  The CLI maps this to its own exit code so callers can tell
// "too big" apart from plain usage errors.
class SizeCapError : public std::runtime_error {
public:
  explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sudiag
