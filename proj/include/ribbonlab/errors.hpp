#pragma once

#include <stdexcept>
#include <string>

namespace ribbonlab {

// Malformed region, tiling or root-set text.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource limit (e.g. the DP memo cap) was hit. Never silently
// degraded into a wrong answer.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Entropy of a region with zero tilings.
class UndefinedEntropy : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace ribbonlab
