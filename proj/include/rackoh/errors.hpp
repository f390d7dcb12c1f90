#pragma once

#include <stdexcept>
#include <string>

namespace rackoh {

/// Malformed input: bad dimensions, out-of-range entries, unparsable files.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A mathematical precondition of an operation does not hold for the given
/// (well-formed) input, e.g. a non-invariant factor passed to a product.
class PreconditionError : public InputError {
 public:
  explicit PreconditionError(const std::string& what) : InputError(what) {}
};

/// A configured cap (closure size, matrix memory, bit size, enumeration
/// budget) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rackoh
