#pragma once

#include <stdexcept>
#include <string>

namespace jensen {

// Malformed textual input: cycle notation, group-spec files, coefficient lists.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable size cap (closure, enumeration, oracle) would be exceeded.
class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// An operation that cannot be performed on the given object at all,
// e.g. enumerating an infinite solution group.
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jensen
