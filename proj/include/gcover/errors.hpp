#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcover {

/// A constructor or operation was called outside its domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size limit (table cap, isomorphism cap, lattice cap) was exceeded.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Subgroups or groups with different parents were combined.
class ParentMismatch : public std::invalid_argument {
 public:
  ParentMismatch() : std::invalid_argument("operands belong to different parent groups") {}
};

/// Malformed group specification. `position` is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string atom, const std::string& what)
      : std::runtime_error(format(position, atom, what)), position_(position), atom_(std::move(atom)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& atom() const noexcept { return atom_; }

 private:
  static std::string format(std::size_t position, const std::string& atom, const std::string& what) {
    std::string msg = "at position " + std::to_string(position);
    if (!atom.empty()) msg += " in '" + atom + "'";
    return msg + ": " + what;
  }

  std::size_t position_;
  std::string atom_;
};

}  // namespace gcover
