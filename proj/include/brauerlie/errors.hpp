#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brauerlie {

enum class Errc {
  parse,
  type,
  orientation,
  boundary,
  flavor,
  unsupported_ring,
  dimension,
  not_idempotent,
  shape,
  validation,
  precondition,
  unspecialized_delta,
  io,
  invalid_argument,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(Errc::parse, what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace brauerlie
