#pragma once

#include <stdexcept>
#include <string>

namespace hexset {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct OutOfDomainError : Error {
  using Error::Error;
};

struct GameOverError : Error {
  using Error::Error;
};

struct NoSpaceError : Error {
  using Error::Error;
};

struct GenerationFailedError : Error {
  using Error::Error;
};

struct DesyncError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, long line) : Error(msg), line_number(line) {}
  long line_number = 0;
};

struct VersionError : Error {
  using Error::Error;
};

struct ReplayInvalidError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace hexset
