#pragma once

#include <stdexcept>
#include <string>

namespace sntrank {

// Process exit codes used by the CLI. Library code only throws.
enum class ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParse = 2,
  kNotSupported = 3,
  kResourceLimit = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ExitCode::kParse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ExitCode::kFailure, what) {}
};

// A precondition of an elementary operation does not hold at the given site.
class PreconditionViolated : public Error {
 public:
  explicit PreconditionViolated(const std::string& what)
      : Error(ExitCode::kFailure, what) {}
};

class InvalidCover : public Error {
 public:
  explicit InvalidCover(const std::string& what)
      : Error(ExitCode::kFailure, what) {}
};

class NotInFamily : public Error {
 public:
  explicit NotInFamily(const std::string& what)
      : Error(ExitCode::kNotSupported, what) {}
};

class NotSupported : public Error {
 public:
  explicit NotSupported(const std::string& what)
      : Error(ExitCode::kNotSupported, what) {}
};

class ResourceLimit : public Error {
 public:
  explicit ResourceLimit(const std::string& what)
      : Error(ExitCode::kResourceLimit, what) {}
};

}  // namespace sntrank
