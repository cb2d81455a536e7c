#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgsize {

// Root of every error thrown by the library. Callers that only need a
// diagnostic can catch this and print what().
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FileNotFound : public Error {
 public:
  explicit FileNotFound(const std::string& path)
      : Error("file not found: " + path), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t expected, std::size_t actual)
      : Error("length mismatch: expected " + std::to_string(expected) + " values, got " +
              std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}
  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

class ValidationErrors : public Error {
 public:
  explicit ValidationErrors(std::vector<std::string> problems)
      : Error(join(problems)), problems_(std::move(problems)) {}
  const std::vector<std::string>& problems() const noexcept { return problems_; }

  // True if any problem message mentions `needle`.
  bool mentions(const std::string& needle) const {
    for (const auto& p : problems_) {
      if (p.find(needle) != std::string::npos) return true;
    }
    return false;
  }

 private:
  static std::string join(const std::vector<std::string>& problems) {
    std::string out = "scenario validation failed:";
    for (const auto& p : problems) out += "\n  - " + p;
    return out;
  }
  std::vector<std::string> problems_;
};

#define MGSIZE_DEFINE_ERROR(Name)   \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  };

MGSIZE_DEFINE_ERROR(InvalidVariability)
MGSIZE_DEFINE_ERROR(NonPositiveHeight)
MGSIZE_DEFINE_ERROR(BelowMinLoad)
MGSIZE_DEFINE_ERROR(BoundViolation)
MGSIZE_DEFINE_ERROR(InvalidDesign)
MGSIZE_DEFINE_ERROR(ZeroEnergyServed)
MGSIZE_DEFINE_ERROR(ZeroInput)
MGSIZE_DEFINE_ERROR(EmptySearchSpace)
MGSIZE_DEFINE_ERROR(InvalidWeights)
MGSIZE_DEFINE_ERROR(DegenerateBounds)
MGSIZE_DEFINE_ERROR(InvalidPerturbation)
MGSIZE_DEFINE_ERROR(EmptyInput)
MGSIZE_DEFINE_ERROR(ConfigError)

#undef MGSIZE_DEFINE_ERROR

}  // namespace mgsize
