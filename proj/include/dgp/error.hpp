#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dgp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value does not have the shape its code demands.
class MalformedValue : public Error {
 public:
  explicit MalformedValue(const std::string& what) : Error("malformed value: " + what) {}
};

/// A recursive operation ran out of its unfolding budget.
class FuelExhausted : public Error {
 public:
  FuelExhausted() : Error("fuel exhausted") {}
};

class IndexNotInSet : public Error {
 public:
  explicit IndexNotInSet(const std::string& label)
      : Error("index not in set: " + label), label_(label) {}

  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class UnknownProperty : public Error {
 public:
  explicit UnknownProperty(const std::string& name) : Error("unknown property: " + name) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
             const std::string& found)
      : Error(format(line, column, expected, found)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::vector<std::string>& expected, const std::string& found) {
    std::string msg = "parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": ";
    if (!expected.empty()) {
      msg += "expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i != 0) msg += i + 1 == expected.size() ? " or " : ", ";
        msg += expected[i];
      }
      msg += ", ";
    }
    return msg + "found " + found;
  }

  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

}  // namespace dgp
