#ifndef MEC_ERRORS_HPP
#define MEC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mec {

// Base for all domain errors raised by the library. CLI maps these to exit 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Edge set admits no topological order. Carries one witness cycle as a node
// sequence v0, v1, ..., vk with edges v0->v1->...->vk->v0.
class CycleError : public Error {
 public:
  CycleError(const std::string& what, std::vector<int> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness_cycle() const noexcept { return witness_; }

 private:
  std::vector<int> witness_;
};

class SelfLoopError : public Error {
 public:
  using Error::Error;
};

class DuplicateEdgeError : public Error {
 public:
  using Error::Error;
};

class MissingEdgeError : public Error {
 public:
  using Error::Error;
};

class NodeCountMismatchError : public Error {
 public:
  using Error::Error;
};

class SkeletonMismatchError : public Error {
 public:
  using Error::Error;
};

class NotEquivalentError : public Error {
 public:
  using Error::Error;
};

class NoDifferenceError : public Error {
 public:
  using Error::Error;
};

class NotCoveredCliqueError : public Error {
 public:
  using Error::Error;
};

class CardinalityMismatchError : public Error {
 public:
  using Error::Error;
};

class UndefinedForEmptyDataError : public Error {
 public:
  using Error::Error;
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class NotMemberError : public Error {
 public:
  using Error::Error;
};

// Bad argument values that are not covered by a more specific error above.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. line/column are 1-based; column 0 means whole line.
class ParseError : public Error {
 public:
  ParseError(const std::string& file, int line, int column, const std::string& message)
      : Error(format(file, line, column, message)), file_(file), line_(line), column_(column) {}

  const std::string& file() const noexcept { return file_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& file, int line, int column,
                            const std::string& message) {
    std::string out = file + ":" + std::to_string(line);
    if (column > 0) out += ":" + std::to_string(column);
    return out + ": " + message;
  }

  std::string file_;
  int line_ = 0;
  int column_ = 0;
};

}  // namespace mec

#endif  // MEC_ERRORS_HPP
