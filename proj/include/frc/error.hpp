#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frc {

// Base for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad indices, non-tactical structures, parameter violations.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A brute-force search would exceed its configured state budget.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// A failed node holds a symbol no surviving node has (repetition degree 1).
class Unrepairable : public Error {
 public:
  Unrepairable(std::size_t node, std::size_t point)
      : Error("node " + std::to_string(node) + " is unrepairable: point " +
              std::to_string(point) + " has no surviving holder"),
        node_(node),
        point_(point) {}

  std::size_t node() const noexcept { return node_; }
  std::size_t point() const noexcept { return point_; }

 private:
  std::size_t node_;
  std::size_t point_;
};

namespace detail {

[[noreturn]] inline void invalid(const std::string& what) { throw InvalidInput(what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) invalid(what);
}

}  // namespace detail
}  // namespace frc
