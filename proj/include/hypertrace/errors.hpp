#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypertrace {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex id outside [0, n) or a vertex subset not contained in the vertex set.
class out_of_range_vertex : public error {
 public:
  using error::error;
};

/// An argument violates an operation's precondition (e.g. k > |V|).
class invalid_input : public error {
 public:
  using error::error;
};

/// The quantity is not defined for this input (e.g. dt on a hypergraph with repeated edges).
class undefined_quantity : public error {
 public:
  using error::error;
};

/// No set satisfies the requested predicate.
class infeasible : public error {
 public:
  using error::error;
};

/// An exhaustive search would exceed the configured enumeration budget.
class budget_exceeded : public error {
 public:
  budget_exceeded(const std::string& what, std::uint64_t needed, std::uint64_t allowed)
      : error(what + ": needs " + std::to_string(needed) + " evaluations, budget is " +
              std::to_string(allowed)),
        needed_(needed),
        allowed_(allowed) {}

  std::uint64_t needed() const noexcept { return needed_; }
  std::uint64_t allowed() const noexcept { return allowed_; }

 private:
  std::uint64_t needed_;
  std::uint64_t allowed_;
};

class parse_error : public error {
 public:
  parse_error(std::size_t line, const std::string& msg)
      : error("line " + std::to_string(line) + ": " + msg), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hypertrace
