#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clausum {

// Base for every library-thrown error; still catchable as std::runtime_error.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated an operation's stated precondition.
class argument_error : public error {
 public:
  using error::error;
};

// The argument sits exactly on a pole of the function being evaluated.
class pole_error : public argument_error {
 public:
  using argument_error::argument_error;
};

// The requested parameter triggers a removable singularity covered elsewhere
// (the c = 1 Clausen sum, served by basel_case).
class singular_case_error : public argument_error {
 public:
  using argument_error::argument_error;
};

// Evaluation left the mathematical domain (log of a nonpositive value, square
// root of a negative value, division by a value indistinguishable from zero).
class domain_error : public error {
 public:
  using error::error;
};

// Text could not be parsed; `position` is the byte offset of the failure.
class parse_error : public error {
 public:
  parse_error(const std::string& msg, std::size_t position)
      : error(msg + " (at byte " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// The requested certified accuracy is unreachable within resource limits.
// `best_bound` is the tightest bound that was achievable, rendered decimally.
class accuracy_error : public error {
 public:
  accuracy_error(const std::string& msg, const std::string& best_bound)
      : error(msg + " (best achievable bound: " + best_bound + ")"),
        best_bound_(best_bound) {}
  const std::string& best_bound() const { return best_bound_; }

 private:
  std::string best_bound_;
};

}  // namespace clausum
