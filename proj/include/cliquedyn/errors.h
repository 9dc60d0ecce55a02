#ifndef CLIQUEDYN_ERRORS_H_
#define CLIQUEDYN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cliquedyn {

// Malformed input: unknown ids, self-loops, bad files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource cap was hit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Chart extension produced two images for one coordinate, or merged two
// coordinates onto one host vertex.
class InjectivityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cliquedyn

#endif  // CLIQUEDYN_ERRORS_H_
