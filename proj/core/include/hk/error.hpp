#ifndef HK_ERROR_HPP_
#define HK_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace hk {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller handed us something outside a documented precondition
// (bad letter, index out of range, malformed input file, ...).
struct invalid_input : error {
  using error::error;
};

// A structural guarantee the library relies on failed to hold at
// runtime. This is a bug, either here or in the theory the code
// encodes, and is surfaced loudly instead of being patched over.
struct internal_error : error {
  using error::error;
};

namespace detail {
[[noreturn]] inline void throw_invalid(std::string const& msg) {
  throw invalid_input(msg);
}
[[noreturn]] inline void throw_internal(std::string const& msg) {
  throw internal_error(msg);
}
}  // namespace detail

}  // namespace hk

#endif  // HK_ERROR_HPP_
