#pragma once

#include <stdexcept>
#include <string>

namespace maxclass {

// Failure categories of the public operations.
enum class Errc {
  invalid_parameter,
  spec_mismatch,
  not_a_unit,
  wrong_family,
  not_in_h,
  not_self_conjugated,
  cap_exceeded,
  out_of_range,
  closure_cap,
  not_normal,
  size_cap,
  unsupported_range,
  unknown_check,
  parse_error,
  io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace maxclass
