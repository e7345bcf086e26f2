#pragma once

#include <stdexcept>
#include <string>

namespace elkies {

/// Failure categories shared by every module; the C API maps these one-to-one
/// onto its status codes.
enum class Errc {
  invalid_argument,
  domain,          // mathematically undefined (inverse of zero, zero constant term, ...)
  context_mismatch,
  infeasible,      // enumeration guard tripped
  bad_reduction,
  io,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace elkies
