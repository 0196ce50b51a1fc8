#pragma once

#include <stdexcept>
#include <string>

namespace cgt {

// Structured error kinds so callers (and the CLI) can map failures to
// exit codes without string matching.
enum class errc {
  bad_input,
  degree_mismatch,
  not_bijective,
  not_prime,
  not_in_group,
  not_subgroup,
  cap_exceeded,
  unknown_entry,
  data_corruption,
  audit_failure,
  internal,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace cgt
