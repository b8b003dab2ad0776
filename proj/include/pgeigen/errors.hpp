#pragma once

#include <stdexcept>
#include <string>

namespace pgeigen {

/// Machine-readable failure codes carried by every pgeigen::Error.
enum class errc {
  invalid_parameter,
  unsupported_field,
  division_by_zero,
  incompatible_scalars,
  invalid_pair,
  invalid_support,
  invalid_index,
  invariant_violated,
  suite_skipped,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

inline const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::unsupported_field: return "unsupported-field";
    case errc::division_by_zero: return "division-by-zero";
    case errc::incompatible_scalars: return "incompatible-scalars";
    case errc::invalid_pair: return "invalid-pair";
    case errc::invalid_support: return "invalid-support";
    case errc::invalid_index: return "invalid-index";
    case errc::invariant_violated: return "invariant-violated";
    case errc::suite_skipped: return "suite-skipped";
  }
  return "unknown";
}

}  // namespace pgeigen
