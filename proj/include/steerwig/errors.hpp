#pragma once

#include <stdexcept>
#include <string>

namespace steerwig {

enum class ErrorKind {
  dimension,
  singular_marginal,
  decomposition_domain,
  domain,
  mode_overlap,
  normalization,
  no_photon,
  undefined_minimum,
  insufficient_cutoff,
  parse,
  io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base class for every error raised by the library. The kind lets callers
/// (the CLI in particular) map failures onto exit codes without RTTI games.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::singular_marginal: return "singular-marginal";
    case ErrorKind::decomposition_domain: return "decomposition-domain";
    case ErrorKind::domain: return "domain";
    case ErrorKind::mode_overlap: return "mode-overlap";
    case ErrorKind::normalization: return "normalization";
    case ErrorKind::no_photon: return "no-photon-to-subtract";
    case ErrorKind::undefined_minimum: return "undefined-minimum-location";
    case ErrorKind::insufficient_cutoff: return "insufficient-cutoff";
    case ErrorKind::parse: return "parse";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

}  // namespace steerwig
