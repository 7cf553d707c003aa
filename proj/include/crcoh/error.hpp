#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crcoh {

/// Domain failures raised by the library. The kind name is what the CLI
/// prints on stderr, so it must stay stable.
enum class ErrorKind {
  ZeroWeight,
  IneffectiveAction,
  InvalidDatum,
  InvalidLabel,
  InvalidBasisElement,
  EmptySector,
  NonIntegralExponent,
  NonComposable,
  DomainError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroWeight: return "ZeroWeight";
    case ErrorKind::IneffectiveAction: return "IneffectiveAction";
    case ErrorKind::InvalidDatum: return "InvalidDatum";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::InvalidBasisElement: return "InvalidBasisElement";
    case ErrorKind::EmptySector: return "EmptySector";
    case ErrorKind::NonIntegralExponent: return "NonIntegralExponent";
    case ErrorKind::NonComposable: return "NonComposable";
    case ErrorKind::DomainError: return "DomainError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace crcoh
