#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iwn {

enum class Errc {
  InvalidInterval,
  DivisorContainsZero,
  NegativeWeight,
  DuplicateEdge,
  ParseError,
  InvalidNetwork,
  InvalidPartition,
  ZeroTotalWeight,
  ZeroInAdjustedTotal,
  SameCommunity,
  DegenerateDenominator,
  EmptyNetwork,
  IterationLimit,
  TooLarge,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Errors caused by malformed input rather than by the algorithms.
inline bool is_input_error(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::InvalidInterval:
    case Errc::NegativeWeight:
    case Errc::DuplicateEdge:
    case Errc::InvalidNetwork:
      return true;
    default:
      return false;
  }
}

}  // namespace iwn
