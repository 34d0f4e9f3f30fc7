#include "iwn/interval.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "iwn/error.hpp"

namespace iwn {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidInterval: return "InvalidInterval";
    case Errc::DivisorContainsZero: return "DivisorContainsZero";
    case Errc::NegativeWeight: return "NegativeWeight";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidNetwork: return "InvalidNetwork";
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::ZeroTotalWeight: return "ZeroTotalWeight";
    case Errc::ZeroInAdjustedTotal: return "ZeroInAdjustedTotal";
    case Errc::SameCommunity: return "SameCommunity";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::EmptyNetwork: return "EmptyNetwork";
    case Errc::IterationLimit: return "IterationLimit";
    case Errc::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(Errc::InvalidInterval, fmt::format("non-finite endpoint [{}, {}]", lo, hi));
  }
  if (lo > hi) {
    throw Error(Errc::InvalidInterval, fmt::format("lo > hi in [{}, {}]", lo, hi));
  }
}

Interval operator+(const Interval& a, const Interval& b) {
  return {a.lo() + b.lo(), a.hi() + b.hi()};
}

Interval operator-(const Interval& a, const Interval& b) {
  return {a.lo() - b.hi(), a.hi() - b.lo()};
}

Interval operator*(const Interval& a, const Interval& b) {
  const double p[] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
  const auto [lo, hi] = std::minmax_element(std::begin(p), std::end(p));
  return {*lo, *hi};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo() <= 0.0 && 0.0 <= b.hi()) {
    throw Error(Errc::DivisorContainsZero, fmt::format("divisor {}", to_string(b)));
  }
  return a * Interval(1.0 / b.hi(), 1.0 / b.lo());
}

double midpoint(const Interval& a) noexcept { return (a.lo() + a.hi()) / 2.0; }

double radius(const Interval& a) noexcept { return (a.hi() - a.lo()) / 2.0; }

double hausdorff(const Interval& a, const Interval& b) noexcept {
  return std::max(std::abs(a.lo() - b.lo()), std::abs(a.hi() - b.hi()));
}

double dominant_difference(double dl, double dh) noexcept {
  return std::abs(dl) > std::abs(dh) ? dl : dh;
}

double signed_diff(const Interval& a, const Interval& b) noexcept {
  return dominant_difference(a.lo() - b.lo(), a.hi() - b.hi());
}

std::string to_string(const Interval& a) { return fmt::format("[{},{}]", a.lo(), a.hi()); }

std::ostream& operator<<(std::ostream& os, const Interval& a) { return os << to_string(a); }

}  // namespace iwn
