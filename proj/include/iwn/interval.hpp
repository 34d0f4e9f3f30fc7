#pragma once

#include <iosfwd>
#include <string>

namespace iwn {

/// Closed bounded real interval [lo, hi]. A degenerate interval [x, x]
/// behaves as the real number x.
class Interval {
 public:
  constexpr Interval() noexcept = default;
  /// Throws Errc::InvalidInterval when lo > hi or an endpoint is not finite.
  Interval(double lo, double hi);
  explicit Interval(double x) : Interval(x, x) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

  bool is_degenerate() const noexcept { return lo_ == hi_; }
  bool is_zero() const noexcept { return lo_ == 0.0 && hi_ == 0.0; }
  /// outer ⊇ this
  bool within(const Interval& outer) const noexcept {
    return lo_ >= outer.lo_ && hi_ <= outer.hi_;
  }
  bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval operator+(const Interval& a, const Interval& b);
/// Endpoint reversal: [a.lo - b.hi, a.hi - b.lo].
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// a * [1/b.hi, 1/b.lo]; throws Errc::DivisorContainsZero when 0 ∈ b.
Interval operator/(const Interval& a, const Interval& b);

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }

double midpoint(const Interval& a) noexcept;
double radius(const Interval& a) noexcept;
double hausdorff(const Interval& a, const Interval& b) noexcept;

/// Hausdorff magnitude carrying the sign of the dominant endpoint
/// difference. Ties |dl| == |dh| resolve to dh.
double signed_diff(const Interval& a, const Interval& b) noexcept;
/// signed_diff from the endpoint differences dl = a.lo - b.lo, dh = a.hi - b.hi.
double dominant_difference(double dl, double dh) noexcept;

/// Shortest round-trip formatting, "[1,3]" or "[0.5,2.25]".
std::string to_string(const Interval& a);
std::ostream& operator<<(std::ostream& os, const Interval& a);

}  // namespace iwn
