#pragma once

#include <string>
#include <variant>

namespace donormatch::fuzzy {

/// Degree 1 up to `a`, falling linearly to 0 at `b`.
struct LeftShoulder {
  double a;
  double b;
  friend bool operator==(const LeftShoulder&, const LeftShoulder&) = default;
};

/// 0 at `a`, rising to 1 at the peak `m`, back to 0 at `b`.
struct Triangle {
  double a;
  double m;
  double b;
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// 0 up to `a`, rising linearly to 1 at `b`.
struct RightShoulder {
  double a;
  double b;
  friend bool operator==(const RightShoulder&, const RightShoulder&) = default;
};

/// A validated piecewise-linear membership curve.
///
/// The breakpoint ordering is checked on construction, so evaluation is a
/// total function over finite inputs.
class MembershipCurve {
 public:
  using Shape = std::variant<LeftShoulder, Triangle, RightShoulder>;

  /// Throws ValidationError if the breakpoints are not strictly increasing
  /// or not finite.
  MembershipCurve(Shape shape);  // NOLINT(google-explicit-constructor)
  MembershipCurve(LeftShoulder s) : MembershipCurve(Shape{s}) {}   // NOLINT
  MembershipCurve(Triangle s) : MembershipCurve(Shape{s}) {}       // NOLINT
  MembershipCurve(RightShoulder s) : MembershipCurve(Shape{s}) {}  // NOLINT

  static MembershipCurve left_shoulder(double a, double b) { return LeftShoulder{a, b}; }
  static MembershipCurve triangle(double a, double m, double b) { return Triangle{a, m, b}; }
  static MembershipCurve right_shoulder(double a, double b) { return RightShoulder{a, b}; }

  const Shape& shape() const noexcept { return shape_; }

  /// "left_shoulder", "triangle" or "right_shoulder".
  std::string shape_name() const;

  double operator()(double x) const noexcept;

  friend bool operator==(const MembershipCurve&, const MembershipCurve&) = default;

 private:
  Shape shape_;
};

/// Degree of membership of `x` in `curve`, in [0, 1].
inline double membership(const MembershipCurve& curve, double x) noexcept { return curve(x); }

}  // namespace donormatch::fuzzy
