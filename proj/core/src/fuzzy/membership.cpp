#include "donormatch/fuzzy/membership.hpp"

#include <cmath>

#include "donormatch/error.hpp"

namespace donormatch::fuzzy {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool finite(double v) { return std::isfinite(v); }

void validate(const MembershipCurve::Shape& shape) {
  std::visit(Overloaded{
                 [](const LeftShoulder& s) {
                   if (!finite(s.a) || !finite(s.b) || !(s.a < s.b))
                     throw ValidationError("left shoulder requires finite a < b");
                 },
                 [](const Triangle& s) {
                   if (!finite(s.a) || !finite(s.m) || !finite(s.b) || !(s.a < s.m && s.m < s.b))
                     throw ValidationError("triangle requires finite a < m < b");
                 },
                 [](const RightShoulder& s) {
                   if (!finite(s.a) || !finite(s.b) || !(s.a < s.b))
                     throw ValidationError("right shoulder requires finite a < b");
                 },
             },
             shape);
}

}  // namespace

MembershipCurve::MembershipCurve(Shape shape) : shape_(shape) { validate(shape_); }

std::string MembershipCurve::shape_name() const {
  return std::visit(Overloaded{
                        [](const LeftShoulder&) { return std::string("left_shoulder"); },
                        [](const Triangle&) { return std::string("triangle"); },
                        [](const RightShoulder&) { return std::string("right_shoulder"); },
                    },
                    shape_);
}

double MembershipCurve::operator()(double x) const noexcept {
  return std::visit(Overloaded{
                        [x](const LeftShoulder& s) {
                          if (x <= s.a) return 1.0;
                          if (x >= s.b) return 0.0;
                          return (s.b - x) / (s.b - s.a);
                        },
                        [x](const Triangle& s) {
                          if (x <= s.a || x >= s.b) return 0.0;
                          if (x == s.m) return 1.0;
                          if (x < s.m) return (x - s.a) / (s.m - s.a);
                          return (s.b - x) / (s.b - s.m);
                        },
                        [x](const RightShoulder& s) {
                          if (x <= s.a) return 0.0;
                          if (x >= s.b) return 1.0;
                          return (x - s.a) / (s.b - s.a);
                        },
                    },
                    shape_);
}

}  // namespace donormatch::fuzzy
