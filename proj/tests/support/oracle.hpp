#pragma once

// Test-only reference evaluator for fuzzy conditions. It shares no code with
// the library's catalog or evaluator: curve parameters are a literal table
// and the piecewise formulas are written out here.

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

#include "donormatch/query/ast.hpp"

namespace oracle {

struct Record {
  double age;
  double distance;
  double days;
};

inline std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

inline double left(double a, double b, double x) {
  if (x <= a) return 1.0;
  if (x >= b) return 0.0;
  return (b - x) / (b - a);
}

inline double tri(double a, double m, double b, double x) {
  if (x <= a || x >= b) return 0.0;
  if (x == m) return 1.0;
  return x < m ? (x - a) / (m - a) : (b - x) / (b - m);
}

inline double right(double a, double b, double x) {
  if (x <= a) return 0.0;
  if (x >= b) return 1.0;
  return (x - a) / (b - a);
}

inline double degree(const std::string& attribute, const std::string& label, const Record& r) {
  const auto attr = lower(attribute);
  const auto lab = lower(label);
  if (attr == "usia" || attr == "age") {
    if (lab == "muda") return left(17, 33, r.age);
    if (lab == "baya") return tri(17, 33, 60, r.age);
    if (lab == "tua") return right(33, 60, r.age);
  } else if (attr == "jarak" || attr == "distance") {
    if (lab == "dekat") return left(1000, 10000, r.distance);
    if (lab == "agakjauh") return tri(1000, 5000, 10000, r.distance);
    if (lab == "jauh") return right(1000, 10000, r.distance);
  } else if (attr == "waktu_donor" || attr == "time") {
    if (lab == "baru") return left(90, 300, r.days);
    if (lab == "agaklama") return tri(90, 195, 300, r.days);
    if (lab == "lama") return right(90, 300, r.days);
  }
  throw std::invalid_argument("oracle: unknown predicate " + attribute + "=" + label);
}

inline double evaluate(const donormatch::query::Condition& c, const Record& r) {
  using K = donormatch::query::Condition::Kind;
  switch (c.kind()) {
    case K::Predicate: return degree(c.attribute(), c.label(), r);
    case K::Not: return 1.0 - evaluate(c.child(), r);
    case K::And: {
      const double a = evaluate(c.left(), r);
      const double b = evaluate(c.right(), r);
      return a < b ? a : b;
    }
    case K::Or: {
      const double a = evaluate(c.left(), r);
      const double b = evaluate(c.right(), r);
      return a > b ? a : b;
    }
  }
  throw std::logic_error("oracle: bad node");
}

}  // namespace oracle
