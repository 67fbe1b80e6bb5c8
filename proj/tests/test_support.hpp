#pragma once

#include "maplaw/errors.hpp"
#include "maplaw/point.hpp"
#include "maplaw/relation.hpp"

#include <utility>
#include <vector>

namespace test_support {

inline maplaw::Rational rat(const char* text) { return maplaw::parse_rational(text); }

inline maplaw::Point pt(std::vector<long long> coords) {
  std::vector<maplaw::Rational> lifted(coords.begin(), coords.end());
  return maplaw::Point(std::move(lifted));
}

// Scalar mapping from integer pairs; the workhorse of these suites.
inline maplaw::FiniteMapping sm(const std::vector<std::pair<long long, long long>>& pairs,
                                std::string meta = "") {
  std::vector<std::pair<maplaw::Rational, maplaw::Rational>> lifted;
  lifted.reserve(pairs.size());
  for (const auto& [x, y] : pairs) lifted.emplace_back(x, y);
  return maplaw::mapping_from_scalars(lifted, std::move(meta));
}

inline maplaw::ConceptSet scalar_concept(std::string name, maplaw::Side side,
                                         const std::vector<long long>& values) {
  std::vector<maplaw::Point> members;
  members.reserve(values.size());
  for (long long v : values) members.push_back(maplaw::scalar_point(maplaw::Rational(v)));
  return maplaw::ConceptSet(std::move(name), side, std::move(members));
}

}  // namespace test_support

// Asserts that the expression raises maplaw::Error with the given code.
#define CHECK_RAISES(code_, ...)                               \
  do {                                                         \
    bool caught_ = false;                                      \
    try {                                                      \
      __VA_ARGS__;                                             \
    } catch (const maplaw::Error& e_) {                        \
      caught_ = true;                                          \
      CHECK(e_.code() == maplaw::Errc::code_);                 \
    }                                                          \
    CHECK_MESSAGE(caught_, "expected Errc::" #code_ " from: " #__VA_ARGS__); \
  } while (0)
