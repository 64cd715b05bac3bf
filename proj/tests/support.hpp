#pragma once

#include <doctest.h>

#include <cmath>

#include "genfrac/error.hpp"

namespace testing {

inline double rel(double got, double want) {
  return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

template <typename Fn>
genfrac::ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const genfrac::Error& e) {
    return e.code();
  }
  FAIL("expected genfrac::Error");
  return genfrac::ErrorCode::ParseError;
}

}  // namespace testing
