#pragma once

#include <complex>
#include <string>

#include "doctest.h"

// |a - b| <= tol * (1 + |b|)
#define CHECK_CLOSE(a, b, tol)                                             \
  do {                                                                     \
    const std::complex<double> lhs_ = (a), rhs_ = (b);                     \
    INFO("lhs = " << lhs_ << ", rhs = " << rhs_);                          \
    CHECK(std::abs(lhs_ - rhs_) <= (tol) * (1.0 + std::abs(rhs_)));        \
  } while (0)

#define CHECK_THROWS_KIND(expr, k)                                         \
  do {                                                                     \
    bool thrown_ = false;                                                  \
    try {                                                                  \
      (void)(expr);                                                        \
    } catch (const flrw::Error& e_) {                                      \
      thrown_ = true;                                                      \
      CHECK(e_.kind() == (k));                                             \
    }                                                                      \
    CHECK(thrown_);                                                        \
  } while (0)
