#pragma once

#include <cmath>

#include <doctest.h>

// Absolute-tolerance comparison; doctest's Approx is relative-only.
#define CHECK_NEAR(got, want, tol) CHECK(std::abs((got) - (want)) <= (tol))
