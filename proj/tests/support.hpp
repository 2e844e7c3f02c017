#ifndef HSCLAB_TESTS_SUPPORT_HPP_
#define HSCLAB_TESTS_SUPPORT_HPP_

#include <doctest.h>

#include "hsclab/rational.hpp"

inline hsc::Rational Q(const char* text) { return hsc::parse_rational(text); }

#endif
