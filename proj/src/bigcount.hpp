#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ltc {

// Exact unbounded nonnegative integer; tiling counts grow exponentially.
using BigCount = boost::multiprecision::cpp_int;

}  // namespace ltc
