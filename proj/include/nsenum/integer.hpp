#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nsenum {

/// Arbitrary-precision signed integer used for all exact coordinate work.
using Integer = boost::multiprecision::cpp_int;

}  // namespace nsenum
