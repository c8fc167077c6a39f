#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ribbonlab {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace ribbonlab
