#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace contsum {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace contsum
