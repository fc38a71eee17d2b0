#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sieve {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace sieve
