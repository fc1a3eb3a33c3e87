#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pgq {

/// Exact integers for subspace counts and group orders.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace pgq
