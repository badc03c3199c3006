#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace drtk {

/// Exact rational scalar used for all algebraic identity checks.
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(double r) { return r; }

/// Returns q with q*q == r, or throws if r is not a perfect rational square.
Rat rat_sqrt_exact(const Rat& r);

} // namespace drtk
