#pragma once

namespace rankcop {

// Standard normal CDF, computed through erfc. Absolute error is well under
// 1e-12 over the representable range; underflows to 0 (rounds to 1) once
// |x| exceeds roughly 38.5.
double normal_cdf(double x);

// Standard normal quantile (inverse CDF), Wichura's PPND16 rational
// approximation. Round-trips with normal_cdf to better than 1e-9 and throws
// NumericError unless p lies strictly inside (0, 1).
double normal_quantile(double p);

}  // namespace rankcop
