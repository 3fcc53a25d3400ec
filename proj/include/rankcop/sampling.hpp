#pragma once

#include "rankcop/linalg.hpp"
#include "rankcop/rng.hpp"

namespace rankcop {

// Draw from N(mu, sigma^2) restricted to the open interval (lo, hi); either
// bound may be infinite. The main path inverts the CDF on (Phi(a), Phi(b));
// when that interval is numerically degenerate a rejection sampler on the
// standardized scale takes over. The draw is strictly inside (lo, hi);
// DegenerateIntervalError if no such value can be produced.
double sample_truncated_normal(RngStream& rng, double mu, double sigma,
                               double lo, double hi);

// Wishart draw with integer degrees of freedom: the sum of dof outer products
// of N(0, scale) vectors, so E[W] = dof * scale. Requires dof >= dim.
SpdMatrix sample_wishart(RngStream& rng, int dof, const SpdMatrix& scale);

// Inverse-Wishart draw parameterized so that V^{-1} ~ Wishart(dof, scale^{-1})
// and hence E[V^{-1}] = dof * scale^{-1}. Requires dof >= dim.
SpdMatrix sample_inverse_wishart(RngStream& rng, int dof,
                                 const SpdMatrix& scale);

// Zero-mean multivariate normal draw given a lower Cholesky factor of the
// covariance: returns chol_lower * g with g standard normal.
Vector sample_mvn(RngStream& rng, const Matrix& chol_lower);

}  // namespace rankcop
