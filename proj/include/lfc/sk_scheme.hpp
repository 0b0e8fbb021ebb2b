#ifndef LFC_SK_SCHEME_HPP
#define LFC_SK_SCHEME_HPP

#include "lfc/core_model.hpp"

namespace lfc {

/// Schalkwijk-Kailath baseline in the (F, q, g) framework.
///
/// With alpha^2 = 1 + rho and r = sqrt(rho):
///   g = e1,
///   f_{i,1} = -r / alpha^{i-2}          for i >= 2,
///   f_{i,j} = -r^2 / alpha^{i-j}        for i > j >= 2,
///   q = [1, r/alpha^2, r/alpha^3, ..., r/alpha^N],
///   gamma = (N-1)/N, E[theta^2] = rho.
///
/// q is not a unit vector but |q^T g| = 1; the scheme is flagged
/// sk_baseline.  At sigma2 = 0 its received SNR is rho (1+rho)^{N-1}.
/// Feedback noise is accounted for only at evaluation time, by plugging
/// (F, q, g) into the general SNR expression.
LinearScheme build_sk_scheme(const ChannelParams& params);

}  // namespace lfc

#endif
