#pragma once

#include <complex>

namespace mplkz {

/// Complex Γ by the Lanczos approximation (g = 607/128, 15 terms) with the
/// reflection formula for Re z < 1/2. Relative error around 1e-15 away from
/// the poles. Throws std::domain_error at z = 0, -1, -2, ...
std::complex<double> gamma(std::complex<double> z);

/// True when z is within `eps` of a nonpositive integer.
bool near_gamma_pole(std::complex<double> z, double eps = 1e-12);

}  // namespace mplkz
