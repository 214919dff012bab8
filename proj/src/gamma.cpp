#include "mplkz/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mplkz {

namespace {

constexpr double kG = 607.0 / 128.0;
constexpr std::array<double, 15> kCoeff = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5,
};

std::complex<double> gamma_right(std::complex<double> z) {
    // Γ(z) = Γ(w + 1) with w = z - 1.
    const std::complex<double> w = z - 1.0;
    std::complex<double> sum = kCoeff[0];
    for (std::size_t k = 1; k < kCoeff.size(); ++k) sum += kCoeff[k] / (w + static_cast<double>(k));
    const std::complex<double> t = w + kG + 0.5;
    const std::complex<double> log_g =
        0.5 * std::log(2.0 * std::numbers::pi) + (w + 0.5) * std::log(t) - t + std::log(sum);
    return std::exp(log_g);
}

}  // namespace

bool near_gamma_pole(std::complex<double> z, double eps) {
    if (z.real() > 0.5) return false;
    const double n = std::round(z.real());
    return std::abs(z - n) < eps;
}

std::complex<double> gamma(std::complex<double> z) {
    if (near_gamma_pole(z, 0.0) || (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real()))) {
        throw std::domain_error("gamma: pole at nonpositive integer");
    }
    if (z.real() < 0.5) {
        const double pi = std::numbers::pi;
        return pi / (std::sin(pi * z) * gamma_right(1.0 - z));
    }
    return gamma_right(z);
}

}  // namespace mplkz
