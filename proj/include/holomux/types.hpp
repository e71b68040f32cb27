#pragma once

#include <array>
#include <complex>
#include <stdexcept>

namespace holomux {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using CMat3 = std::array<std::array<std::complex<double>, 3>, 3>;

/// Ordered eigenvalues gamma1 >= gamma2 >= gamma3 of a scaled Gram matrix,
/// units m^-2.
struct EigenTriple {
    double gamma1;
    double gamma2;
    double gamma3;
};

/// Transmit/receive polarization counts. The receiver always uses 3
/// orthogonal dipoles; t_pol=2 selects the x and y dipole columns.
struct PolarizationConfig {
    int t_pol = 3;
    int r_pol = 3;

    explicit PolarizationConfig(int t = 3) : t_pol(t) {
        if (t_pol != 2 && t_pol != 3)
            throw std::domain_error("PolarizationConfig: t_pol must be 2 or 3");
    }
};

enum class LogBase { bits, nats };

}  // namespace holomux
