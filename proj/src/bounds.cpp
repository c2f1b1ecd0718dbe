#include "varregion/bounds.hpp"

#include <cmath>

namespace varregion {

namespace {

// (1-|z|^2)(1+|z|^2-2 Re(lambda z)); positive for |z| < 1, |lambda| <= 1.
double envelope_denominator(Complex z, Complex lambda) {
    const double z2 = std::norm(z);
    return (1.0 - z2) * (1.0 + z2 - 2.0 * (lambda * z).real());
}

}  // namespace

Complex c_center(Complex z, Complex lambda) {
    const double z2 = std::norm(z);
    const double l2 = std::norm(lambda);
    return 2.0 * (lambda * (1.0 - z2) + std::conj(z) * (z2 - l2)) / envelope_denominator(z, lambda);
}

double r_radius(Complex z, Complex lambda) {
    return 2.0 * (1.0 - std::norm(lambda)) * std::abs(z) / envelope_denominator(z, lambda);
}

Complex p_disk_center(Complex z, Complex lambda) {
    const Complex zb = std::conj(z);
    const Complex num = (1.0 + lambda * z) * (1.0 - std::conj(lambda) * zb) +
                        std::norm(z) * (zb - lambda) * (std::conj(lambda) + z);
    return num / envelope_denominator(z, lambda);
}

double p_disk_radius(Complex z, Complex lambda) {
    return 2.0 * (1.0 - std::norm(lambda)) * std::norm(z) / envelope_denominator(z, lambda);
}

double envelope_check(const SchwarzParam& param, Complex lambda, Complex z) {
    return r_radius(z, lambda) - std::abs(w_prime(z, lambda, param) - c_center(z, lambda));
}

DiskBound disk_bound(const RegionParams& params, const QuadConfig& cfg) {
    const Complex z0 = params.z0();
    const Complex lambda = params.lambda();
    DiskBound bound;
    if (std::abs(z0) == 0.0) {
        return bound;
    }
    bound.center = integrate_unit_interval([&](double t) { return c_center(t * z0, lambda) * z0; }, cfg).value;
    bound.radius = integrate_unit_interval(
                       [&](double t) { return Complex(r_radius(t * z0, lambda) * std::abs(z0), 0.0); }, cfg)
                       .value.real();
    return bound;
}

}  // namespace varregion
