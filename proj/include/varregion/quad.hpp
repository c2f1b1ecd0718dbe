#pragma once

// Numerical integration along straight segments in the disk and Taylor
// coefficient extraction by trapezoid sums on circles. Everything in the
// library that is approximate goes through here.

#include <cstddef>
#include <functional>
#include <vector>

#include "varregion/core.hpp"

namespace varregion {

struct QuadConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 1 << 14;
    /// Gauss-Legendre nodes per panel.
    int panel_order = 16;

    /// Throws ParameterError unless tolerances are positive and panel_order >= 2.
    void validate() const;
};

struct QuadResult {
    Complex value;
    double error = 0.0;
    int panels = 0;
};

using ComplexFn = std::function<Complex(Complex)>;
using UnitIntervalFn = std::function<Complex(double)>;

/// Global adaptive Gauss-Legendre integration of fn over [0, 1]. Each panel is
/// compared against its two half-panels; the half-panel sum is kept and the
/// difference is the error estimate. The panel with the largest estimate is
/// bisected until the total estimate is below max(abs_tol, rel_tol |result|).
/// Throws QuadratureError carrying the best estimate if max_subdivisions is hit.
QuadResult integrate_unit_interval(const UnitIntervalFn& fn, const QuadConfig& cfg);

/// Contour integral of fn along the straight segment from -> to.
QuadResult integrate_path(const ComplexFn& fn, Complex from, Complex to, const QuadConfig& cfg);

/// Contour integral of fn along the straight segment 0 -> endpoint.
Complex integrate_segment(const ComplexFn& fn, Complex endpoint, const QuadConfig& cfg);

/// W(z0) = log f'(z0) + alpha f(z0) for the member generated by param,
/// as the integral of w_prime along [0, z0].
Complex w_value(const RegionParams& params, const SchwarzParam& param, const QuadConfig& cfg);

/// Same, returning the quadrature error estimate as well.
QuadResult w_value_detailed(const RegionParams& params, const SchwarzParam& param,
                            const QuadConfig& cfg);

/// Taylor coefficients c_0..c_{count-1} of fn at 0 from `samples` equispaced
/// values on |z| = radius. samples == 0 picks max(4 count, 128). Accuracy
/// degrades as radius -> 1 (aliasing) and as radius -> 0 (radius^-n growth of
/// rounding errors).
std::vector<Complex> cauchy_coeffs(const ComplexFn& fn, double radius, std::size_t count,
                                   std::size_t samples = 0);

/// Gauss-Legendre nodes on [-1, 1] and weights, ascending.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

}  // namespace varregion
