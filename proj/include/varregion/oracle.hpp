#pragma once

// Samplers and verifiers for the function class: membership, Taylor
// coefficient identities at the origin, reconstruction of f from W, the zero
// count of the auxiliary function G and the identity for h.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "varregion/core.hpp"
#include "varregion/quad.hpp"

namespace varregion {

/// Deterministic pseudo-random member. Half the draws are extremal (a quarter of
/// those on |a| = 1, the rest uniform in the disk); the others are Blaschke
/// products with vanishing order 1, scale in [0, 1] (1 with probability 1/4)
/// and up to max_degree zeros of modulus <= 0.9.
SchwarzParam sample_param(std::uint64_t seed, std::size_t max_degree = kDefaultMaxBlaschkeDegree);

/// Re P > 0 on a polar grid of grid_size radii (up to 0.999) by grid_size angles.
bool verify_membership(const SchwarzParam& param, Complex lambda, int grid_size);

struct CoeffReport {
    Complex f2;      // f''(0)
    Complex f3;      // f'''(0)
    Complex omega1;  // omega'(0)
    Complex omega2;  // omega''(0)
    Complex p1;      // P'(0)
    Complex p2;      // P''(0)
    std::map<std::string, double> residuals;

    double max_residual() const;
};

/// Estimates the derivatives at 0 by circle quadrature (radius 0.5) of W',
/// omega and P, then evaluates the residual of each identity linking them:
///   p1_eq_2omega1            P'(0) = 2 omega'(0)
///   p1_eq_f2_plus_alpha      P'(0) = f''(0) + alpha
///   p2_eq_2omega2_plus_p1_sq P''(0) = 2 omega''(0) + P'(0)^2
///   omega2_from_f3           omega''(0) = f'''(0) - 6 lambda (lambda - alpha) - 2 alpha^2
///   f2_normalization         f''(0) = 2 lambda - alpha
///   g1_from_omega2           g'(0) = omega''(0) / (2 (1 - |lambda|^2))   (|lambda| < 1 only)
///   g1_modulus_excess        max(0, |g'(0)| - 1)                          (|lambda| < 1 only)
///   f3_extremal_closed_form  f'''(0) = 2[(1-|lambda|^2) a + 3 lambda (lambda - alpha) + alpha^2]
///                            (extremal members only)
/// Throws QuadratureError if doubling the number of circle samples moves any
/// coefficient by more than 1e-10.
CoeffReport coefficient_report(const SchwarzParam& param, const RegionParams& params,
                               const QuadConfig& cfg = {});

/// f(z) from e^{alpha f} = 1 + alpha int_0^z e^{W}, with the logarithm continued
/// along the radial path from f(0) = 0. Throws DomainError if 1 + alpha G comes
/// within 1e-12 of zero on the path.
Complex reconstruct_f(Complex z, const SchwarzParam& param, const RegionParams& params,
                      const QuadConfig& cfg = {});

/// |log f'(z0) + alpha f(z0) - W(z0)| for the reconstructed f, with f'(z0)
/// from a Cauchy sum on a small circle around z0 and log f' taken on the
/// branch nearest W - alpha f.
double reconstruction_residual(const SchwarzParam& param, const RegionParams& params,
                               const QuadConfig& cfg = {});

/// G(z) = int_0^z e^{i theta} s / (1 + (conj(lambda) e^{i theta} - lambda) s - e^{i theta} s^2)^2 ds.
Complex lemma_g(Complex z, double theta, Complex lambda, const QuadConfig& cfg = {});

/// Winding number of G around 0 on |z| = radius, i.e. the number of zeros of G
/// inside the circle. Throws InconclusiveError when |G| < 1e-12 on the circle
/// or the argument cannot be tracked.
int lemma_g_zero_count(double theta, Complex lambda, double radius, const QuadConfig& cfg = {},
                       std::size_t circle_points = 256);

/// h(z) = 2 int_0^z s / (1 - lambda s)^2 ds = z^2 + ...
Complex h_value(Complex z, Complex lambda);

/// |1 + z h''(z)/h'(z) - 2/(1 - lambda z)| from the closed forms of h' and h''.
double h_identity_check(Complex z, Complex lambda);

}  // namespace varregion
