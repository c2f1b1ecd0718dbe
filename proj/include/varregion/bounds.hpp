#pragma once

#include <string>

#include "varregion/core.hpp"
#include "varregion/quad.hpp"

namespace varregion {

/// Center of the disk that contains W'(z) = f''/f' + alpha f' for every member:
///   2 [lambda (1-|z|^2) + conj(z) (|z|^2 - |lambda|^2)] / [(1-|z|^2)(1+|z|^2-2 Re(lambda z))]
Complex c_center(Complex z, Complex lambda);

/// Radius of that disk: 2 (1-|lambda|^2) |z| / [(1-|z|^2)(1+|z|^2-2 Re(lambda z))].
/// Zero iff |lambda| = 1 or z = 0.
double r_radius(Complex z, Complex lambda);

/// The same inequality written for P(z) = 1 + z W'(z); kept as a separate
/// transcription so the two forms can check each other.
Complex p_disk_center(Complex z, Complex lambda);
double p_disk_radius(Complex z, Complex lambda);

/// r(z, lambda) - |W'(z) - c(z, lambda)|. Nonnegative for every member, zero
/// for the extremal members with |a| = 1.
double envelope_check(const SchwarzParam& param, Complex lambda, Complex z);

struct DiskBound {
    Complex center;
    double radius = 0.0;
    std::string path = "segment 0 -> z0";
};

/// Integrates c and r along gamma(t) = t z0: C = int_0^1 c(t z0) z0 dt,
/// R = int_0^1 r(t z0) |z0| dt. The region lies in |w - C| <= R.
DiskBound disk_bound(const RegionParams& params, const QuadConfig& cfg = {});

}  // namespace varregion
