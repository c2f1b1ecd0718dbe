#pragma once

// Domain types for the region of variability of log f'(z0) + alpha f(z0)
// over exponentially convex functions with f''(0) = 2 lambda - alpha, and the
// Schwarz-class parametrization that generates every class member.
//
// A member f is represented through omega(z) = z * delta(g(z), lambda) where g
// is a self-map of the disk with g(0) = 0. Everything else (P, W', W, f) is
// derived from omega.

#include <complex>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace varregion {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// |lambda| is treated as 1 when 1 - |lambda| < kUnitLambdaTol.
inline constexpr double kUnitLambdaTol = 1e-12;
/// z0 is treated as 0 when |z0| < kZeroPointTol.
inline constexpr double kZeroPointTol = 1e-14;
/// Minimum modulus of 1 + conj(lambda) z before delta reports a domain error.
inline constexpr double kDeltaDenominatorTol = 1e-14;
inline constexpr std::size_t kDefaultMaxBlaschkeDegree = 4;

bool is_finite(Complex z) noexcept;

/// True when lambda lies on the unit circle within kUnitLambdaTol.
bool is_unit_lambda(Complex lambda) noexcept;

/// The problem instance (z0, lambda, alpha). Construction validates
/// |z0| < 1, |lambda| <= 1, 0 < |alpha| <= 2 and throws ParameterError otherwise.
/// Values slightly outside the closed disks by less than 1e-12 are accepted
/// so that points generated as r*e^{i phi} with r = 1 survive rounding.
class RegionParams {
public:
    RegionParams(Complex z0, Complex lambda, Complex alpha = Complex(1.0, 0.0));

    Complex z0() const noexcept { return z0_; }
    Complex lambda() const noexcept { return lambda_; }
    Complex alpha() const noexcept { return alpha_; }

    /// The region collapses to the single point -2 log(1 - lambda z0).
    bool degenerate() const noexcept;

private:
    Complex z0_;
    Complex lambda_;
    Complex alpha_;
};

/// g(z) = a z with |a| <= 1. |a| = 1 gives the boundary-tracing members.
struct ExtremalSchwarz {
    Complex a;
};

/// g(z) = scale e^{i rotation} z^m prod_k (z - b_k) / (1 - conj(b_k) z).
struct BlaschkeSchwarz {
    double scale = 1.0;
    double rotation = 0.0;
    std::vector<Complex> zeros;
    int vanishing_order = 1;
};

/// A member of the Schwarz class with g(0) = 0; see the file comment.
class SchwarzParam {
public:
    static SchwarzParam extremal(Complex a);
    static SchwarzParam blaschke(double scale, double rotation, std::vector<Complex> zeros,
                                 int vanishing_order = 1,
                                 std::size_t max_degree = kDefaultMaxBlaschkeDegree);

    bool is_extremal() const noexcept { return std::holds_alternative<ExtremalSchwarz>(spec_); }
    const ExtremalSchwarz* as_extremal() const noexcept { return std::get_if<ExtremalSchwarz>(&spec_); }
    const BlaschkeSchwarz* as_blaschke() const noexcept { return std::get_if<BlaschkeSchwarz>(&spec_); }

    /// g(z).
    Complex g(Complex z) const;

    /// Short human-readable form, free of commas so it can sit in a CSV cell.
    std::string describe() const;

    friend bool operator==(const SchwarzParam& lhs, const SchwarzParam& rhs);

private:
    using Spec = std::variant<ExtremalSchwarz, BlaschkeSchwarz>;
    explicit SchwarzParam(Spec spec) : spec_(std::move(spec)) {}
    Spec spec_;
};

bool operator==(const ExtremalSchwarz& lhs, const ExtremalSchwarz& rhs);
bool operator==(const BlaschkeSchwarz& lhs, const BlaschkeSchwarz& rhs);

/// Disk automorphism (z + lambda) / (1 + conj(lambda) z). Throws DomainError
/// when the denominator is below kDeltaDenominatorTol.
Complex delta(Complex z, Complex lambda);

/// omega(z) = z delta(g(z), lambda).
Complex omega(Complex z, Complex lambda, const SchwarzParam& param);

/// P(z) = (1 + omega) / (1 - omega) = 1 + z f''/f' + alpha z f'.
Complex p_value(Complex z, Complex lambda, const SchwarzParam& param);

/// W'(z) = d/dz [log f'(z) + alpha f(z)] = 2 delta(g(z), lambda) / (1 - z delta(g(z), lambda)).
/// Independent of alpha.
Complex w_prime(Complex z, Complex lambda, const SchwarzParam& param);

}  // namespace varregion
