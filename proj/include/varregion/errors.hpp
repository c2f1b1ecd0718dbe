#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace varregion {

/// Invalid problem parameters (|z0| >= 1, |lambda| > 1, |alpha| > 2, bad literals).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A map was evaluated outside the set where it is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Adaptive quadrature gave up before reaching the requested tolerance.
/// Carries the best estimate so callers can decide whether it is usable.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double estimate_re, double estimate_im,
                    double error_bound, std::optional<double> theta = std::nullopt)
        : std::runtime_error(what),
          estimate_re_(estimate_re),
          estimate_im_(estimate_im),
          error_bound_(error_bound),
          theta_(theta) {}

    double estimate_re() const noexcept { return estimate_re_; }
    double estimate_im() const noexcept { return estimate_im_; }
    double error_bound() const noexcept { return error_bound_; }
    std::optional<double> theta() const noexcept { return theta_; }

    QuadratureError with_theta(double theta) const {
        return QuadratureError(std::string(what()) + " (theta=" + std::to_string(theta) + ")",
                               estimate_re_, estimate_im_, error_bound_, theta);
    }

private:
    double estimate_re_;
    double estimate_im_;
    double error_bound_;
    std::optional<double> theta_;
};

/// Polygon construction failed: degenerate region or a convexity violation.
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument-principle count could not be decided on the chosen circle.
class InconclusiveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace varregion
