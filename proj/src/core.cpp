#include "varregion/core.hpp"

#include <cmath>
#include <sstream>

#include "varregion/errors.hpp"

namespace varregion {

namespace {

constexpr double kDiskSlack = 1e-12;

std::string format_complex(Complex z) {
    std::ostringstream out;
    out.precision(17);
    out << z.real() << (std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << "i";
    return out.str();
}

}  // namespace

bool is_finite(Complex z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

bool is_unit_lambda(Complex lambda) noexcept {
    return 1.0 - std::abs(lambda) < kUnitLambdaTol;
}

RegionParams::RegionParams(Complex z0, Complex lambda, Complex alpha)
    : z0_(z0), lambda_(lambda), alpha_(alpha) {
    if (!is_finite(z0) || !is_finite(lambda) || !is_finite(alpha)) {
        throw ParameterError("parameters must be finite");
    }
    if (!(std::abs(z0) < 1.0)) {
        throw ParameterError("z0 must lie in the open unit disk, got |z0| = " +
                             std::to_string(std::abs(z0)));
    }
    if (std::abs(lambda) > 1.0 + kDiskSlack) {
        throw ParameterError("lambda must lie in the closed unit disk, got |lambda| = " +
                             std::to_string(std::abs(lambda)));
    }
    if (alpha == Complex(0.0, 0.0)) {
        throw ParameterError("alpha must be nonzero");
    }
    if (std::abs(alpha) > 2.0 + kDiskSlack) {
        throw ParameterError("|alpha| = " + std::to_string(std::abs(alpha)) +
                             " exceeds 2: the class E(alpha) is empty (E(alpha)=∅ if |alpha|>2)");
    }
}

bool RegionParams::degenerate() const noexcept {
    return std::abs(z0_) < kZeroPointTol || is_unit_lambda(lambda_);
}

SchwarzParam SchwarzParam::extremal(Complex a) {
    if (!is_finite(a) || std::abs(a) > 1.0 + kDiskSlack) {
        throw ParameterError("extremal rotation must satisfy |a| <= 1");
    }
    return SchwarzParam(ExtremalSchwarz{a});
}

SchwarzParam SchwarzParam::blaschke(double scale, double rotation, std::vector<Complex> zeros,
                                    int vanishing_order, std::size_t max_degree) {
    if (!std::isfinite(scale) || scale < 0.0 || scale > 1.0) {
        throw ParameterError("Blaschke scale must lie in [0, 1]");
    }
    if (!std::isfinite(rotation) || rotation <= -kPi || rotation > kPi) {
        throw ParameterError("Blaschke rotation must lie in (-pi, pi]");
    }
    if (vanishing_order < 1) {
        throw ParameterError("vanishing order at 0 must be >= 1 so that g(0) = 0");
    }
    if (zeros.size() > max_degree) {
        throw ParameterError("Blaschke degree " + std::to_string(zeros.size()) +
                             " exceeds the cap " + std::to_string(max_degree));
    }
    for (const Complex& b : zeros) {
        if (!is_finite(b) || !(std::abs(b) < 1.0)) {
            throw ParameterError("Blaschke zeros must lie in the open unit disk");
        }
    }
    return SchwarzParam(BlaschkeSchwarz{scale, rotation, std::move(zeros), vanishing_order});
}

Complex SchwarzParam::g(Complex z) const {
    if (const auto* ext = as_extremal()) {
        return ext->a * z;
    }
    const auto& bl = std::get<BlaschkeSchwarz>(spec_);
    Complex value = bl.scale * std::polar(1.0, bl.rotation);
    for (int k = 0; k < bl.vanishing_order; ++k) {
        value *= z;
    }
    for (const Complex& b : bl.zeros) {
        value *= (z - b) / (1.0 - std::conj(b) * z);
    }
    return value;
}

std::string SchwarzParam::describe() const {
    if (const auto* ext = as_extremal()) {
        return "extremal a=" + format_complex(ext->a);
    }
    const auto& bl = std::get<BlaschkeSchwarz>(spec_);
    std::ostringstream out;
    out.precision(17);
    out << "blaschke rho=" << bl.scale << " phi=" << bl.rotation << " m=" << bl.vanishing_order
        << " zeros=[";
    for (std::size_t k = 0; k < bl.zeros.size(); ++k) {
        out << (k ? ";" : "") << format_complex(bl.zeros[k]);
    }
    out << "]";
    return out.str();
}

bool operator==(const ExtremalSchwarz& lhs, const ExtremalSchwarz& rhs) { return lhs.a == rhs.a; }

bool operator==(const BlaschkeSchwarz& lhs, const BlaschkeSchwarz& rhs) {
    return lhs.scale == rhs.scale && lhs.rotation == rhs.rotation && lhs.zeros == rhs.zeros &&
           lhs.vanishing_order == rhs.vanishing_order;
}

bool operator==(const SchwarzParam& lhs, const SchwarzParam& rhs) { return lhs.spec_ == rhs.spec_; }

Complex delta(Complex z, Complex lambda) {
    const Complex denom = 1.0 + std::conj(lambda) * z;
    if (std::abs(denom) < kDeltaDenominatorTol) {
        throw DomainError("delta: 1 + conj(lambda) z vanishes");
    }
    return (z + lambda) / denom;
}

Complex omega(Complex z, Complex lambda, const SchwarzParam& param) {
    return z * delta(param.g(z), lambda);
}

Complex p_value(Complex z, Complex lambda, const SchwarzParam& param) {
    const Complex w = omega(z, lambda, param);
    return (1.0 + w) / (1.0 - w);
}

Complex w_prime(Complex z, Complex lambda, const SchwarzParam& param) {
    const Complex d = delta(param.g(z), lambda);
    return 2.0 * d / (1.0 - z * d);
}

}  // namespace varregion
