#include "varregion/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "varregion/errors.hpp"
#include "varregion/parallel.hpp"

namespace varregion {

namespace {

// 53-bit uniform in [0, 1) from the standard-specified mt19937_64 stream, so
// samples agree across standard libraries.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Angle in (-pi, pi].
double uniform_angle(std::mt19937_64& rng) {
    return kPi * (1.0 - 2.0 * uniform01(rng));
}

constexpr double kCoeffRadius = 0.5;
constexpr double kCoeffStabilityTol = 1e-10;
constexpr std::size_t kRadialSteps = 32;

std::vector<Complex> stable_coeffs(const ComplexFn& fn, std::size_t count) {
    const auto coarse = cauchy_coeffs(fn, kCoeffRadius, count, 128);
    const auto fine = cauchy_coeffs(fn, kCoeffRadius, count, 256);
    for (std::size_t n = 0; n < count; ++n) {
        const double diff = std::abs(coarse[n] - fine[n]);
        if (diff > kCoeffStabilityTol * (1.0 + std::abs(fine[n]))) {
            throw QuadratureError("circle quadrature for Taylor coefficients did not settle",
                                  fine[n].real(), fine[n].imag(), diff);
        }
    }
    return fine;
}

}  // namespace

SchwarzParam sample_param(std::uint64_t seed, std::size_t max_degree) {
    std::mt19937_64 rng(seed);
    if (uniform01(rng) < 0.5) {
        const double modulus = uniform01(rng) < 0.25 ? 1.0 : std::sqrt(uniform01(rng));
        return SchwarzParam::extremal(std::polar(modulus, uniform_angle(rng)));
    }
    const double scale = uniform01(rng) < 0.25 ? 1.0 : uniform01(rng);
    const double rotation = uniform_angle(rng);
    const auto degree = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(max_degree + 1));
    std::vector<Complex> zeros;
    for (std::size_t k = 0; k < std::min(degree, max_degree); ++k) {
        const double modulus = 0.9 * std::sqrt(uniform01(rng));
        zeros.push_back(std::polar(modulus, uniform_angle(rng)));
    }
    return SchwarzParam::blaschke(scale, rotation, std::move(zeros), 1, max_degree);
}

bool verify_membership(const SchwarzParam& param, Complex lambda, int grid_size) {
    if (grid_size < 1) {
        throw ParameterError("verify_membership: grid_size must be >= 1");
    }
    for (int i = 0; i < grid_size; ++i) {
        const double radius = 0.999 * (i + 1) / grid_size;
        for (int j = 0; j < grid_size; ++j) {
            const Complex z = std::polar(radius, 2.0 * kPi * j / grid_size);
            if (!(p_value(z, lambda, param).real() > 0.0)) {
                return false;
            }
        }
    }
    return true;
}

double CoeffReport::max_residual() const {
    double worst = 0.0;
    for (const auto& [name, value] : residuals) {
        worst = std::max(worst, value);
    }
    return worst;
}

CoeffReport coefficient_report(const SchwarzParam& param, const RegionParams& params,
                               const QuadConfig& cfg) {
    cfg.validate();
    const Complex lambda = params.lambda();
    const Complex alpha = params.alpha();

    const auto w = stable_coeffs([&](Complex z) { return w_prime(z, lambda, param); }, 2);
    const auto om = stable_coeffs([&](Complex z) { return omega(z, lambda, param); }, 3);
    const auto p = stable_coeffs([&](Complex z) { return p_value(z, lambda, param); }, 3);

    CoeffReport report;
    // W' = f''/f' + alpha f', so W'(0) = f''(0) + alpha and
    // W''(0) = f'''(0) - f''(0)^2 + alpha f''(0).
    report.f2 = w[0] - alpha;
    report.f3 = w[1] + report.f2 * (report.f2 - alpha);
    report.omega1 = om[1];
    report.omega2 = 2.0 * om[2];
    report.p1 = p[1];
    report.p2 = 2.0 * p[2];

    auto& r = report.residuals;
    r["p1_eq_2omega1"] = std::abs(report.p1 - 2.0 * report.omega1);
    r["p1_eq_f2_plus_alpha"] = std::abs(report.p1 - (report.f2 + alpha));
    r["p2_eq_2omega2_plus_p1_sq"] = std::abs(2.0 * report.omega2 + report.p1 * report.p1 - report.p2);
    r["omega2_from_f3"] = std::abs(report.omega2 -
                                   (report.f3 - 6.0 * lambda * (lambda - alpha) - 2.0 * alpha * alpha));
    r["f2_normalization"] = std::abs(report.f2 - (2.0 * lambda - alpha));
    if (!is_unit_lambda(lambda)) {
        const auto g = stable_coeffs([&](Complex z) { return param.g(z); }, 2);
        r["g1_from_omega2"] = std::abs(g[1] - report.omega2 / (2.0 * (1.0 - std::norm(lambda))));
        r["g1_modulus_excess"] = std::max(0.0, std::abs(g[1]) - 1.0);
    }
    if (const auto* ext = param.as_extremal()) {
        const Complex expected =
            2.0 * ((1.0 - std::norm(lambda)) * ext->a + 3.0 * lambda * (lambda - alpha) + alpha * alpha);
        r["f3_extremal_closed_form"] = std::abs(report.f3 - expected);
    }
    return report;
}

Complex reconstruct_f(Complex z, const SchwarzParam& param, const RegionParams& params,
                      const QuadConfig& cfg) {
    cfg.validate();
    if (!(std::abs(z) < 1.0)) {
        throw ParameterError("reconstruct_f: z must lie in the open unit disk");
    }
    if (z == Complex(0.0, 0.0)) {
        return Complex(0.0, 0.0);
    }
    const Complex lambda = params.lambda();
    const Complex alpha = params.alpha();
    const ComplexFn wp = [&](Complex s) { return w_prime(s, lambda, param); };

    // Walk t = 0 -> 1 along s = t z carrying W(t z), G(t z) = int e^W and the
    // continued logarithm of 1 + alpha G.
    Complex w_acc(0.0, 0.0);
    Complex g_acc(0.0, 0.0);
    Complex log_acc(0.0, 0.0);
    Complex u_prev(1.0, 0.0);

    // Each step [a, b] is halved until the argument of 1 + alpha G turns by
    // less than pi/4 across it.
    std::vector<std::pair<double, double>> stack;
    for (std::size_t k = kRadialSteps; k-- > 0;) {
        stack.emplace_back(static_cast<double>(k) / kRadialSteps, static_cast<double>(k + 1) / kRadialSteps);
    }
    while (!stack.empty()) {
        const auto [ta, tb] = stack.back();
        stack.pop_back();
        const Complex sa = ta * z;
        const Complex sb = tb * z;
        const Complex w_start = w_acc;
        const Complex dg = integrate_path(
                               [&](Complex s) { return std::exp(w_start + integrate_path(wp, sa, s, cfg).value); },
                               sa, sb, cfg)
                               .value;
        const Complex u = 1.0 + alpha * (g_acc + dg);
        if (std::abs(u) < 1e-12) {
            throw DomainError("reconstruct_f: 1 + alpha G vanishes on the radial path");
        }
        const Complex step = std::log(u / u_prev);
        if (std::abs(step.imag()) > kPi / 4.0 && tb - ta > 1e-6) {
            const double tm = 0.5 * (ta + tb);
            stack.emplace_back(tm, tb);
            stack.emplace_back(ta, tm);
            continue;
        }
        w_acc += integrate_path(wp, sa, sb, cfg).value;
        g_acc += dg;
        log_acc += step;
        u_prev = u;
    }
    return log_acc / alpha;
}

double reconstruction_residual(const SchwarzParam& param, const RegionParams& params,
                               const QuadConfig& cfg) {
    const Complex z0 = params.z0();
    const double radius = 0.01 * (1.0 - std::abs(z0));
    const auto coeffs = cauchy_coeffs([&](Complex s) { return reconstruct_f(z0 + s, param, params, cfg); },
                                      radius, 2, 16);
    const Complex f = coeffs[0];
    const Complex fprime = coeffs[1];
    const Complex w = w_value(params, param, cfg);
    const Complex target = w - params.alpha() * f;
    Complex log_fprime = std::log(fprime);
    log_fprime += Complex(0.0, 2.0 * kPi * std::round((target - log_fprime).imag() / (2.0 * kPi)));
    return std::abs(log_fprime + params.alpha() * f - w);
}

Complex lemma_g(Complex z, double theta, Complex lambda, const QuadConfig& cfg) {
    const Complex rot = std::polar(1.0, theta);
    const Complex linear = std::conj(lambda) * rot - lambda;
    return integrate_path(
               [&](Complex s) {
                   const Complex q = 1.0 + linear * s - rot * s * s;
                   return rot * s / (q * q);
               },
               Complex(0.0, 0.0), z, cfg)
        .value;
}

int lemma_g_zero_count(double theta, Complex lambda, double radius, const QuadConfig& cfg,
                       std::size_t circle_points) {
    if (!(radius > 0.0) || !(radius < 1.0)) {
        throw ParameterError("lemma_g_zero_count: radius must lie in (0, 1)");
    }
    if (!(std::abs(lambda) < 1.0)) {
        throw ParameterError("lemma_g_zero_count: |lambda| must be < 1");
    }
    std::size_t n = std::max<std::size_t>(circle_points, 8);
    for (int attempt = 0; attempt < 6; ++attempt, n *= 2) {
        std::vector<Complex> values(n);
        parallel_for(n, [&](std::size_t j) {
            const Complex z = std::polar(radius, 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n));
            values[j] = lemma_g(z, theta, lambda, cfg);
        });
        for (const Complex& v : values) {
            if (std::abs(v) < 1e-12) {
                throw InconclusiveError("G nearly vanishes on the circle; try a different radius");
            }
        }
        double total = 0.0;
        bool coarse = false;
        for (std::size_t j = 0; j < n; ++j) {
            const double step = std::arg(values[(j + 1) % n] / values[j]);
            if (std::abs(step) > kPi / 2.0) {
                coarse = true;
                break;
            }
            total += step;
        }
        if (coarse) {
            continue;
        }
        const double winding = total / (2.0 * kPi);
        const double rounded = std::round(winding);
        if (std::abs(winding - rounded) > 1e-6) {
            throw InconclusiveError("winding number is not close to an integer");
        }
        return static_cast<int>(rounded);
    }
    throw InconclusiveError("argument of G could not be tracked around the circle");
}

Complex h_value(Complex z, Complex lambda) {
    const Complex lz = lambda * z;
    if (std::abs(lz) < 0.1) {
        // 2 sum_{n>=0} (n+1) lambda^n z^{n+2} / (n+2); the closed form cancels badly here.
        Complex term = z * z;
        Complex sum(0.0, 0.0);
        for (int n = 0; n < 40; ++n) {
            sum += term * (2.0 * (n + 1) / (n + 2));
            term *= lz;
        }
        return sum;
    }
    const Complex u = 1.0 - lz;
    return 2.0 / (lambda * lambda) * (1.0 / u + std::log(u) - 1.0);
}

double h_identity_check(Complex z, Complex lambda) {
    const Complex u = 1.0 - lambda * z;
    const Complex h1 = 2.0 * z / (u * u);
    const Complex h2 = 2.0 * (1.0 + lambda * z) / (u * u * u);
    // z h''/h' has a removable singularity at 0 with limit 1.
    const Complex ratio = z == Complex(0.0, 0.0) ? Complex(1.0, 0.0) : z * h2 / h1;
    return std::abs(1.0 + ratio - 2.0 / u);
}

}  // namespace varregion
