#include "varregion/quad.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "varregion/errors.hpp"

namespace varregion {

namespace {

GaussRule compute_gauss_legendre(int order) {
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-16) {
                break;
            }
        }
        // Recompute the derivative at the converged node for the weight.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= order; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = order * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1) {
        rule.nodes[order / 2] = 0.0;
    }
    return rule;
}

Complex apply_rule(const GaussRule& rule, const UnitIntervalFn& fn, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    Complex sum(0.0, 0.0);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        sum += rule.weights[k] * fn(mid + half * rule.nodes[k]);
    }
    return half * sum;
}

struct Panel {
    double a;
    double b;
    Complex left;
    Complex right;
    double error;
};

Panel make_panel(const GaussRule& rule, const UnitIntervalFn& fn, double a, double b, Complex whole) {
    const double mid = 0.5 * (a + b);
    Panel p{a, b, apply_rule(rule, fn, a, mid), apply_rule(rule, fn, mid, b), 0.0};
    p.error = std::abs(whole - (p.left + p.right));
    return p;
}

}  // namespace

void QuadConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw ParameterError("quadrature tolerances must be positive");
    }
    if (panel_order < 2) {
        throw ParameterError("panel_order must be >= 2");
    }
    if (max_subdivisions < 1) {
        throw ParameterError("max_subdivisions must be >= 1");
    }
}

const GaussRule& gauss_legendre(int order) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[order];
    if (!slot) {
        slot = std::make_unique<GaussRule>(compute_gauss_legendre(order));
    }
    return *slot;
}

QuadResult integrate_unit_interval(const UnitIntervalFn& fn, const QuadConfig& cfg) {
    cfg.validate();
    const GaussRule& rule = gauss_legendre(cfg.panel_order);

    std::vector<Panel> panels;
    panels.push_back(make_panel(rule, fn, 0.0, 1.0, apply_rule(rule, fn, 0.0, 1.0)));

    for (;;) {
        Complex total(0.0, 0.0);
        double total_error = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total += panels[i].left + panels[i].right;
            total_error += panels[i].error;
            if (panels[i].error > panels[worst].error) {
                worst = i;
            }
        }
        if (!is_finite(total)) {
            throw QuadratureError("quadrature produced a non-finite value", total.real(),
                                  total.imag(), total_error);
        }
        if (total_error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
            return {total, total_error, static_cast<int>(panels.size())};
        }
        if (static_cast<int>(panels.size()) >= cfg.max_subdivisions) {
            throw QuadratureError("quadrature did not converge within " +
                                      std::to_string(cfg.max_subdivisions) + " panels",
                                  total.real(), total.imag(), total_error);
        }
        const Panel parent = panels[worst];
        const double mid = 0.5 * (parent.a + parent.b);
        panels[worst] = make_panel(rule, fn, parent.a, mid, parent.left);
        panels.insert(panels.begin() + static_cast<std::ptrdiff_t>(worst) + 1,
                      make_panel(rule, fn, mid, parent.b, parent.right));
    }
}

QuadResult integrate_path(const ComplexFn& fn, Complex from, Complex to, const QuadConfig& cfg) {
    const Complex span = to - from;
    if (span == Complex(0.0, 0.0)) {
        cfg.validate();
        return {Complex(0.0, 0.0), 0.0, 0};
    }
    QuadResult r = integrate_unit_interval([&](double t) { return fn(from + t * span); }, cfg);
    r.value *= span;
    r.error *= std::abs(span);
    return r;
}

Complex integrate_segment(const ComplexFn& fn, Complex endpoint, const QuadConfig& cfg) {
    return integrate_path(fn, Complex(0.0, 0.0), endpoint, cfg).value;
}

QuadResult w_value_detailed(const RegionParams& params, const SchwarzParam& param,
                            const QuadConfig& cfg) {
    const Complex lambda = params.lambda();
    return integrate_path([&](Complex z) { return w_prime(z, lambda, param); }, Complex(0.0, 0.0),
                          params.z0(), cfg);
}

Complex w_value(const RegionParams& params, const SchwarzParam& param, const QuadConfig& cfg) {
    return w_value_detailed(params, param, cfg).value;
}

std::vector<Complex> cauchy_coeffs(const ComplexFn& fn, double radius, std::size_t count,
                                   std::size_t samples) {
    if (!(radius > 0.0) || !(radius < 1.0)) {
        throw ParameterError("cauchy_coeffs: radius must lie in (0, 1)");
    }
    if (count < 1) {
        throw ParameterError("cauchy_coeffs: count must be >= 1");
    }
    const std::size_t m = samples == 0 ? std::max<std::size_t>(4 * count, 128) : samples;
    if (m < 4 * count) {
        throw ParameterError("cauchy_coeffs: need at least 4 samples per coefficient");
    }
    std::vector<Complex> values(m);
    for (std::size_t j = 0; j < m; ++j) {
        values[j] = fn(std::polar(radius, 2.0 * kPi * static_cast<double>(j) / static_cast<double>(m)));
    }
    std::vector<Complex> coeffs(count);
    double scale = 1.0;
    for (std::size_t n = 0; n < count; ++n) {
        Complex sum(0.0, 0.0);
        for (std::size_t j = 0; j < m; ++j) {
            // Reduce j*n mod m before forming the angle to keep it in [0, 2 pi).
            const std::size_t k = (j * n) % m;
            sum += values[j] * std::polar(1.0, -2.0 * kPi * static_cast<double>(k) / static_cast<double>(m));
        }
        coeffs[n] = sum / (static_cast<double>(m) * scale);
        scale *= radius;
    }
    return coeffs;
}

}  // namespace varregion
