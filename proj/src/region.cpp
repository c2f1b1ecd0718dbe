#include "varregion/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "varregion/errors.hpp"
#include "varregion/parallel.hpp"

namespace varregion {

namespace {

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

double segment_distance(Complex p, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) {
        return std::abs(p - a);
    }
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

double line_distance(Complex p, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len = std::abs(ab);
    if (len == 0.0) {
        return std::abs(p - a);
    }
    return std::abs(cross(ab, p - a)) / len;
}

std::vector<Complex> convex_hull(std::vector<Complex> pts) {
    std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) {
        return pts;
    }
    std::vector<Complex> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Complex& p : pts) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) {
            --k;
        }
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) {
            --k;
        }
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

struct Interval {
    double theta_a;
    Complex w_a;
    double theta_b;
    Complex w_b;
    int depth;
};

}  // namespace

Complex interior_center(const RegionParams& params) {
    return -2.0 * std::log(1.0 - params.lambda() * params.z0());
}

Complex boundary_point(const RegionParams& params, double theta, const QuadConfig& cfg) {
    try {
        return w_value(params, SchwarzParam::extremal(std::polar(1.0, theta)), cfg);
    } catch (const QuadratureError& e) {
        throw e.with_theta(theta);
    }
}

BoundaryCurve boundary_curve(const RegionParams& params, std::size_t n_samples, const QuadConfig& cfg) {
    if (params.degenerate()) {
        return BoundaryCurve{params, {CurveSample{0.0, interior_center(params)}}, true};
    }
    if (n_samples < 3) {
        throw ParameterError("boundary_curve needs at least 3 samples");
    }
    cfg.validate();
    std::vector<CurveSample> samples(n_samples);
    const double n = static_cast<double>(n_samples);
    parallel_for(n_samples, [&](std::size_t k) {
        const double theta = kPi * (2.0 * static_cast<double>(k + 1) / n - 1.0);
        samples[k] = CurveSample{theta, boundary_point(params, theta, cfg)};
    });
    return BoundaryCurve{params, std::move(samples), false};
}

BoundaryCurve refine_boundary(const BoundaryCurve& curve, double rel_tol, const QuadConfig& cfg,
                              int max_depth) {
    if (curve.degenerate || curve.samples.size() < 3) {
        return curve;
    }
    if (!(rel_tol > 0.0)) {
        throw ParameterError("refine_boundary: rel_tol must be positive");
    }
    std::vector<Complex> points;
    points.reserve(curve.samples.size());
    for (const auto& s : curve.samples) {
        points.push_back(s.w);
    }
    const double threshold = rel_tol * point_set_diameter(points);

    std::vector<CurveSample> out = curve.samples;
    std::vector<Interval> pending;
    const std::size_t n = curve.samples.size();
    for (std::size_t i = 0; i < n; ++i) {
        const CurveSample& a = curve.samples[i == 0 ? n - 1 : i - 1];
        const CurveSample& b = curve.samples[i];
        // The interval ending at the first sample wraps through -pi.
        const double theta_a = i == 0 ? a.theta - 2.0 * kPi : a.theta;
        pending.push_back(Interval{theta_a, a.w, b.theta, b.w, 0});
    }

    while (!pending.empty()) {
        std::vector<CurveSample> mids(pending.size());
        parallel_for(pending.size(), [&](std::size_t i) {
            const Interval& iv = pending[i];
            double theta = 0.5 * (iv.theta_a + iv.theta_b);
            if (theta <= -kPi) {
                theta += 2.0 * kPi;
            }
            mids[i] = CurveSample{theta, boundary_point(curve.params, theta, cfg)};
        });
        std::vector<Interval> next;
        for (std::size_t i = 0; i < pending.size(); ++i) {
            const Interval& iv = pending[i];
            const CurveSample& m = mids[i];
            out.push_back(m);
            if (iv.depth + 1 < max_depth && line_distance(m.w, iv.w_a, iv.w_b) > threshold) {
                const double theta_mid = 0.5 * (iv.theta_a + iv.theta_b);
                next.push_back(Interval{iv.theta_a, iv.w_a, theta_mid, m.w, iv.depth + 1});
                next.push_back(Interval{theta_mid, m.w, iv.theta_b, iv.w_b, iv.depth + 1});
            }
        }
        pending = std::move(next);
    }

    std::sort(out.begin(), out.end(),
              [](const CurveSample& a, const CurveSample& b) { return a.theta < b.theta; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const CurveSample& a, const CurveSample& b) { return a.theta == b.theta; }),
              out.end());
    return BoundaryCurve{curve.params, std::move(out), false};
}

double signed_area(const std::vector<Complex>& vertices) {
    double twice = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        twice += cross(vertices[i], vertices[(i + 1) % n]);
    }
    return 0.5 * twice;
}

double point_set_diameter(const std::vector<Complex>& points) {
    const std::vector<Complex> hull = convex_hull(points);
    const std::size_t h = hull.size();
    if (h == 0) {
        return 0.0;
    }
    if (h <= 3) {
        double best = 0.0;
        for (std::size_t i = 0; i < h; ++i) {
            for (std::size_t j = i + 1; j < h; ++j) {
                best = std::max(best, std::abs(hull[i] - hull[j]));
            }
        }
        return best;
    }
    double best = 0.0;
    std::size_t j = 1;
    for (std::size_t i = 0; i < h; ++i) {
        const Complex edge = hull[(i + 1) % h] - hull[i];
        while (cross(edge, hull[(j + 1) % h] - hull[i]) > cross(edge, hull[j] - hull[i])) {
            j = (j + 1) % h;
        }
        best = std::max({best, std::abs(hull[i] - hull[j]), std::abs(hull[(i + 1) % h] - hull[j])});
    }
    return best;
}

RegionPolygon to_polygon(const BoundaryCurve& curve, double convexity_tol) {
    if (curve.degenerate || curve.samples.size() < 3) {
        throw GeometryError("region is a single point; use interior_center for the degenerate case");
    }
    RegionPolygon poly;
    poly.center = interior_center(curve.params);
    for (const auto& s : curve.samples) {
        poly.vertices.push_back(s.w);
        poly.thetas.push_back(s.theta);
    }
    if (signed_area(poly.vertices) < 0.0) {
        std::reverse(poly.vertices.begin(), poly.vertices.end());
        std::reverse(poly.thetas.begin(), poly.thetas.end());
    }
    poly.diameter = point_set_diameter(poly.vertices);

    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    double defect = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex prev = v[(i + n - 1) % n];
        const Complex e1 = v[i] - prev;
        const Complex e2 = v[(i + 1) % n] - v[i];
        const double base = std::abs(e1 + e2);
        const double bulge = base > 0.0 ? cross(e1, e2) / base : 0.0;
        defect = std::min(defect, bulge);
    }
    poly.convexity_defect = defect;
    if (defect < -convexity_tol * poly.diameter) {
        throw GeometryError("boundary polygon is not convex (defect " + std::to_string(defect) +
                            ", diameter " + std::to_string(poly.diameter) + ")");
    }
    return poly;
}

double edge_margin(const RegionPolygon& poly, Complex w) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const Complex edge = v[(i + 1) % n] - v[i];
        const double len = std::abs(edge);
        if (len == 0.0) {
            continue;
        }
        margin = std::min(margin, cross(edge, w - v[i]) / len);
    }
    return margin;
}

bool contains(const RegionPolygon& poly, Complex w, double eps) {
    return edge_margin(poly, w) >= -eps;
}

double boundary_distance(const RegionPolygon& poly, Complex w) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        best = std::min(best, segment_distance(w, v[i], v[(i + 1) % n]));
    }
    return best;
}

double total_turning(const RegionPolygon& poly) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Complex e1 = v[(i + 1) % n] - v[i];
        const Complex e2 = v[(i + 2) % n] - v[(i + 1) % n];
        total += std::arg(e2 / e1);
    }
    return total;
}

double max_turning_angle(const RegionPolygon& poly) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Complex e1 = v[(i + 1) % n] - v[i];
        const Complex e2 = v[(i + 2) % n] - v[(i + 1) % n];
        worst = std::max(worst, std::abs(std::arg(e2 / e1)));
    }
    return worst;
}

double hausdorff_distance(const RegionPolygon& a, const RegionPolygon& b) {
    double worst = 0.0;
    for (const Complex& p : a.vertices) {
        worst = std::max(worst, boundary_distance(b, p));
    }
    for (const Complex& p : b.vertices) {
        worst = std::max(worst, boundary_distance(a, p));
    }
    return worst;
}

double max_chord_sagitta(const BoundaryCurve& curve, const QuadConfig& cfg) {
    if (curve.degenerate || curve.samples.size() < 2) {
        return 0.0;
    }
    const auto& s = curve.samples;
    const std::size_t n = s.size();
    std::vector<double> dist(n);
    parallel_for(n, [&](std::size_t i) {
        const CurveSample& a = s[i == 0 ? n - 1 : i - 1];
        const CurveSample& b = s[i];
        double theta = 0.5 * ((i == 0 ? a.theta - 2.0 * kPi : a.theta) + b.theta);
        if (theta <= -kPi) {
            theta += 2.0 * kPi;
        }
        dist[i] = line_distance(boundary_point(curve.params, theta, cfg), a.w, b.w);
    });
    return *std::max_element(dist.begin(), dist.end());
}

}  // namespace varregion
