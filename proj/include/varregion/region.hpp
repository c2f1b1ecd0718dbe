#pragma once

// Boundary of the variability region and its convex polygon.
//
// The boundary is traced by the extremal members g(z) = e^{i theta} z:
//   theta -> integral over [0, z0] of 2 delta(e^{i theta} s, lambda) / (1 - s delta(e^{i theta} s, lambda)) ds
// for theta in (-pi, pi]. The region is convex, so the sampled curve, taken in
// order, is an inscribed convex polygon.

#include <cstddef>
#include <vector>

#include "varregion/core.hpp"
#include "varregion/quad.hpp"

namespace varregion {

inline constexpr std::size_t kDefaultBoundarySamples = 512;
inline constexpr double kDefaultConvexityTol = 1e-9;

struct CurveSample {
    double theta;
    Complex w;
};

struct BoundaryCurve {
    RegionParams params;
    /// Strictly increasing thetas in (-pi, pi]. A single sample when degenerate.
    std::vector<CurveSample> samples;
    bool degenerate = false;
};

/// -2 log(1 - lambda z0), the value of the member with g = 0. Principal branch;
/// Re(1 - lambda z0) > 0 because |lambda z0| < 1.
Complex interior_center(const RegionParams& params);

/// Boundary point for a single direction theta.
Complex boundary_point(const RegionParams& params, double theta, const QuadConfig& cfg);

/// n_samples boundary points at theta_k = -pi + 2 pi (k + 1) / n_samples.
/// Degenerate parameters (z0 = 0 or |lambda| = 1) short-circuit to the single
/// point interior_center(params) without any quadrature.
/// Quadrature failures are rethrown with the offending theta attached.
BoundaryCurve boundary_curve(const RegionParams& params,
                             std::size_t n_samples = kDefaultBoundarySamples,
                             const QuadConfig& cfg = {});

/// Inserts theta-midpoints until every chord's midpoint sample lies within
/// rel_tol * diameter of the chord (diameter of the input curve). Bisection
/// stops at max_depth levels per initial interval. Degenerate curves are
/// returned unchanged.
BoundaryCurve refine_boundary(const BoundaryCurve& curve, double rel_tol, const QuadConfig& cfg = {},
                              int max_depth = 30);

struct RegionPolygon {
    /// Counterclockwise.
    std::vector<Complex> vertices;
    std::vector<double> thetas;
    Complex center;
    /// Smallest signed vertex bulge cross(e_i, e_{i+1}) / |e_i + e_{i+1}|, i.e. the signed
    /// distance of each vertex from the chord through its neighbours. Negative values
    /// are reflex vertices.
    double convexity_defect = 0.0;
    double diameter = 0.0;
};

/// Orients the curve counterclockwise and checks convexity. Throws GeometryError
/// for degenerate curves (fewer than three samples or the point case) and when
/// convexity_defect < -convexity_tol * diameter.
RegionPolygon to_polygon(const BoundaryCurve& curve, double convexity_tol = kDefaultConvexityTol);

/// True iff w passes every edge half-plane test dilated outward by eps.
bool contains(const RegionPolygon& poly, Complex w, double eps);

/// Smallest signed distance from w to the edge lines (positive inside).
double edge_margin(const RegionPolygon& poly, Complex w);

/// Distance from w to the nearest point of the polygon boundary.
double boundary_distance(const RegionPolygon& poly, Complex w);

/// Sum of exterior angles; 2 pi for a simple convex polygon traversed once.
double total_turning(const RegionPolygon& poly);

/// Largest absolute exterior angle between consecutive edges.
double max_turning_angle(const RegionPolygon& poly);

double signed_area(const std::vector<Complex>& vertices);

/// Diameter of a point set via its convex hull and rotating calipers.
double point_set_diameter(const std::vector<Complex>& points);

/// Symmetric Hausdorff distance between polygon boundaries, measured from
/// each vertex set to the other boundary.
double hausdorff_distance(const RegionPolygon& a, const RegionPolygon& b);

/// Largest distance from a theta-midpoint boundary sample to the chord it splits.
/// A posteriori estimate of how far the polygon sits inside the true region.
double max_chord_sagitta(const BoundaryCurve& curve, const QuadConfig& cfg = {});

}  // namespace varregion
