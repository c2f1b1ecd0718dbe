#include <doctest.h>

#include "closed_forms.hpp"
#include "varregion/errors.hpp"
#include "varregion/io.hpp"
#include "varregion/oracle.hpp"
#include "varregion/region.hpp"

using namespace varregion;
using closed_forms::DiskSampler;

namespace {

RegionParams row_params(int figure) {
    const auto& row = figure_table()[figure - 1];
    return RegionParams(row.z0, row.lambda);
}

RegionPolygon refined_polygon(const RegionParams& params, double tol = 2.5e-7) {
    return to_polygon(refine_boundary(boundary_curve(params), tol));
}

}  // namespace

TEST_CASE("interior_center examples") {
    CHECK(interior_center(RegionParams(0.0, Complex(0.3, 0.4))) == Complex(0.0, 0.0));
    CHECK(interior_center(RegionParams(Complex(0.5, 0.5), 0.0)) == Complex(0.0, 0.0));
    // Extended-precision value of -2 log(1 - lambda z0) for the first figure row.
    const Complex c = interior_center(row_params(1));
    CHECK(std::abs(c - Complex(0.0104481575387028986, -0.00863660022769738697)) < 1e-16);
}

TEST_CASE("boundary_curve uses uniform thetas ending at pi") {
    const auto curve = boundary_curve(RegionParams(0.5, 0.0), 8);
    REQUIRE(curve.samples.size() == 8);
    CHECK_FALSE(curve.degenerate);
    CHECK(curve.samples.back().theta == doctest::Approx(kPi));
    CHECK(curve.samples[3].theta == 0.0);
    CHECK(std::abs(curve.samples[3].w - Complex(0.287682072451780927, 0.0)) < 1e-14);
    for (std::size_t k = 1; k < curve.samples.size(); ++k) {
        CHECK(curve.samples[k].theta > curve.samples[k - 1].theta);
    }
    CHECK(curve.samples.front().theta > -kPi);
}

TEST_CASE("boundary_curve for lambda = 0 matches the closed form") {
    for (const Complex z0 : {Complex(0.3, 0.0), Complex(0.5, 0.0), std::polar(0.7, kPi / 5.0)}) {
        const auto curve = boundary_curve(RegionParams(z0, 0.0), 128);
        for (const auto& s : curve.samples) {
            CHECK(std::abs(s.w - closed_forms::lambda0_boundary(z0, s.theta)) < 1e-10);
        }
    }
}

TEST_CASE("degenerate parameters return the single point") {
    const auto at_origin = boundary_curve(RegionParams(0.0, Complex(0.2, 0.1)));
    CHECK(at_origin.degenerate);
    REQUIRE(at_origin.samples.size() == 1);
    CHECK(at_origin.samples[0].w == Complex(0.0, 0.0));

    const RegionParams unit(Complex(0.4, -0.3), std::polar(1.0, 0.8));
    const auto curve = boundary_curve(unit, 3);
    CHECK(curve.degenerate);
    REQUIRE(curve.samples.size() == 1);
    CHECK(curve.samples[0].w == closed_forms::point_member(unit.z0(), unit.lambda()));
    CHECK_THROWS_AS(to_polygon(curve), GeometryError);
    CHECK(refine_boundary(curve, 1e-6).samples.size() == 1);
}

TEST_CASE("boundary_curve rejects fewer than three samples") {
    CHECK_THROWS_AS(boundary_curve(RegionParams(0.5, 0.0), 2), ParameterError);
}

TEST_CASE("quadrature failure carries the offending theta") {
    QuadConfig cfg;
    cfg.max_subdivisions = 1;
    cfg.rel_tol = 1e-15;
    cfg.abs_tol = 1e-300;
    try {
        boundary_curve(row_params(3), 4, cfg);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(e.theta().has_value());
    }
}

TEST_CASE("to_polygon orients counterclockwise and passes through the closed-form vertex") {
    auto curve = boundary_curve(RegionParams(0.5, 0.0), 64);
    std::reverse(curve.samples.begin(), curve.samples.end());
    const auto poly = to_polygon(curve);
    CHECK(signed_area(poly.vertices) > 0.0);
    bool found = false;
    for (const Complex& v : poly.vertices) {
        found = found || std::abs(v - Complex(0.287682072451780927, 0.0)) < 1e-14;
    }
    CHECK(found);
}

TEST_CASE("to_polygon rejects a reflex vertex") {
    const RegionParams params(0.5, 0.0);
    BoundaryCurve curve{params, {}, false};
    const std::vector<Complex> pts{{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.1}, {1.0, 1.0}, {0.0, 1.0}};
    for (std::size_t k = 0; k < pts.size(); ++k) {
        curve.samples.push_back(CurveSample{static_cast<double>(k), pts[k]});
    }
    CHECK_THROWS_AS(to_polygon(curve), GeometryError);
}

TEST_CASE("polygon geometry helpers on a unit square") {
    const RegionParams params(0.5, 0.0);
    BoundaryCurve curve{params, {}, false};
    const std::vector<Complex> pts{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
    for (std::size_t k = 0; k < pts.size(); ++k) {
        curve.samples.push_back(CurveSample{static_cast<double>(k), pts[k]});
    }
    const auto poly = to_polygon(curve);
    CHECK(poly.diameter == doctest::Approx(std::sqrt(2.0)));
    CHECK(total_turning(poly) == doctest::Approx(2.0 * kPi));
    CHECK(max_turning_angle(poly) == doctest::Approx(kPi / 2.0));
    CHECK(edge_margin(poly, Complex(0.5, 0.5)) == doctest::Approx(0.5));
    CHECK(contains(poly, Complex(1.0 + 1e-7, 0.5), 1e-6));
    CHECK_FALSE(contains(poly, Complex(1.0 + 1e-5, 0.5), 1e-6));
    CHECK(boundary_distance(poly, Complex(0.5, 0.25)) == doctest::Approx(0.25));
    CHECK(boundary_distance(poly, Complex(2.0, 2.0)) == doctest::Approx(std::sqrt(2.0)));
    CHECK(hausdorff_distance(poly, poly) == 0.0);
}

TEST_CASE("point_set_diameter agrees with brute force") {
    DiskSampler s(31);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Complex> pts(40);
        for (auto& p : pts) {
            p = s.point(2.0);
        }
        double brute = 0.0;
        for (const auto& a : pts) {
            for (const auto& b : pts) {
                brute = std::max(brute, std::abs(a - b));
            }
        }
        CHECK(point_set_diameter(pts) == doctest::Approx(brute).epsilon(1e-14));
    }
}

TEST_CASE("figure rows: convex, center inside, vertices inside their own polygon") {
    for (int fig = 1; fig <= 8; ++fig) {
        CAPTURE(fig);
        const RegionPolygon poly = refined_polygon(row_params(fig));
        CHECK(poly.convexity_defect >= -1e-9 * poly.diameter);
        CHECK(std::abs(total_turning(poly) - 2.0 * kPi) < 1e-6);
        CHECK(max_turning_angle(poly) <= kPi / 2.0);
        CHECK(edge_margin(poly, poly.center) > 0.0);
        CHECK(contains(poly, poly.center, 0.0));
        CHECK(contains(poly, poly.vertices[poly.vertices.size() / 3], 1e-12));
        CHECK_FALSE(contains(poly, Complex(10.0, 0.0), 1e-6));
        CHECK(poly.diameter < 2.0);
    }
}

TEST_CASE("refinement keeps thetas strictly increasing in (-pi, pi]") {
    const auto curve = refine_boundary(boundary_curve(row_params(3), 64), 1e-5);
    CHECK(curve.samples.size() > 64);
    CHECK(curve.samples.front().theta > -kPi);
    CHECK(curve.samples.back().theta <= kPi);
    for (std::size_t k = 1; k < curve.samples.size(); ++k) {
        CHECK(curve.samples[k].theta > curve.samples[k - 1].theta);
    }
    CHECK_THROWS_AS(refine_boundary(curve, 0.0), ParameterError);
}

TEST_CASE("doubling the uniform sample count moves the polygon by at most its chord sagitta") {
    const QuadConfig cfg;
    for (int fig : {1, 2, 5, 7}) {
        CAPTURE(fig);
        const RegionParams params = row_params(fig);
        const auto curve = boundary_curve(params, 512, cfg);
        const RegionPolygon coarse = to_polygon(curve);
        const RegionPolygon fine = to_polygon(boundary_curve(params, 1024, cfg));
        const double sagitta = max_chord_sagitta(curve, cfg);
        CHECK(hausdorff_distance(coarse, fine) <= sagitta + 10.0 * cfg.rel_tol * coarse.diameter);
    }
}

TEST_CASE("refined polygons converge with the refinement tolerance") {
    for (int fig : {3, 8}) {
        CAPTURE(fig);
        const RegionParams params = row_params(fig);
        const auto base = boundary_curve(params);
        const RegionPolygon a = to_polygon(refine_boundary(base, 1e-6));
        const RegionPolygon b = to_polygon(refine_boundary(base, 5e-7));
        CHECK(hausdorff_distance(a, b) <= 2.0 * 1e-6 * a.diameter);
    }
}

TEST_CASE("seeded members land inside the polygon; off-grid extremal values land on its boundary") {
    const QuadConfig cfg;
    const double golden = 0.6180339887498949;
    for (int fig : {2, 4, 8}) {
        CAPTURE(fig);
        const RegionParams params = row_params(fig);
        const RegionPolygon poly = refined_polygon(params);
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            CHECK(contains(poly, w_value(params, sample_param(seed), cfg), 1e-6 * poly.diameter));
        }
        for (int k = 1; k <= 16; ++k) {
            const double theta = kPi * (2.0 * std::fmod(k * golden, 1.0) - 1.0);
            const Complex w = boundary_point(params, theta, cfg);
            CHECK(boundary_distance(poly, w) <= 1e-6 * poly.diameter);
        }
    }
}

TEST_CASE("center has positive margin for random nondegenerate parameters") {
    DiskSampler s(32);
    for (int k = 0; k < 20; ++k) {
        const RegionParams params(s.point(0.9), s.point(0.95));
        const RegionPolygon poly = to_polygon(boundary_curve(params, 128));
        CHECK(edge_margin(poly, poly.center) > 0.0);
    }
}
