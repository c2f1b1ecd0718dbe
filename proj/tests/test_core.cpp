#include <doctest.h>

#include "closed_forms.hpp"
#include "varregion/core.hpp"
#include "varregion/errors.hpp"
#include "varregion/oracle.hpp"

using namespace varregion;
using closed_forms::DiskSampler;

TEST_CASE("delta fixes lambda at the origin and is the identity for lambda = 0") {
    const Complex lambda(0.3, -0.4);
    CHECK(delta(Complex(0.0, 0.0), lambda) == lambda);
    const Complex z(0.2, 0.7);
    CHECK(delta(z, Complex(0.0, 0.0)) == z);
}

TEST_CASE("delta collapses to lambda on the unit circle") {
    DiskSampler s(11);
    for (int k = 0; k < 200; ++k) {
        const Complex lambda = s.unit();
        const Complex z = s.point(0.99);
        CHECK(std::abs(delta(z, lambda) - lambda) < 1e-14);
    }
}

TEST_CASE("delta rejects a vanishing denominator") {
    // |lambda| = |z| = 1 with opposite arguments.
    CHECK_THROWS_AS(delta(Complex(-1.0, 0.0), Complex(1.0, 0.0)), DomainError);
}

TEST_CASE("delta maps the closed disk into itself") {
    DiskSampler s(12);
    for (int k = 0; k < 10000; ++k) {
        const Complex z = s.point(1.0);
        const Complex lambda = s.point(1.0);
        CHECK(std::abs(delta(z, lambda)) <= 1.0 + 1e-12);
    }
}

TEST_CASE("omega examples") {
    const Complex lambda(0.25, 0.1);
    const Complex z(0.3, -0.2);
    const Complex a = std::polar(1.0, 0.7);
    CHECK(omega(z, lambda, SchwarzParam::extremal(a)) == z * delta(a * z, lambda));
    CHECK(std::abs(omega(z, lambda, SchwarzParam::extremal(0.0)) - lambda * z) < 1e-16);
    const auto identity = SchwarzParam::blaschke(1.0, 0.0, {});
    CHECK(std::abs(omega(z, Complex(0.0, 0.0), identity) - z * z) < 1e-16);
}

TEST_CASE("Schwarz bound, omega(0) = 0 and omega'(0) = lambda over sampled members") {
    DiskSampler s(13);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto param = sample_param(seed);
        const Complex lambda = s.point(1.0);
        CHECK(omega(Complex(0.0, 0.0), lambda, param) == Complex(0.0, 0.0));
        CHECK(param.g(Complex(0.0, 0.0)) == Complex(0.0, 0.0));
        const double h = 1e-7;
        const Complex derivative =
            (omega(Complex(h, 0.0), lambda, param) - omega(Complex(-h, 0.0), lambda, param)) / (2.0 * h);
        CHECK(std::abs(derivative - lambda) < 1e-6);
        for (int k = 0; k < 30; ++k) {
            const Complex z = s.point(0.999);
            CHECK(std::abs(omega(z, lambda, param)) <= std::abs(z) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("p_value has positive real part and matches the half-plane map for |lambda| = 1") {
    CHECK(p_value(Complex(0.0, 0.0), Complex(0.4, 0.1), SchwarzParam::extremal(Complex(0.5, 0.5))) ==
          Complex(1.0, 0.0));
    DiskSampler s(14);
    for (int k = 0; k < 100; ++k) {
        const Complex lambda = s.unit();
        const Complex z = s.point(0.95);
        const auto param = sample_param(1000 + k);
        CHECK(std::abs(p_value(z, lambda, param) - (1.0 + lambda * z) / (1.0 - lambda * z)) < 1e-10);
    }
    // 10^3 members x 10 points here; the acceptance suite runs the full grid.
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto param = sample_param(seed);
        const Complex lambda = s.point(1.0);
        for (int k = 0; k < 10; ++k) {
            CHECK(p_value(s.point(0.999), lambda, param).real() > 0.0);
        }
    }
}

TEST_CASE("w_prime examples") {
    DiskSampler s(15);
    for (int k = 0; k < 50; ++k) {
        const Complex lambda = s.point(1.0);
        CHECK(std::abs(w_prime(Complex(0.0, 0.0), lambda, sample_param(k)) - 2.0 * lambda) < 1e-15);
        const Complex a = s.point(1.0);
        const Complex z = s.point(0.99);
        const Complex expected = 2.0 * a * z / (1.0 - a * z * z);
        CHECK(std::abs(w_prime(z, Complex(0.0, 0.0), SchwarzParam::extremal(a)) - expected) < 1e-12);
        // Expanded form of the integrand: 2(a z + lambda)/(1 + (conj(lambda) a - lambda) z - a z^2).
        const Complex expanded = 2.0 * (a * z + lambda) / (1.0 + (std::conj(lambda) * a - lambda) * z - a * z * z);
        CHECK(std::abs(w_prime(z, lambda, SchwarzParam::extremal(a)) - expanded) < 1e-10 * (1.0 + std::abs(expanded)));
    }
}

TEST_CASE("z W'(z) = P(z) - 1") {
    DiskSampler s(16);
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto param = sample_param(seed);
        const Complex lambda = s.point(1.0);
        const Complex z = s.point(0.9);
        const Complex lhs = z * w_prime(z, lambda, param);
        const Complex rhs = p_value(z, lambda, param) - 1.0;
        CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("RegionParams validation") {
    CHECK_NOTHROW(RegionParams(Complex(0.5, 0.0), Complex(1.0, 0.0), Complex(2.0, 0.0)));
    CHECK_NOTHROW(RegionParams(Complex(0.0, 0.0), std::polar(1.0, 2.0), std::polar(2.0, -1.0)));
    CHECK_THROWS_AS(RegionParams(Complex(1.0, 0.0), Complex(0.0, 0.0)), ParameterError);
    CHECK_THROWS_AS(RegionParams(Complex(0.5, 0.0), Complex(1.5, 0.0)), ParameterError);
    CHECK_THROWS_AS(RegionParams(Complex(0.5, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0)), ParameterError);
    CHECK_THROWS_AS(RegionParams(Complex(0.5, 0.0), Complex(0.0, 0.0), Complex(2.1, 0.0)), ParameterError);
    CHECK_THROWS_AS(RegionParams(Complex(NAN, 0.0), Complex(0.0, 0.0)), ParameterError);
    try {
        RegionParams(Complex(0.5, 0.0), Complex(0.0, 0.0), Complex(0.0, 3.0));
        FAIL("expected ParameterError");
    } catch (const ParameterError& e) {
        CHECK(std::string(e.what()).find("E(alpha)=∅ if |alpha|>2") != std::string::npos);
    }
}

TEST_CASE("degenerate detection thresholds") {
    CHECK(RegionParams(Complex(1e-15, 0.0), Complex(0.5, 0.0)).degenerate());
    CHECK_FALSE(RegionParams(Complex(1e-13, 0.0), Complex(0.5, 0.0)).degenerate());
    CHECK(RegionParams(Complex(0.5, 0.0), Complex(1.0 - 1e-13, 0.0)).degenerate());
    CHECK_FALSE(RegionParams(Complex(0.5, 0.0), Complex(1.0 - 1e-11, 0.0)).degenerate());
}

TEST_CASE("SchwarzParam validation") {
    CHECK_THROWS_AS(SchwarzParam::extremal(Complex(1.1, 0.0)), ParameterError);
    CHECK_THROWS_AS(SchwarzParam::blaschke(1.2, 0.0, {}), ParameterError);
    CHECK_THROWS_AS(SchwarzParam::blaschke(0.5, -kPi, {}), ParameterError);
    CHECK_THROWS_AS(SchwarzParam::blaschke(0.5, 0.0, {}, 0), ParameterError);
    CHECK_THROWS_AS(SchwarzParam::blaschke(0.5, 0.0, {Complex(1.0, 0.0)}), ParameterError);
    const std::vector<Complex> five(5, Complex(0.1, 0.0));
    CHECK_THROWS_AS(SchwarzParam::blaschke(0.5, 0.0, five), ParameterError);
    CHECK_NOTHROW(SchwarzParam::blaschke(0.5, 0.0, five, 1, 5));
}

TEST_CASE("Blaschke products map the disk into the closed disk") {
    const auto param = SchwarzParam::blaschke(1.0, 0.3, {Complex(0.5, 0.2), Complex(-0.8, 0.1)}, 2);
    DiskSampler s(17);
    for (int k = 0; k < 1000; ++k) {
        CHECK(std::abs(param.g(s.point(0.999))) <= 1.0 + 1e-14);
    }
    // Unimodular on the circle.
    CHECK(std::abs(std::abs(param.g(std::polar(1.0, 0.4))) - 1.0) < 1e-12);
    CHECK(param.describe().find(',') == std::string::npos);
}
