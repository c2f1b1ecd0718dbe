#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "varregion/core.hpp"
#include "varregion/region.hpp"

namespace varregion {

/// Parses "a+bi", "a-bi", "a", "bi", "-i" with optional spaces and scientific
/// notation, e.g. "0.0230875+0.00517512i" or "-1e-3 - 2.5E-2i".
/// Throws ParameterError on anything else.
Complex parse_complex(std::string_view text);

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double value);
std::string format_complex(Complex z);

/// CSV with header "theta,re,im", one row per sample.
std::string boundary_csv(const std::vector<CurveSample>& samples);
/// Inverse of boundary_csv. Throws ParameterError on malformed input.
std::vector<CurveSample> parse_boundary_csv(std::string_view text);

/// Stroke-only closed path through the samples plus a marker at the interior
/// center, scaled to a viewBox fitted to the data with a 5% margin.
/// `comment` is embedded verbatim as an XML comment.
std::string boundary_svg(const RegionParams& params, const std::vector<CurveSample>& samples,
                         const std::string& comment, const std::vector<Complex>& extra_points = {});

struct FigureRow {
    int figure;
    Complex z0;
    Complex lambda;
};

/// The eight reference parameter sets rendered by the figures subcommand.
const std::array<FigureRow, 8>& figure_table();

}  // namespace varregion
