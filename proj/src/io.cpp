#include "varregion/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "varregion/errors.hpp"

namespace varregion {

namespace {

double parse_real(std::string_view text, std::string_view whole) {
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
        throw ParameterError("cannot parse complex literal '" + std::string(whole) + "'");
    }
    return value;
}

std::string fixed(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    return buf;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (c != ' ' && c != '\t') {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw ParameterError("empty complex literal");
    }
    if (s.back() != 'i') {
        return Complex(parse_real(s, text), 0.0);
    }
    s.pop_back();
    // The imaginary part starts at the last sign that is not an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string_view body(s);
    const std::string_view real_part = split == std::string::npos ? std::string_view{} : body.substr(0, split);
    std::string_view imag_part = split == std::string::npos ? body : body.substr(split);
    double imag = 0.0;
    if (imag_part.empty() || imag_part == "+") {
        imag = 1.0;
    } else if (imag_part == "-") {
        imag = -1.0;
    } else {
        imag = parse_real(imag_part, text);
    }
    const double real = real_part.empty() ? 0.0 : parse_real(real_part, text);
    return Complex(real, imag);
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_complex(Complex z) {
    return format_double(z.real()) + (std::signbit(z.imag()) ? "-" : "+") +
           format_double(std::abs(z.imag())) + "i";
}

std::string boundary_csv(const std::vector<CurveSample>& samples) {
    std::string out = "theta,re,im\n";
    for (const auto& s : samples) {
        out += format_double(s.theta) + "," + format_double(s.w.real()) + "," + format_double(s.w.imag()) + "\n";
    }
    return out;
}

std::vector<CurveSample> parse_boundary_csv(std::string_view text) {
    std::vector<CurveSample> samples;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "theta,re,im") {
        throw ParameterError("boundary CSV must start with the header 'theta,re,im'");
    }
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
        if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos) {
            throw ParameterError("boundary CSV row must have three fields: '" + line + "'");
        }
        const std::string_view row(line);
        samples.push_back(CurveSample{parse_real(row.substr(0, c1), row),
                                      Complex(parse_real(row.substr(c1 + 1, c2 - c1 - 1), row),
                                              parse_real(row.substr(c2 + 1), row))});
    }
    return samples;
}

std::string boundary_svg(const RegionParams& params, const std::vector<CurveSample>& samples,
                         const std::string& comment, const std::vector<Complex>& extra_points) {
    const Complex center = interior_center(params);
    double xmin = center.real();
    double xmax = center.real();
    double ymin = center.imag();
    double ymax = center.imag();
    auto extend = [&](Complex w) {
        xmin = std::min(xmin, w.real());
        xmax = std::max(xmax, w.real());
        ymin = std::min(ymin, w.imag());
        ymax = std::max(ymax, w.imag());
    };
    for (const auto& s : samples) {
        extend(s.w);
    }
    for (const Complex& w : extra_points) {
        extend(w);
    }
    double span = std::max(xmax - xmin, ymax - ymin);
    if (!(span > 0.0)) {
        span = 1e-3 * std::max(1.0, std::abs(center));
    }
    const double margin = 0.05 * span;
    xmin -= margin;
    ymax += margin;
    const double extent = 600.0;
    const double scale = extent / (span + 2.0 * margin);
    const double width = (xmax - xmin + margin) * scale;
    const double height = (ymax - ymin + margin) * scale;
    // Imaginary axis points up.
    auto px = [&](Complex w) { return fixed((w.real() - xmin) * scale) + " " + fixed((ymax - w.imag()) * scale); };

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(width) + "\" height=\"" + fixed(height) +
           "\" viewBox=\"0 0 " + fixed(width) + " " + fixed(height) + "\">\n";
    out += "<!-- " + comment + " -->\n";
    if (samples.size() >= 2) {
        out += "<path d=\"";
        for (std::size_t k = 0; k < samples.size(); ++k) {
            out += (k == 0 ? "M " : " L ") + px(samples[k].w);
        }
        out += " Z\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    for (const Complex& w : extra_points) {
        const std::string p = px(w);
        const auto sp = p.find(' ');
        out += "<circle cx=\"" + p.substr(0, sp) + "\" cy=\"" + p.substr(sp + 1) +
               "\" r=\"1.5\" fill=\"steelblue\"/>\n";
    }
    const std::string c = px(center);
    const auto sp = c.find(' ');
    out += "<circle cx=\"" + c.substr(0, sp) + "\" cy=\"" + c.substr(sp + 1) + "\" r=\"3\" fill=\"red\"/>\n";
    out += "</svg>\n";
    return out;
}

const std::array<FigureRow, 8>& figure_table() {
    static const std::array<FigureRow, 8> rows{{
        {1, {0.0230875, 0.00517512}, {0.175557, -0.225417}},
        {2, {0.147076, 0.0913164}, {0.0748874, 0.0476965}},
        {3, {-0.819143, -0.551002}, {0.722765, 0.433556}},
        {4, {0.757794, -0.598957}, {-0.308071, -0.32103}},
        {5, {-0.414782, -0.377338}, {0.196381, -0.500501}},
        {6, {0.386456, -0.316514}, {-0.236285, 0.235873}},
        {7, {0.419565, 0.478471}, {0.242605, 0.097106}},
        {8, {0.754872, 0.0830025}, {0.130907, 0.931628}},
    }};
    return rows;
}

}  // namespace varregion
