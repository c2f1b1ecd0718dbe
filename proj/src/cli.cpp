#include "varregion/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "varregion/bounds.hpp"
#include "varregion/errors.hpp"
#include "varregion/io.hpp"
#include "varregion/oracle.hpp"
#include "varregion/region.hpp"

namespace varregion::cli {

namespace {

using nlohmann::ordered_json;

// Thresholds applied by `verify`.
constexpr double kCoeffTol = 1e-8;
constexpr double kEnvelopeTol = 1e-9;
constexpr double kEqualityTol = 1e-10;
constexpr double kConvexityTol = 1e-9;
constexpr double kTurningTol = 1e-6;
constexpr double kContainmentTol = 1e-6;
constexpr double kDiskTol = 1e-8;
constexpr double kHIdentityTol = 1e-12;
constexpr double kRoundTripTol = 1e-8;
constexpr double kVerifyRefineTol = 2.5e-7;

ordered_json complex_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json params_json(const RegionParams& p) {
    return {{"z0", complex_json(p.z0())}, {"lambda", complex_json(p.lambda())}, {"alpha", complex_json(p.alpha())}};
}

using OutputFiles = std::vector<std::pair<std::filesystem::path, std::string>>;

// All output of a run goes through here once the content is complete.
void write_outputs(const OutputFiles& files, std::ostream& out) {
    for (const auto& [path, content] : files) {
        if (path.empty()) {
            out << content;
            continue;
        }
        if (path.has_parent_path()) {
            std::filesystem::create_directories(path.parent_path());
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            throw ParameterError("cannot open '" + path.string() + "' for writing");
        }
        file << content;
        if (!file) {
            throw ParameterError("failed writing '" + path.string() + "'");
        }
    }
}

BoundaryCurve traced_curve(const RunConfig& config) {
    BoundaryCurve curve = boundary_curve(config.params, config.n_samples, config.quad);
    if (config.refine > 0.0) {
        curve = refine_boundary(curve, config.refine, config.quad);
    }
    return curve;
}

std::string curve_comment(const RegionParams& p, const BoundaryCurve& curve) {
    return "boundary of V(z0, lambda): z0=" + format_complex(p.z0()) + " lambda=" + format_complex(p.lambda()) +
           " samples=" + std::to_string(curve.samples.size());
}

std::string render_curve(const RunConfig& config, const BoundaryCurve& curve) {
    switch (config.format) {
        case OutputFormat::csv:
            return boundary_csv(curve.samples);
        case OutputFormat::svg:
            return boundary_svg(config.params, curve.samples, curve_comment(config.params, curve));
        case OutputFormat::json: {
            ordered_json doc{{"schema", 1}, {"command", "boundary"}, {"params", params_json(config.params)},
                             {"degenerate", curve.degenerate}};
            ordered_json samples = ordered_json::array();
            for (const auto& s : curve.samples) {
                samples.push_back({{"theta", s.theta}, {"re", s.w.real()}, {"im", s.w.imag()}});
            }
            doc["samples"] = std::move(samples);
            return doc.dump(2) + "\n";
        }
    }
    return {};
}

int run_boundary(const RunConfig& config, std::ostream& out) {
    if (config.n_samples < 3) {
        throw ParameterError("boundary needs at least 3 samples");
    }
    const BoundaryCurve curve = traced_curve(config);
    write_outputs({{config.output_path, render_curve(config, curve)}}, out);
    return kExitOk;
}

int run_sample(const RunConfig& config, std::ostream& out) {
    struct Row {
        std::uint64_t seed;
        SchwarzParam param;
        Complex w;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < config.count; ++i) {
        const std::uint64_t seed = config.seed + i;
        SchwarzParam param = sample_param(seed);
        const Complex w = w_value(config.params, param, config.quad);
        rows.push_back(Row{seed, std::move(param), w});
    }
    std::string content;
    if (config.format == OutputFormat::csv) {
        content = "index,seed,param,re,im\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            content += std::to_string(i) + "," + std::to_string(rows[i].seed) + "," + rows[i].param.describe() + "," +
                       format_double(rows[i].w.real()) + "," + format_double(rows[i].w.imag()) + "\n";
        }
    } else if (config.format == OutputFormat::json) {
        ordered_json doc{{"schema", 1}, {"command", "sample"}, {"params", params_json(config.params)}};
        ordered_json items = ordered_json::array();
        for (const auto& r : rows) {
            items.push_back({{"seed", r.seed}, {"param", r.param.describe()}, {"w", complex_json(r.w)}});
        }
        doc["samples"] = std::move(items);
        content = doc.dump(2) + "\n";
    } else {
        std::vector<Complex> points;
        for (const auto& r : rows) {
            points.push_back(r.w);
        }
        const BoundaryCurve curve = traced_curve(config);
        content = boundary_svg(config.params, curve.samples, curve_comment(config.params, curve), points);
    }
    write_outputs({{config.output_path, content}}, out);
    return kExitOk;
}

ordered_json suite(bool pass, std::initializer_list<std::pair<const char*, double>> residuals) {
    ordered_json s{{"pass", pass}};
    for (const auto& [name, value] : residuals) {
        s[name] = value;
    }
    return s;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& log) {
    const RegionParams& params = config.params;
    const Complex lambda = params.lambda();
    const QuadConfig& quad = config.quad;

    std::vector<SchwarzParam> members;
    for (std::size_t i = 0; i < config.count; ++i) {
        members.push_back(sample_param(config.seed + i));
    }
    std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
    auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    auto random_point = [&](double max_radius) {
        return std::polar(max_radius * std::sqrt(uniform()), kPi * (1.0 - 2.0 * uniform()));
    };

    ordered_json suites;

    int membership_failures = 0;
    for (const auto& m : members) {
        membership_failures += verify_membership(m, lambda, 16) ? 0 : 1;
    }
    suites["membership"] = suite(membership_failures == 0, {{"failures", membership_failures}});

    std::map<std::string, double> coeff_worst;
    for (const auto& m : members) {
        for (const auto& [name, value] : coefficient_report(m, params, quad).residuals) {
            coeff_worst[name] = std::max(coeff_worst[name], value);
        }
    }
    {
        ordered_json s{{"pass", true}};
        for (const auto& [name, value] : coeff_worst) {
            s[name] = value;
            if (!(value <= kCoeffTol)) {
                s["pass"] = false;
            }
        }
        suites["coefficients"] = s;
    }

    double min_slack = std::numeric_limits<double>::infinity();
    double equality = 0.0;
    double p_disk_excess = 0.0;
    double transcription = 0.0;
    for (const auto& m : members) {
        const auto* ext = m.as_extremal();
        const bool on_circle = ext && std::abs(std::abs(ext->a) - 1.0) < 1e-15;
        for (int k = 0; k < 16; ++k) {
            const Complex z = random_point(0.95);
            const double slack = envelope_check(m, lambda, z);
            min_slack = std::min(min_slack, slack);
            if (on_circle) {
                equality = std::max(equality, std::abs(slack));
            }
            const Complex p = p_value(z, lambda, m);
            p_disk_excess = std::max(p_disk_excess, std::abs(p - p_disk_center(z, lambda)) - p_disk_radius(z, lambda));
            transcription = std::max(transcription, std::abs((p_disk_center(z, lambda) - 1.0) / z - c_center(z, lambda)));
        }
    }
    suites["envelope"] = suite(min_slack >= -kEnvelopeTol && equality <= kEqualityTol && p_disk_excess <= kEnvelopeTol &&
                                   transcription <= kEqualityTol,
                               {{"min_slack", min_slack},
                                {"extremal_equality", equality},
                                {"p_disk_excess", std::max(0.0, p_disk_excess)},
                                {"center_transcription", transcription}});

    if (!is_unit_lambda(lambda)) {
        double worst = 0.0;
        double smallest_h = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 256; ++k) {
            const Complex z = random_point(0.999);
            worst = std::max(worst, h_identity_check(z, lambda));
            if (std::abs(z) > 1e-3) {
                smallest_h = std::min(smallest_h, std::abs(h_value(z, lambda)));
            }
        }
        suites["h_identity"] = suite(worst <= kHIdentityTol && smallest_h > 1e-14,
                                     {{"max_residual", worst}, {"min_abs_h", smallest_h}});

        int wrong = 0;
        for (double theta : {-0.75 * kPi, -0.25 * kPi, 0.25 * kPi, 0.75 * kPi}) {
            wrong += lemma_g_zero_count(theta, lambda, 0.7, quad) == 2 ? 0 : 1;
        }
        suites["lemma_g"] = suite(wrong == 0, {{"wrong_counts", wrong}});
    }

    std::vector<Complex> values;
    for (const auto& m : members) {
        values.push_back(w_value(params, m, quad));
    }
    const DiskBound disk = disk_bound(params, quad);
    if (params.degenerate()) {
        const Complex center = interior_center(params);
        double spread = 0.0;
        for (const Complex& w : values) {
            spread = std::max(spread, std::abs(w - center));
        }
        suites["region"] = suite(spread <= kEqualityTol, {{"max_distance_to_point", spread}});
        const double margin = disk.radius - std::abs(center - disk.center);
        suites["disk"] = suite(margin >= -kDiskTol, {{"min_margin", margin}});
    } else {
        const BoundaryCurve curve =
            refine_boundary(boundary_curve(params, config.n_samples, quad), kVerifyRefineTol, quad);
        const RegionPolygon poly = to_polygon(curve, std::numeric_limits<double>::infinity());
        const double defect = poly.convexity_defect / poly.diameter;
        const double turning = std::abs(total_turning(poly) - 2.0 * kPi);
        const double max_turn = max_turning_angle(poly);
        const double center_margin = edge_margin(poly, poly.center);
        double containment = std::numeric_limits<double>::infinity();
        for (const Complex& w : values) {
            containment = std::min(containment, edge_margin(poly, w) / poly.diameter);
        }
        suites["region"] = suite(defect >= -kConvexityTol && turning <= kTurningTol && max_turn <= kPi / 2.0 &&
                                     center_margin > 0.0 && containment >= -kContainmentTol,
                                 {{"vertices", static_cast<double>(poly.vertices.size())},
                                  {"diameter", poly.diameter},
                                  {"relative_convexity_defect", defect},
                                  {"turning_error", turning},
                                  {"max_turning_angle", max_turn},
                                  {"center_edge_margin", center_margin},
                                  {"min_relative_containment_margin", containment}});
        double margin = std::numeric_limits<double>::infinity();
        for (const Complex& v : poly.vertices) {
            margin = std::min(margin, disk.radius - std::abs(v - disk.center));
        }
        suites["disk"] = suite(margin >= -kDiskTol, {{"radius", disk.radius}, {"min_margin", margin}});
    }

    double round_trip = 0.0;
    for (std::size_t i = 0; i < std::min<std::size_t>(3, members.size()); ++i) {
        round_trip = std::max(round_trip, reconstruction_residual(members[i], params, quad));
    }
    suites["reconstruction"] = suite(round_trip <= kRoundTripTol, {{"max_round_trip", round_trip}});

    bool pass = true;
    for (const auto& [name, s] : suites.items()) {
        if (!s["pass"].get<bool>()) {
            pass = false;
            log << "verify: suite '" << name << "' failed\n";
        }
    }
    ordered_json doc{{"schema", 1}, {"command", "verify"}, {"params", params_json(params)},
                     {"members", config.count}, {"seed", config.seed}, {"pass", pass}, {"suites", suites}};
    write_outputs({{config.output_path, doc.dump(2) + "\n"}}, out);
    return pass ? kExitOk : kExitInvariantViolation;
}

int run_diskbound(const RunConfig& config, std::ostream& out) {
    const DiskBound disk = disk_bound(config.params, config.quad);
    const BoundaryCurve curve = traced_curve(config);
    double margin = std::numeric_limits<double>::infinity();
    for (const auto& s : curve.samples) {
        margin = std::min(margin, disk.radius - std::abs(s.w - disk.center));
    }
    std::string content;
    if (config.format == OutputFormat::json) {
        ordered_json doc{{"schema", 1},         {"command", "diskbound"},  {"params", params_json(config.params)},
                         {"path", disk.path},   {"center", complex_json(disk.center)}, {"radius", disk.radius},
                         {"margin", margin}};
        content = doc.dump(2) + "\n";
    } else if (config.format == OutputFormat::csv) {
        content = "center_re,center_im,radius,margin\n" + format_double(disk.center.real()) + "," +
                  format_double(disk.center.imag()) + "," + format_double(disk.radius) + "," + format_double(margin) +
                  "\n";
    } else {
        throw ParameterError("diskbound supports csv and json output");
    }
    write_outputs({{config.output_path, content}}, out);
    return kExitOk;
}

int run_lemma(const RunConfig& config, std::ostream& out) {
    const Complex lambda = config.params.lambda();
    const int zeros = lemma_g_zero_count(config.theta, lambda, config.radius, config.quad);
    std::string content;
    if (config.format == OutputFormat::json) {
        ordered_json doc{{"schema", 1},           {"command", "lemma"},         {"theta", config.theta},
                         {"lambda", complex_json(lambda)}, {"radius", config.radius}, {"zero_count", zeros}};
        content = doc.dump(2) + "\n";
    } else if (config.format == OutputFormat::csv) {
        content = "theta,lambda_re,lambda_im,radius,zero_count\n" + format_double(config.theta) + "," +
                  format_double(lambda.real()) + "," + format_double(lambda.imag()) + "," +
                  format_double(config.radius) + "," + std::to_string(zeros) + "\n";
    } else {
        throw ParameterError("lemma supports csv and json output");
    }
    write_outputs({{config.output_path, content}}, out);
    return kExitOk;
}

int run_figures(const RunConfig& config, std::ostream& log) {
    const std::filesystem::path dir = config.output_path.empty() ? "figures" : config.output_path;
    OutputFiles files;
    for (const auto& row : figure_table()) {
        RunConfig fig = config;
        fig.params = RegionParams(row.z0, row.lambda, config.params.alpha());
        const BoundaryCurve curve = traced_curve(fig);
        const std::string stem = "fig" + std::to_string(row.figure);
        const std::string comment = "figure " + std::to_string(row.figure) + ": z0=" + format_complex(row.z0) +
                                    " lambda=" + format_complex(row.lambda) +
                                    " samples=" + std::to_string(curve.samples.size());
        files.emplace_back(dir / (stem + ".svg"), boundary_svg(fig.params, curve.samples, comment));
        files.emplace_back(dir / (stem + ".csv"), boundary_csv(curve.samples));
        const RegionPolygon poly = to_polygon(curve, std::numeric_limits<double>::infinity());
        log << stem << ": " << curve.samples.size() << " samples, diameter " << format_double(poly.diameter) << "\n";
    }
    write_outputs(files, log);
    return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& log) {
    config.quad.validate();
    switch (config.subcommand) {
        case Subcommand::boundary:
            return run_boundary(config, out);
        case Subcommand::sample:
            return run_sample(config, out);
        case Subcommand::verify:
            return run_verify(config, out, log);
        case Subcommand::diskbound:
            return run_diskbound(config, out);
        case Subcommand::lemma:
            return run_lemma(config, out);
        case Subcommand::figures:
            return run_figures(config, log);
    }
    return kExitFailure;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "Region of variability of log f'(z0) + alpha f(z0) over exponentially convex functions "
        "with f''(0) = 2 lambda - alpha."};
    app.require_subcommand(1);

    std::string z0_text = "0";
    std::string lambda_text = "0";
    std::string alpha_text = "1";
    std::string format_text = "csv";
    std::string out_text;
    RunConfig config;
    double figures_refine = 1e-4;

    auto add_quad = [&](CLI::App* sub) {
        sub->add_option("--rel-tol", config.quad.rel_tol, "quadrature relative tolerance")->capture_default_str();
        sub->add_option("--abs-tol", config.quad.abs_tol, "quadrature absolute tolerance")->capture_default_str();
        sub->add_option("--panel-order", config.quad.panel_order, "Gauss-Legendre nodes per panel")
            ->capture_default_str();
        sub->add_option("--max-subdivisions", config.quad.max_subdivisions, "panel limit")->capture_default_str();
    };
    auto add_region = [&](CLI::App* sub, bool need_z0) {
        auto* z0 = sub->add_option("--z0", z0_text, "evaluation point, e.g. 0.5+0.1i (|z0| < 1)");
        if (need_z0) {
            z0->required();
        }
        sub->add_option("--lambda", lambda_text, "second-coefficient parameter (|lambda| <= 1)")->required();
        sub->add_option("--alpha", alpha_text,
                        "exponential-convexity parameter, 0 < |alpha| <= 2; default 1 (the region does not depend on it)")
            ->capture_default_str();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "output format")
            ->check(CLI::IsMember({"csv", "json", "svg"}))
            ->capture_default_str();
        sub->add_option("-o,--out", out_text, "output file (stdout when omitted)");
    };

    auto* boundary = app.add_subcommand("boundary", "trace the boundary curve");
    add_region(boundary, true);
    boundary->add_option("-n,--samples", config.n_samples, "uniform theta samples")->capture_default_str();
    boundary->add_option("--refine", config.refine, "relative chord tolerance for refinement (0 = off)")
        ->capture_default_str();
    add_format(boundary);
    add_quad(boundary);

    auto* sample = app.add_subcommand("sample", "values of seeded random class members");
    add_region(sample, true);
    sample->add_option("--count", config.count, "number of members")->capture_default_str();
    sample->add_option("--seed", config.seed, "first seed")->capture_default_str();
    sample->add_option("-n,--samples", config.n_samples, "boundary samples for svg output")->capture_default_str();
    add_format(sample);
    add_quad(sample);

    auto* verify = app.add_subcommand("verify", "run the verification suites, JSON report");
    add_region(verify, true);
    verify->add_option("--count", config.count, "number of members")->capture_default_str();
    verify->add_option("--seed", config.seed, "first seed")->capture_default_str();
    verify->add_option("-n,--samples", config.n_samples, "initial boundary samples")->capture_default_str();
    verify->add_option("-o,--out", out_text, "report file (stdout when omitted)");
    add_quad(verify);

    auto* diskbound = app.add_subcommand("diskbound", "enclosing disk and its margin over the boundary");
    add_region(diskbound, true);
    diskbound->add_option("-n,--samples", config.n_samples, "boundary samples")->capture_default_str();
    diskbound->add_option("--refine", config.refine, "relative chord tolerance for refinement (0 = off)")
        ->capture_default_str();
    add_format(diskbound);
    add_quad(diskbound);

    auto* lemma = app.add_subcommand("lemma", "zero count of the auxiliary function G inside |z| = radius");
    lemma->add_option("--theta", config.theta, "rotation angle")->capture_default_str();
    lemma->add_option("--lambda", lambda_text, "parameter (|lambda| < 1)")->required();
    lemma->add_option("--radius", config.radius, "circle radius in (0, 1)")->capture_default_str();
    add_format(lemma);
    add_quad(lemma);

    auto* figures = app.add_subcommand("figures", "render the eight reference figures (SVG + CSV)");
    figures->add_option("-n,--samples", config.n_samples, "uniform theta samples")->capture_default_str();
    figures->add_option("--refine", figures_refine, "relative chord tolerance for refinement (0 = off)")
        ->capture_default_str();
    figures->add_option("--alpha", alpha_text, "alpha (the region does not depend on it)")->capture_default_str();
    figures->add_option("-o,--out", out_text, "output directory")->default_str("figures");
    add_quad(figures);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidParameters;
    }

    try {
        if (boundary->parsed()) config.subcommand = Subcommand::boundary;
        if (sample->parsed()) config.subcommand = Subcommand::sample;
        if (verify->parsed()) config.subcommand = Subcommand::verify;
        if (diskbound->parsed()) config.subcommand = Subcommand::diskbound;
        if (lemma->parsed()) config.subcommand = Subcommand::lemma;
        if (figures->parsed()) {
            config.subcommand = Subcommand::figures;
            config.refine = figures_refine;
        }
        const Complex alpha = parse_complex(alpha_text);
        const Complex lambda = parse_complex(lambda_text);
        const Complex z0 = parse_complex(z0_text);
        config.params = RegionParams(z0, lambda, alpha);
        config.format = format_text == "json" ? OutputFormat::json
                        : format_text == "svg" ? OutputFormat::svg
                                               : OutputFormat::csv;
        config.output_path = out_text;
        return run(config, out, err);
    } catch (const ParameterError& e) {
        err << "invalid parameters: " << e.what() << "\n";
        return kExitInvalidParameters;
    } catch (const QuadratureError& e) {
        err << "quadrature failure: " << e.what() << " (estimate " << e.estimate_re() << "+" << e.estimate_im()
            << "i, error bound " << e.error_bound() << ")\n";
        return kExitQuadrature;
    } catch (const GeometryError& e) {
        err << "invariant violation: " << e.what() << "\n";
        return kExitInvariantViolation;
    } catch (const InconclusiveError& e) {
        err << "inconclusive: " << e.what() << "\n";
        return kExitInvariantViolation;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitInvariantViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace varregion::cli
