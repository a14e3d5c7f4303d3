// Command-line front end: stability verdicts, critical delays, boundary
// export, characteristic-root reports, verdict/oracle sweeps, and time-domain
// simulation. Scalar results are JSON; bulk curve/grid data is CSV.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ddestab/core.hpp"
#include "ddestab/delay.hpp"
#include "ddestab/oracle.hpp"
#include "ddestab/region.hpp"
#include "ddestab/simulate.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace ddestab;

constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;
constexpr double kPi = 3.14159265358979323846;

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json witness_json(const std::optional<Complex>& w) {
    if (!w) return nullptr;
    return complex_json(*w);
}

void write_output(const std::string& path, const std::string& payload) {
    if (path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << payload;
}

struct SweepCell {
    Complex eta;
    int verdict_code;
    int oracle_count;
    int agree;
};

int verdict_code(Status s) {
    switch (s) {
        case Status::Stable: return 0;
        case Status::Marginal: return 1;
        case Status::Unstable: return 2;
    }
    return 2;
}

void run_parallel_rows(std::size_t rows, const std::function<void(std::size_t)>& body) {
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), 16u);
    if (workers <= 1 || rows < 2) {
        for (std::size_t r = 0; r < rows; ++r) body(r);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t r = next.fetch_add(1); r < rows; r = next.fetch_add(1)) body(r);
        });
    for (auto& th : pool) th.join();
}

int run_cli(int argc, char** argv) {
    CLI::App app{"stability analysis of x'(t) = lambda*x(t) + gamma*x(t-tau)"};
    app.require_subcommand(1);
    app.fallthrough();  // parent options (--output) usable after a subcommand

    std::string output = "-";
    app.add_option("--output", output, "output path, or - for stdout")->capture_default_str();

    double lambda_re = 0, lambda_im = 0, gamma_re = 0, gamma_im = 0, tau = 1;
    double a = 0, eta_re = 0, eta_im = 0;
    double tol_boundary = kBoundaryTol;

    // check: verdict for a full problem (lambda, gamma, tau)
    auto* check = app.add_subcommand("check", "stability verdict for (lambda, gamma, tau)");
    check->add_option("--lambda-re", lambda_re)->required();
    check->add_option("--lambda-im", lambda_im)->capture_default_str();
    check->add_option("--gamma-re", gamma_re)->required();
    check->add_option("--gamma-im", gamma_im)->capture_default_str();
    check->add_option("--tau", tau)->required();
    check->add_option("--tol-boundary", tol_boundary)->capture_default_str();

    // max-delay: critical delay; reduced pair directly, or lambda/gamma with
    // real lambda (a rotating reduction would make eta delay-dependent)
    auto* maxdelay = app.add_subcommand("max-delay", "largest delay preserving stability");
    maxdelay->add_option("--lambda-re", lambda_re);
    maxdelay->add_option("--lambda-im", lambda_im);
    maxdelay->add_option("--gamma-re", gamma_re);
    maxdelay->add_option("--gamma-im", gamma_im);
    maxdelay->add_option("--a", a);
    maxdelay->add_option("--eta-re", eta_re);
    maxdelay->add_option("--eta-im", eta_im);

    std::size_t samples = 256;
    std::string format = "csv";
    auto* boundary = app.add_subcommand("boundary", "stability-region boundary samples");
    boundary->add_option("--a", a)->required();
    boundary->add_option("--tau", tau)->required();
    boundary->add_option("--samples", samples)->capture_default_str();
    boundary->add_option("--format", format, "csv or json")->capture_default_str();

    std::size_t root_count = 5;
    double margin = 0.5;
    auto* roots = app.add_subcommand("roots", "rightmost characteristic roots of the reduced pair");
    roots->add_option("--a", a)->required();
    roots->add_option("--eta-re", eta_re)->required();
    roots->add_option("--eta-im", eta_im)->capture_default_str();
    roots->add_option("--tau", tau)->required();
    roots->add_option("--count", root_count)->capture_default_str();
    roots->add_option("--margin", margin)->capture_default_str();

    double re_min = -3, re_max = 1, im_min = -2, im_max = 2;
    std::size_t resolution = 41;
    auto* sweep = app.add_subcommand("sweep", "verdict/oracle agreement over an eta grid");
    sweep->add_option("--a", a)->required();
    sweep->add_option("--tau", tau)->required();
    sweep->add_option("--re-min", re_min)->capture_default_str();
    sweep->add_option("--re-max", re_max)->capture_default_str();
    sweep->add_option("--im-min", im_min)->capture_default_str();
    sweep->add_option("--im-max", im_max)->capture_default_str();
    sweep->add_option("--resolution", resolution)->capture_default_str();
    sweep->add_option("--tol-boundary", tol_boundary)->capture_default_str();

    double horizon = 50.0, tail_fraction = 0.25, history_re = 1.0, history_im = 0.0;
    int steps_per_delay = 64;
    auto* simulate_cmd = app.add_subcommand("simulate", "integrate the equation by steps");
    simulate_cmd->add_option("--lambda-re", lambda_re)->required();
    simulate_cmd->add_option("--lambda-im", lambda_im)->capture_default_str();
    simulate_cmd->add_option("--gamma-re", gamma_re)->required();
    simulate_cmd->add_option("--gamma-im", gamma_im)->capture_default_str();
    simulate_cmd->add_option("--tau", tau)->required();
    simulate_cmd->add_option("--horizon", horizon)->capture_default_str();
    simulate_cmd->add_option("--steps-per-delay", steps_per_delay)->capture_default_str();
    simulate_cmd->add_option("--tail-fraction", tail_fraction)->capture_default_str();
    simulate_cmd->add_option("--history-re", history_re)->capture_default_str();
    simulate_cmd->add_option("--history-im", history_im)->capture_default_str();

    double beta = 0.0;
    auto* lemma2 = app.add_subcommand("lemma2", "classify the auxiliary ray-coverage condition");
    lemma2->add_option("--beta", beta)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) return app.exit(err);  // --help and friends
        std::cerr << json{{"error", err.what()}, {"code", kExitValidation}}.dump() << "\n";
        return kExitValidation;
    }

    if (check->parsed()) {
        const DdeProblem problem{Complex(lambda_re, lambda_im), Complex(gamma_re, gamma_im), tau};
        const ReducedProblem reduced = reduce(problem);
        const StabilityVerdict verdict =
            membership(reduced.eta, reduced.a, reduced.tau, tol_boundary);
        json out{{"status", to_string(verdict.status)},
                 {"case_tag", to_string(verdict.case_tag)},
                 {"reduced", json{{"a", reduced.a}, {"eta", complex_json(reduced.eta)}}},
                 {"witness", witness_json(verdict.witness)}};
        write_output(output, out.dump(2) + "\n");
        return 0;
    }

    if (maxdelay->parsed()) {
        double a_eff = a;
        Complex eta_eff(eta_re, eta_im);
        if (maxdelay->count("--lambda-re") || maxdelay->count("--gamma-re")) {
            if (lambda_im != 0.0)
                throw std::invalid_argument(
                    "max-delay: Im(lambda) must be 0 at problem level (the reduced eta would "
                    "rotate with tau); pass --a/--eta-re/--eta-im instead");
            a_eff = lambda_re;
            eta_eff = Complex(gamma_re, gamma_im);
        }
        const CriticalDelay cd = critical_delay(a_eff, eta_eff);
        json out{{"kind", cd.kind == DelayKind::AlwaysStable ? "AlwaysStable"
                          : cd.kind == DelayKind::NeverStable ? "NeverStable"
                                                              : "Finite"},
                 {"tau_star", cd.tau_star ? json(*cd.tau_star) : json(nullptr)},
                 {"omega", cd.crossing_omega ? json(*cd.crossing_omega) : json(nullptr)}};
        write_output(output, out.dump(2) + "\n");
        return 0;
    }

    if (boundary->parsed()) {
        const BoundaryCurve curve = boundary_curve(a, tau, samples);
        if (format == "json") {
            json rows = json::array();
            for (std::size_t i = 0; i < curve.points.size(); ++i)
                rows.push_back(json{{"w", curve.w_values[i]},
                                    {"re", curve.points[i].real()},
                                    {"im", curve.points[i].imag()},
                                    {"arg", std::arg(curve.points[i])}});
            json out{{"case", to_string(curve.region.variant)},
                     {"closed_by_disc_arc", curve.closed_by_disc_arc},
                     {"samples", rows}};
            write_output(output, out.dump(2) + "\n");
            return 0;
        }
        if (format != "csv") throw std::invalid_argument("boundary: format must be csv or json");
        std::ostringstream csv;
        csv << "w,re_eta,im_eta,arg_eta\n";
        auto row = [&](double w, Complex p) {
            if (p.imag() == 0.0) p = Complex(p.real(), 0.0);  // keep arg in (-pi, pi]
            csv << num17(w) << ',' << num17(p.real()) << ',' << num17(p.imag()) << ','
                << num17(std::arg(p)) << '\n';
        };
        for (std::size_t i = 0; i < curve.points.size(); ++i)
            row(curve.w_values[i], curve.points[i]);
        // mirrored lower arc, ending at the outer terminus
        for (std::size_t i = 0; i < curve.points.size(); ++i)
            row(curve.w_values[i], std::conj(curve.points[i]));
        if (curve.closed_by_disc_arc) {
            const double r = std::abs(a);
            for (std::size_t i = 0; i < samples; ++i) {
                const double angle =
                    -kPi + 2.0 * kPi * static_cast<double>(i) / static_cast<double>(samples - 1);
                row(r, std::polar(r, angle));
            }
        }
        write_output(output, csv.str());
        return 0;
    }

    if (roots->parsed()) {
        const RootReport report =
            rightmost_roots(a, Complex(eta_re, eta_im), tau, root_count, margin);
        json jroots = json::array();
        json jres = json::array();
        for (std::size_t i = 0; i < report.roots.size(); ++i) {
            jroots.push_back(complex_json(report.roots[i]));
            jres.push_back(report.residuals[i]);
        }
        json out{{"rhp_count", report.rhp_count},
                 {"roots", jroots},
                 {"residuals", jres},
                 {"contour_radius", report.contour_radius},
                 {"margin", report.margin}};
        write_output(output, out.dump(2) + "\n");
        return 0;
    }

    if (sweep->parsed()) {
        if (resolution < 2) throw std::invalid_argument("sweep: resolution must be >= 2");
        std::vector<SweepCell> cells(resolution * resolution);
        const auto at = [&](std::size_t iy, std::size_t ix) -> SweepCell& {
            return cells[iy * resolution + ix];
        };
        run_parallel_rows(resolution, [&](std::size_t iy) {
            const double im =
                im_min + (im_max - im_min) * static_cast<double>(iy) / (resolution - 1);
            for (std::size_t ix = 0; ix < resolution; ++ix) {
                const double re =
                    re_min + (re_max - re_min) * static_cast<double>(ix) / (resolution - 1);
                const Complex eta(re, im);
                const StabilityVerdict verdict = membership(eta, a, tau, tol_boundary);
                const int count = count_rhp_roots_retry(a, eta, tau, 0.0);
                int agree;
                if (verdict.status == Status::Marginal)
                    agree = 1;  // boundary band, excluded from agreement statistics
                else
                    agree = ((verdict.status == Status::Stable) == (count == 0)) ? 1 : 0;
                at(iy, ix) = SweepCell{eta, verdict_code(verdict.status), count, agree};
            }
        });
        std::ostringstream csv;
        csv << "re_eta,im_eta,verdict_code,oracle_count,agree_flag\n";
        for (std::size_t iy = 0; iy < resolution; ++iy)
            for (std::size_t ix = 0; ix < resolution; ++ix) {
                const SweepCell& c = at(iy, ix);
                csv << num17(c.eta.real()) << ',' << num17(c.eta.imag()) << ',' << c.verdict_code
                    << ',' << c.oracle_count << ',' << c.agree << '\n';
            }
        write_output(output, csv.str());
        return 0;
    }

    if (simulate_cmd->parsed()) {
        const DdeProblem problem{Complex(lambda_re, lambda_im), Complex(gamma_re, gamma_im), tau};
        const Complex h0(history_re, history_im);
        const Trajectory traj =
            integrate(problem, [h0](double) { return h0; }, horizon, steps_per_delay);
        std::ostringstream csv;
        csv << "t,re_x,im_x,abs_x\n";
        for (std::size_t i = 0; i < traj.times.size(); ++i)
            csv << num17(traj.times[i]) << ',' << num17(traj.values[i].real()) << ','
                << num17(traj.values[i].imag()) << ',' << num17(std::abs(traj.values[i])) << '\n';
        json summary;
        try {
            summary["decay_rate"] = decay_rate(traj, tail_fraction);
        } catch (const InsufficientData&) {
            summary["decay_rate"] = nullptr;
        }
        summary["overflow"] = traj.overflow;
        if (output == "-") {
            std::cout << csv.str() << "\n" << summary.dump(2) << "\n";
        } else {
            write_output(output, csv.str());
            std::cout << summary.dump(2) << "\n";
        }
        return 0;
    }

    if (lemma2->parsed()) {
        const RayCoverage rc = classify_ray_coverage(beta);
        json out{{"beta", rc.beta},
                 {"kind", rc.kind == RayCoverageKind::FullRay ? "FullRay"
                          : rc.kind == RayCoverageKind::TailRay ? "TailRay"
                                                                : "Empty"},
                 {"r0", rc.r0 ? json(*rc.r0) : json(nullptr)}};
        write_output(output, out.dump(2) + "\n");
        return 0;
    }

    return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const std::invalid_argument& err) {
        std::cerr << json{{"error", err.what()}, {"code", kExitValidation}}.dump() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& err) {
        std::cerr << json{{"error", err.what()}, {"code", kExitValidation}}.dump() << "\n";
        return kExitValidation;
    } catch (const std::exception& err) {
        std::cerr << json{{"error", err.what()}, {"code", kExitNumeric}}.dump() << "\n";
        return kExitNumeric;
    }
}
