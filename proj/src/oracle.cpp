#include "ddestab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace ddestab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGrazeAbs = 1e-8;
constexpr int kMaxWalkDepth = 60;

struct CharFn {
    Complex mu;
    Complex eta;
    double tau;

    Complex operator()(Complex s) const { return s - mu - eta * std::exp(-s * tau); }
    Complex derivative(Complex s) const { return 1.0 + tau * eta * std::exp(-s * tau); }
};

using Path = std::function<Complex(double)>;

struct ArgWalk {
    const CharFn& f;
    const Path& path;
    double total = 0.0;

    Complex probe(double t) const {
        const Complex v = f(path(t));
        if (std::abs(v) < kGrazeAbs)
            throw ContourGrazing("characteristic root within 1e-8 of the counting contour");
        return v;
    }

    // Accumulate the continuous argument increment between parameters t0 and
    // t1. A step is accepted only when both half-steps stay below pi/2, which
    // pins the branch of the increment.
    void advance(double t0, Complex f0, double t1, Complex f1, int depth) {
        const Complex fm = probe(0.5 * (t0 + t1));
        const double d1 = std::arg(fm / f0);
        const double d2 = std::arg(f1 / fm);
        if (std::abs(d1) < kPi / 2.0 && std::abs(d2) < kPi / 2.0) {
            total += d1 + d2;
            return;
        }
        if (depth >= kMaxWalkDepth)
            throw ContourGrazing("contour subdivision exhausted (root on or near contour)");
        advance(t0, f0, 0.5 * (t0 + t1), fm, depth + 1);
        advance(0.5 * (t0 + t1), fm, t1, f1, depth + 1);
    }

    void walk(double t0, double t1, int initial_cells) {
        double tprev = t0;
        Complex fprev = probe(t0);
        for (int i = 1; i <= initial_cells; ++i) {
            const double t = t0 + (t1 - t0) * static_cast<double>(i) / initial_cells;
            const Complex ft = probe(t);
            advance(tprev, fprev, t, ft, 0);
            tprev = t;
            fprev = ft;
        }
    }
};

double piece_argument_increment(const CharFn& f, const Path& path, int cells) {
    ArgWalk walk{f, path};
    walk.walk(0.0, 1.0, cells);
    return walk.total;
}

}  // namespace

int count_rhp_roots(Complex mu, Complex eta, double tau, double margin) {
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw std::invalid_argument("count_rhp_roots: tau must be finite and > 0");
    if (!is_finite(mu) || !is_finite(eta) || !std::isfinite(margin))
        throw std::invalid_argument("count_rhp_roots: inputs must be finite");

    // Every root with Re s >= -margin satisfies |s| <= |mu| + |eta|e^{margin*tau},
    // so for margin <= 0 the half-disc below is guaranteed to contain them all.
    const double radius = std::abs(mu) + std::abs(eta) + 1.0 + std::abs(margin);
    const Complex center(-margin, 0.0);

    const CharFn f{mu, eta, tau};

    // counterclockwise: arc from -i*R to +i*R through +R, then the vertical
    // segment back down
    const int cells = std::max(64, static_cast<int>(std::ceil(8.0 * radius * tau / kPi)));
    const Path arc = [&](double t) { return center + std::polar(radius, -kPi / 2.0 + kPi * t); };
    const Path segment = [&](double t) { return Complex(-margin, radius * (1.0 - 2.0 * t)); };
    const double total =
        piece_argument_increment(f, arc, cells) + piece_argument_increment(f, segment, cells);

    const double winding = total / (2.0 * kPi);
    const double nearest = std::round(winding);
    if (std::abs(winding - nearest) > 1e-3)
        throw std::runtime_error("count_rhp_roots: winding number did not converge to an integer");
    if (nearest < -0.5)
        throw std::runtime_error("count_rhp_roots: negative winding number");
    return static_cast<int>(nearest);
}

int count_rhp_roots(double a, Complex eta, double tau, double margin) {
    return count_rhp_roots(Complex(a, 0.0), eta, tau, margin);
}

int count_rhp_roots_retry(Complex mu, Complex eta, double tau, double margin) {
    const double bumps[] = {0.0, 1e-6, -1e-6, 3e-6, -3e-6};
    for (double bump : bumps) {
        try {
            return count_rhp_roots(mu, eta, tau, margin + bump);
        } catch (const ContourGrazing&) {
            // try the next perturbed margin
        }
    }
    throw ContourGrazing("count_rhp_roots_retry: all perturbed margins graze a root");
}

int count_rhp_roots_retry(double a, Complex eta, double tau, double margin) {
    return count_rhp_roots_retry(Complex(a, 0.0), eta, tau, margin);
}

namespace {

std::optional<Complex> newton_root(const CharFn& f, Complex s) {
    for (int i = 0; i < 60; ++i) {
        if (!is_finite(s)) return std::nullopt;
        if (-s.real() * f.tau > 700.0) return std::nullopt;  // exp overflow, far left
        const Complex value = f(s);
        if (std::abs(value) < 1e-12 * (1.0 + std::abs(s))) return s;
        const Complex slope = f.derivative(s);
        if (std::abs(slope) < 1e-300) return std::nullopt;
        Complex step = value / slope;
        const double len = std::abs(step);
        if (len > 10.0) step *= 10.0 / len;  // keep the iterate in the search basin
        s -= step;
    }
    return std::nullopt;
}

std::vector<Complex> search_window_roots(const CharFn& f, double margin, double radius,
                                         std::size_t k) {
    std::vector<Complex> seeds;
    seeds.push_back(f.mu + f.eta);  // tau -> 0 limit root
    const double aa = std::abs(f.mu.real());
    const double m = std::abs(f.eta);
    if (f.mu.imag() == 0.0 && m >= aa) {
        const double omega = std::sqrt((m - aa) * (m + aa));
        seeds.emplace_back(0.0, omega);
        seeds.emplace_back(0.0, -omega);
    }
    // grid over the search half-disc, vertical density tied to the ~2*pi/tau
    // spacing of the root chains
    const int nx = 7;
    const int half_rows = std::min(
        1000, std::max(4, static_cast<int>(std::ceil(radius * f.tau / kPi)) + 2));
    for (int ix = 0; ix < nx; ++ix) {
        const double x = -margin + radius * static_cast<double>(ix) / nx;
        for (int iy = -half_rows; iy <= half_rows; ++iy)
            seeds.emplace_back(x, radius * static_cast<double>(iy) / half_rows);
    }

    std::vector<Complex> found;
    for (const Complex& seed : seeds) {
        const auto root = newton_root(f, seed);
        if (!root) continue;
        if (root->real() < -margin - 1e-9) continue;
        if (std::abs(f(*root)) > 1e-9 * (1.0 + std::abs(*root))) continue;
        found.push_back(*root);
    }

    std::sort(found.begin(), found.end(), [](Complex lhs, Complex rhs) {
        if (lhs.real() != rhs.real()) return lhs.real() > rhs.real();
        return lhs.imag() > rhs.imag();
    });
    std::vector<Complex> unique;
    for (const Complex& root : found) {
        bool dup = false;
        for (const Complex& kept : unique)
            if (std::abs(root - kept) <= 1e-6) {
                dup = true;
                break;
            }
        if (!dup) unique.push_back(root);
    }
    if (unique.size() > k) unique.resize(k);
    return unique;
}

}  // namespace

RootReport rightmost_roots(Complex mu, Complex eta, double tau, std::size_t k, double margin) {
    if (k < 1) throw std::invalid_argument("rightmost_roots: k must be >= 1");
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw std::invalid_argument("rightmost_roots: tau must be finite and > 0");

    const CharFn f{mu, eta, tau};

    // widen the window until a root is captured; the rightmost root can sit
    // far left of the default margin (eta = 0 leaves only s = mu)
    const double cap = 16.0 * (std::abs(mu) + std::abs(eta) + 1.0 + std::abs(margin));
    double used_margin = margin;
    double radius = 0.0;
    std::vector<Complex> roots;
    while (true) {
        radius = std::abs(mu) + std::abs(eta) + 1.0 + std::abs(used_margin);
        roots = search_window_roots(f, used_margin, radius, k);
        if (!roots.empty() || used_margin > cap) break;
        used_margin = 2.0 * used_margin + 1.0;
    }

    RootReport report;
    report.rhp_count = count_rhp_roots_retry(mu, eta, tau, 0.0);
    report.roots = roots;
    report.residuals.reserve(roots.size());
    for (const Complex& root : roots) report.residuals.push_back(std::abs(f(root)));
    report.contour_radius = radius;
    report.margin = used_margin;
    return report;
}

RootReport rightmost_roots(double a, Complex eta, double tau, std::size_t k, double margin) {
    return rightmost_roots(Complex(a, 0.0), eta, tau, k, margin);
}

}  // namespace ddestab
