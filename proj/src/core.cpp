#include "ddestab/core.hpp"

#include <cmath>

namespace ddestab {

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

DdeProblem::DdeProblem(Complex lambda_, Complex gamma_, double tau_)
    : lambda(lambda_), gamma(gamma_), tau(tau_) {
    if (!is_finite(lambda) || !is_finite(gamma) || !std::isfinite(tau))
        throw std::invalid_argument("DdeProblem: coefficients must be finite");
    if (!(tau > 0.0))
        throw std::invalid_argument("DdeProblem: tau must be > 0");
}

RegionCase classify_region_case(double a, double tau) {
    if (!(tau > 0.0))
        throw std::invalid_argument("classify_region_case: tau must be > 0");
    RegionKind kind;
    if (a < 0.0)
        kind = RegionKind::NegA;
    else if (a == 0.0)
        kind = RegionKind::ZeroA;
    else if (a * tau <= 1.0)
        kind = RegionKind::PosA;
    else
        kind = RegionKind::Supercritical;
    return RegionCase{kind, a, tau};
}

ReducedProblem reduce(const DdeProblem& problem) {
    const double a = problem.lambda.real();
    const double b = problem.lambda.imag();
    const Complex eta = problem.gamma * std::polar(1.0, -b * problem.tau);
    return ReducedProblem{a, eta, problem.tau, b};
}

std::optional<double> crossing_frequency(double a, double eta_mod) {
    if (eta_mod < 0.0 || !std::isfinite(eta_mod))
        throw std::invalid_argument("crossing_frequency: eta_mod must be finite and >= 0");
    const double aa = std::abs(a);
    if (eta_mod < aa) return std::nullopt;
    return std::sqrt((eta_mod - aa) * (eta_mod + aa));
}

Complex characteristic_value(Complex s, double a, Complex eta, double tau) {
    return s - a - eta * std::exp(-s * tau);
}

Complex characteristic_value(Complex s, Complex lambda, Complex gamma, double tau) {
    return s - lambda - gamma * std::exp(-s * tau);
}

const char* to_string(Status s) {
    switch (s) {
        case Status::Stable: return "Stable";
        case Status::Marginal: return "Marginal";
        case Status::Unstable: return "Unstable";
    }
    return "?";
}

const char* to_string(CaseTag t) {
    switch (t) {
        case CaseTag::DiscInterior: return "DiscInterior";
        case CaseTag::RegionInterior: return "RegionInterior";
        case CaseTag::Boundary: return "Boundary";
        case CaseTag::NecessaryFail: return "NecessaryFail";
        case CaseTag::SupercriticalA: return "SupercriticalA";
    }
    return "?";
}

const char* to_string(RegionKind k) {
    switch (k) {
        case RegionKind::NegA: return "NegA";
        case RegionKind::ZeroA: return "ZeroA";
        case RegionKind::PosA: return "PosA";
        case RegionKind::Supercritical: return "Supercritical";
    }
    return "?";
}

}  // namespace ddestab
