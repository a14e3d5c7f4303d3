#pragma once

#include <complex>
#include <optional>
#include <stdexcept>

namespace ddestab {

using Complex = std::complex<double>;

bool is_finite(Complex z);

/// The delay equation x'(t) = lambda*x(t) + gamma*x(t-tau) with complex
/// coefficients and a strictly positive delay.
struct DdeProblem {
    Complex lambda;
    Complex gamma;
    double tau;

    DdeProblem(Complex lambda_, Complex gamma_, double tau_);
};

/// Rotated form of a DdeProblem: z'(t) = a*z(t) + eta*z(t-tau) with a real.
/// Root real parts coincide with those of the source problem; b = Im(lambda)
/// is kept so roots can be shifted back (s = z + i*b).
struct ReducedProblem {
    double a;
    Complex eta;
    double tau;
    double b;
};

enum class Status { Stable, Marginal, Unstable };

/// Which rule produced the verdict. DiscInterior and RegionInterior are used
/// for Stable verdicts; RegionInterior also tags Unstable verdicts decided by
/// the region inequality. Boundary tags Marginal, NecessaryFail tags
/// Re(eta)+a > 0, SupercriticalA tags a > 1/tau.
enum class CaseTag { DiscInterior, RegionInterior, Boundary, NecessaryFail, SupercriticalA };

struct StabilityVerdict {
    Status status;
    CaseTag case_tag;
    /// Marginal: i*omega with the crossing frequency omega.
    /// NecessaryFail: the offending eta. Otherwise empty.
    std::optional<Complex> witness;
};

enum class RegionKind { NegA, ZeroA, PosA, Supercritical };

struct RegionCase {
    RegionKind variant;
    double a;
    double tau;
};

/// NegA for a<0, ZeroA for a=0, PosA for 0<a<=1/tau, Supercritical beyond.
RegionCase classify_region_case(double a, double tau);

const char* to_string(Status s);
const char* to_string(CaseTag t);
const char* to_string(RegionKind k);

}  // namespace ddestab
