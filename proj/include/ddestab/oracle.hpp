#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ddestab/types.hpp"

namespace ddestab {

/// A characteristic root passed too close to the counting contour; retry with
/// a slightly perturbed margin.
class ContourGrazing : public std::runtime_error {
  public:
    explicit ContourGrazing(const std::string& what) : std::runtime_error(what) {}
};

/// Number of characteristic roots with Re s > -margin, computed as the
/// winding number of s - mu - eta*e^{-s*tau} along a half-disc contour
/// (vertical segment at Re s = -margin plus arc of radius
/// |mu|+|eta|+1+margin). Throws ContourGrazing when min |f| on the contour
/// drops below 1e-8.
int count_rhp_roots(Complex mu, Complex eta, double tau, double margin = 0.0);
int count_rhp_roots(double a, Complex eta, double tau, double margin = 0.0);

/// count_rhp_roots with automatic +-1e-6 margin perturbation on grazing.
int count_rhp_roots_retry(double a, Complex eta, double tau, double margin = 0.0);
int count_rhp_roots_retry(Complex mu, Complex eta, double tau, double margin = 0.0);

struct RootReport {
    int rhp_count;                 // winding-number count at margin 0
    std::vector<Complex> roots;    // refined roots with Re >= -margin, Re descending
    std::vector<double> residuals; // |f(root)| per root
    double contour_radius;         // radius of the search half-disc
    double margin;                 // search margin (left edge at -margin)
};

/// Up to k roots with the largest real parts: Newton iteration seeded on a
/// grid over the search half-disc plus the tau->0 limit root mu+eta and the
/// axis-crossing candidates +-i*omega. Roots are deduplicated at 1e-6 and
/// sorted by descending real part.
RootReport rightmost_roots(Complex mu, Complex eta, double tau, std::size_t k,
                           double margin = 0.5);
RootReport rightmost_roots(double a, Complex eta, double tau, std::size_t k,
                           double margin = 0.5);

}  // namespace ddestab
