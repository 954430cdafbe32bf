#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace bpcm {

/// Tolerances and budgets shared by every numeric integral in the library.
struct QuadratureSettings {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
    /// Relative contribution below which a semi-infinite tail is truncated.
    double tail_cutoff = 1e-10;

    void validate() const;
};

/// Raised when an integral cannot reach the requested tolerance within its
/// budget. Carries the best estimate and the bound on its error so callers
/// can still report partial results.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double estimate, double error_bound)
        : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

/// Integral of f over [a, b] with |result - true| <= max(abs_tol,
/// rel_tol*|result|) for smooth f. Globally adaptive Gauss-Kronrod 7/15:
/// the panel with the largest error estimate is bisected until the summed
/// estimate meets tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSettings& q = {});

/// Integral of a nonnegative, eventually decreasing f over [a, inf).
/// Panels of width `scale` are appended until the last one contributes less
/// than tail_cutoff of the running total; `min_extent` forces the first
/// segment to reach a + min_extent before tail tests begin (useful when the
/// integrand has a plateau before its decay sets in). Fails with
/// convergence_error if the tail has not been found 64 panels past the
/// minimum extent.
double integrate_semi_infinite(const std::function<double(double)>& f, double a, double scale,
                               const QuadratureSettings& q = {}, double min_extent = 0.0);

}  // namespace bpcm
