#include "bpcm/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bpcm/disk_geometry.hpp"

namespace bpcm {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

void require_kind(const CoverageQuery& q, ProcessKind kind, const char* who) {
    if (q.model.process.kind != kind) {
        throw std::domain_error(std::string(who) + ": wrong process kind for this operation");
    }
}

// Radial integral of (1 - exp(-lambda_d * area(x, r_d, r))) * x over
// [0, r_d + r], pre-split at the containment boundary |r - r_d| where the
// area has a kink.
template <class AreaFn>
double mcp_radial_integral(double r_d, double r, double lambda_d, const QuadratureSettings& qs,
                           AreaFn&& area) {
    auto integrand = [&](double x) { return (1.0 - std::exp(-lambda_d * area(x, r_d, r))) * x; };
    const double knee = std::abs(r - r_d);
    const double outer = r + r_d;
    double integral = 0.0;
    if (knee > 0.0) integral += integrate_adaptive(integrand, 0.0, knee, qs);
    integral += integrate_adaptive(integrand, knee, outer, qs);
    return integral;
}

}  // namespace

void CoverageQuery::validate() const {
    model.validate();
    if (!(r_K >= 0.0)) throw std::domain_error("CoverageQuery: r_K must be >= 0");
    quadrature.validate();
}

double cap_ppp(double lambda_total, double R, double r_K) {
    if (lambda_total < 0.0) throw std::domain_error("cap_ppp: lambda_total must be >= 0");
    if (!(R > 0.0) || r_K < 0.0) throw std::domain_error("cap_ppp: requires R > 0 and r_K >= 0");
    const double r = R + r_K;
    return -std::expm1(-lambda_total * kPi * r * r);
}

double cap_mcp(const CoverageQuery& q) {
    q.validate();
    require_kind(q, ProcessKind::mcp, "cap_mcp");
    const ProcessSpec& p = q.model.process;
    if (p.lambda_p == 0.0 || p.m == 0.0) return 0.0;
    const double r = q.effective_radius();
    const double integral =
        mcp_radial_integral(p.r_d, r, p.daughter_intensity(), q.quadrature,
                            [](double x, double r_d, double rr) { return lens_area(x, r_d, rr); });
    return clamp_probability(-std::expm1(-2.0 * kPi * p.lambda_p * integral));
}

BoundPair cap_mcp_bounds_tight(const CoverageQuery& q) {
    q.validate();
    require_kind(q, ProcessKind::mcp, "cap_mcp_bounds_tight");
    const ProcessSpec& p = q.model.process;
    if (p.lambda_p == 0.0 || p.m == 0.0) return {0.0, 0.0};
    const double r = q.effective_radius();
    const double lambda_d = p.daughter_intensity();
    const double lower_integral =
        mcp_radial_integral(p.r_d, r, lambda_d, q.quadrature, [](double x, double r_d, double rr) {
            return lens_area_lower_circle(x, r_d, rr);
        });
    const double upper_integral =
        mcp_radial_integral(p.r_d, r, lambda_d, q.quadrature, [](double x, double r_d, double rr) {
            return lens_area_upper_rect(x, r_d, rr);
        });
    return {clamp_probability(-std::expm1(-2.0 * kPi * p.lambda_p * lower_integral)),
            clamp_probability(-std::expm1(-2.0 * kPi * p.lambda_p * upper_integral))};
}

BoundPair cap_mcp_bounds_simple(const CoverageQuery& q) {
    return detail::cap_mcp_bounds_simple_impl(q, kPi);
}

double cap_mcp_limit(const CoverageQuery& q, McpLimit which) {
    q.model.process.validate();
    if (!(q.model.R > 0.0) || q.r_K < 0.0) {
        throw std::domain_error("cap_mcp_limit: requires R > 0 and r_K >= 0");
    }
    const ProcessSpec& p = q.model.process;
    const double r = q.effective_radius();
    const double disk = kPi * p.lambda_p * r * r;
    switch (which) {
        case McpLimit::cluster_radius_to_zero:
            return clamp_probability(-std::expm1(-disk * (-std::expm1(-p.m))));
        case McpLimit::cluster_radius_to_infinity:
            return clamp_probability(-std::expm1(-p.m * disk));
    }
    throw std::domain_error("cap_mcp_limit: unknown limit");
}

double cap_tcp(const CoverageQuery& q) {
    q.validate();
    require_kind(q, ProcessKind::tcp, "cap_tcp");
    const ProcessSpec& p = q.model.process;
    if (p.lambda_p == 0.0 || p.m == 0.0) return 0.0;
    const double r = q.effective_radius();
    auto integrand = [&](double x) {
        return -std::expm1(-p.m * gaussian_disk_mass(x, r, p.sigma, q.quadrature)) * x;
    };
    const double integral =
        integrate_semi_infinite(integrand, 0.0, p.sigma, q.quadrature, r + 6.0 * p.sigma);
    return clamp_probability(-std::expm1(-2.0 * kPi * p.lambda_p * integral));
}

double capacity(const CoverageQuery& q) {
    switch (q.model.process.kind) {
        case ProcessKind::ppp:
            return cap_ppp(q.model.process.total_density(), q.model.R, q.r_K);
        case ProcessKind::mcp:
            return cap_mcp(q);
        case ProcessKind::tcp:
            return cap_tcp(q);
    }
    throw std::domain_error("capacity: unknown process kind");
}

namespace detail {

BoundPair cap_mcp_bounds_simple_impl(const CoverageQuery& q, double disk_area_factor) {
    q.validate();
    require_kind(q, ProcessKind::mcp, "cap_mcp_bounds_simple");
    const ProcessSpec& p = q.model.process;
    if (p.lambda_p == 0.0 || p.m == 0.0) return {0.0, 0.0};
    const double r = q.effective_radius();
    const double beta = std::min(r, p.r_d);
    const double one_cluster = -std::expm1(-p.daughter_intensity() * disk_area_factor * beta * beta);
    const double diff = p.r_d - r;
    return {clamp_probability(-std::expm1(-kPi * p.lambda_p * diff * diff * one_cluster)),
            clamp_probability(-std::expm1(-kPi * p.lambda_p * (p.r_d + r) * (p.r_d + r) * one_cluster))};
}

BoundPair cap_mcp_bounds_tight_closed_form(const CoverageQuery& q) {
    q.validate();
    require_kind(q, ProcessKind::mcp, "cap_mcp_bounds_tight_closed_form");
    const ProcessSpec& p = q.model.process;
    const double r = q.effective_radius();
    const double r_d = p.r_d;
    const double lambda_p = p.lambda_p;
    const double lambda_d = p.daughter_intensity();
    const double beta = std::min(r, r_d);
    const double beta2 = beta * beta;
    // Shared prefactor A(r, r_d, lambda_d); the source the upper bound was
    // transcribed from leaves its arguments blank, so the lower bound's A is
    // used for both.
    const double a_term =
        (r - r_d) * (r - r_d) * (-std::expm1(-lambda_d * kPi * beta2)) + 4.0 * r * r_d;

    const double e4 = std::exp(-4.0 * lambda_d * beta2);
    const double upper =
        1.0 - std::exp(-kPi * lambda_p * a_term) *
                  std::exp((kPi * lambda_p / (2.0 * lambda_d * lambda_d * beta2)) *
                           (-1.0 + 2.0 * lambda_d * beta + e4 * ((r + r_d) + std::abs(r - r_d) * e4)));
    const double lower =
        1.0 - std::exp(-kPi * lambda_p * a_term) *
                  std::exp((4.0 * lambda_p / lambda_d) *
                           (-2.0 + 2.0 * std::exp(-lambda_d * kPi * beta2) -
                            kPi * std::sqrt(lambda_d) * (r + r_d) *
                                std::erf(-std::sqrt(lambda_d * kPi) * beta)));
    return {lower, upper};
}

}  // namespace detail

}  // namespace bpcm
