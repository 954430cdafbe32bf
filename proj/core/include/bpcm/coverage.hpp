#pragma once

#include "bpcm/process.hpp"
#include "bpcm/quadrature.hpp"

namespace bpcm {

/// A coverage question: does the deployment's covered region meet the disk
/// event B(o, r_K)? Every capacity functional below depends on R and r_K
/// only through the effective radius r = R + r_K, because dilating a disk
/// grain of radius R by a disk event of radius r_K gives a disk of radius
/// R + r_K.
struct CoverageQuery {
    BooleanModelSpec model;
    double r_K = 0.0;
    QuadratureSettings quadrature{};

    double effective_radius() const { return model.R + r_K; }
    void validate() const;
};

struct BoundPair {
    double lower = 0.0;
    double upper = 0.0;
};

/// Capacity functional of the Boolean model over a PPP of total density
/// lambda_total: 1 - exp(-lambda_total * pi * (R + r_K)^2). With r_K = 0
/// this is the point-coverage probability.
double cap_ppp(double lambda_total, double R, double r_K = 0.0);

/// Capacity functional of the Boolean MCP model for a disk event,
///
///   1 - exp(-2 pi lambda_p \int_0^{r_d + r}
///             (1 - exp(-lambda_d |B(o,r_d) n B((x,0),r)|)) x dx),
///
/// with r = R + r_K and lambda_d = m / (pi r_d^2), evaluated by adaptive
/// quadrature with the exact two-disk intersection area.
double cap_mcp(const CoverageQuery& q);

/// Tight bounds: the integrand's intersection area is replaced by its
/// inscribed-circle lower bound and bounding-rectangle upper bound and the
/// same radial integral is evaluated numerically.
BoundPair cap_mcp_bounds_tight(const CoverageQuery& q);

/// Simple closed-form bounds, from bounding the intersection area by
/// pi*min(r, r_d)^2 (upper) and by its containment-range value (lower):
///   upper = 1 - exp(-pi lambda_p (r_d + r)^2 (1 - exp(-lambda_d pi beta^2))),
///   lower = 1 - exp(-pi lambda_p (r_d - r)^2 (1 - exp(-lambda_d pi beta^2))),
/// with beta = min(r, r_d). Looser than the tight pair everywhere.
BoundPair cap_mcp_bounds_simple(const CoverageQuery& q);

/// Limits of cap_mcp in the cluster radius at fixed total density: as
/// r_d -> 0 clusters collapse to multi-sensor points and the model behaves
/// like a PPP of intensity lambda_p (1 - e^-m); as r_d -> inf daughters
/// decorrelate and it behaves like a PPP of intensity m lambda_p.
enum class McpLimit { cluster_radius_to_zero, cluster_radius_to_infinity };
double cap_mcp_limit(const CoverageQuery& q, McpLimit which);

/// Capacity functional of the Boolean TCP model for a disk event,
///
///   1 - exp(-2 pi lambda_p \int_0^inf (1 - exp(-m G(x, r, sigma))) x dx),
///
/// where G is the Gaussian disk mass; the outer integral is truncated by the
/// semi-infinite tail rule with decay scale sigma.
double cap_tcp(const CoverageQuery& q);

/// Dispatch on the model kind.
double capacity(const CoverageQuery& q);

namespace detail {

/// cap_mcp_bounds_simple with the disk-area factor (pi) explicit. A fault
/// injection point for validation tooling: passing 1.0 reproduces a known
/// dimensional error and must break the bound-nesting checks.
BoundPair cap_mcp_bounds_simple_impl(const CoverageQuery& q, double disk_area_factor);

/// Printed closed forms for the tight bounds, kept verbatim for diagnostic
/// comparison. They do not agree with the numerically integrated bounds and
/// must never be used as ground truth.
BoundPair cap_mcp_bounds_tight_closed_form(const CoverageQuery& q);

}  // namespace detail

}  // namespace bpcm
