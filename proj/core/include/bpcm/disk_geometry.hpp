#pragma once

#include "bpcm/quadrature.hpp"

namespace bpcm {

/// Exact intersection area of two disks of radii r1, r2 whose centers are a
/// distance d apart. Symmetric in (r1, r2); pi*min(r1,r2)^2 when one disk
/// contains the other, 0 when they are disjoint.
double lens_area(double d, double r1, double r2);

/// Area of the largest circle inscribed in the intersection (radius
/// (r1+r2-d)/2), with the exact pi*min^2 on the containment range. A lower
/// bound on lens_area everywhere.
double lens_area_lower_circle(double d, double r1, double r2);

/// Area of the bounding rectangle of the intersection (width r1+r2-d,
/// height 2*min(r1,r2)), capped at the smaller disk's area. An upper bound
/// on lens_area everywhere.
double lens_area_upper_rect(double d, double r1, double r2);

/// Mass of the isotropic Gaussian N(0, sigma^2 I2) over a disk of radius r
/// centered a distance x from the mean:
///
///   (1 / 2 pi sigma^2) \int_{B((x,0),r)} exp(-|u|^2 / 2 sigma^2) du
///
/// evaluated as the radial single integral
///   \int_0^r (t/sigma^2) exp(-(x-t)^2 / 2 sigma^2) i0_scaled(x t / sigma^2) dt,
/// which is overflow-safe for any argument sizes. Result is in [0, 1],
/// decreasing in x and increasing in r; invariant under a common rescaling
/// of (x, r, sigma).
double gaussian_disk_mass(double x, double r, double sigma, const QuadratureSettings& q = {});

}  // namespace bpcm
