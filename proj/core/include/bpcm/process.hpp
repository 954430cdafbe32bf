#pragma once

namespace bpcm {

enum class ProcessKind { ppp, mcp, tcp };

/// Point-process description for sensor locations.
///
/// MCP: parents are a homogeneous PPP of density lambda_p; each parent
/// scatters Poisson(m) daughters uniformly on the disk of radius r_d
/// around it. TCP: same, but daughters are isotropic Gaussian with per-axis
/// std-dev sigma. PPP: sensors are a plain PPP of density lambda_p * m;
/// lambda_p is kept as the density of an independent cluster-head process
/// used for power accounting.
struct ProcessSpec {
    ProcessKind kind = ProcessKind::ppp;
    double lambda_p = 0.0;  // parent density per m^2
    double m = 0.0;         // mean daughters per cluster
    double r_d = 0.0;       // cluster disk radius, m (MCP)
    double sigma = 0.0;     // scatter std-dev, m (TCP)

    double total_density() const { return lambda_p * m; }

    /// Daughter intensity m / (pi r_d^2) on the cluster disk (MCP only).
    double daughter_intensity() const;

    /// Distance beyond a parent that effectively contains its daughters:
    /// exactly r_d for MCP, 6 sigma for TCP (mass beyond is < 1e-8), 0 for
    /// PPP. Used to size dilation margins.
    double spread() const;

    void validate() const;
};

/// Rectangular observation window [0, width] x [0, height].
struct Window {
    double width = 0.0;
    double height = 0.0;

    double area() const { return width * height; }
    void validate() const;
};

/// A deployment: a point process of germs, each carrying a sensing disk of
/// radius R.
struct BooleanModelSpec {
    ProcessSpec process;
    double R = 0.0;  // sensing radius, m

    void validate() const;
};

}  // namespace bpcm
