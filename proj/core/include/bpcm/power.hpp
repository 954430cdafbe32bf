#pragma once

#include "bpcm/process.hpp"

namespace bpcm {

/// Path-loss communication budget: a sensor at distance c from its cluster
/// head needs power tau * c^alpha. All power figures below are expectations
/// per unit area.
struct PowerParams {
    double tau = 1.0;    // SNR threshold (linear)
    double alpha = 2.0;  // path-loss exponent (alpha = 2 admitted)

    void validate() const;
};

/// Per-unit-area power for an MCP deployment:
///   m lambda_p tau r_d^alpha / (alpha/2 + 1).
double power_mcp(double m, double lambda_p, double tau, double alpha, double r_d);

/// Per-unit-area power for a TCP deployment:
///   m lambda_p tau Gamma(alpha/2 + 1) (2 sigma^2)^(alpha/2).
double power_tcp(double m, double lambda_p, double tau, double alpha, double sigma);

/// Per-unit-area power for a PPP deployment with nearest-head association
/// (head distance is Rayleigh with rate pi lambda_p):
///   m lambda_p (pi lambda_p)^(-alpha/2) tau Gamma(alpha/2 + 1).
double power_ppp(double m, double lambda_p, double tau, double alpha);

/// Exact inverses: the spread (or mean cluster size) that spends exactly
/// e_net per unit area.
double solve_r_d(double e_net, double m, double lambda_p, double tau, double alpha);
double solve_sigma(double e_net, double m, double lambda_p, double tau, double alpha);
double solve_m(double e_net, double lambda_p, double tau, double alpha);

/// Dispatch on the model kind.
double power_for(const BooleanModelSpec& model, const PowerParams& p);

}  // namespace bpcm
