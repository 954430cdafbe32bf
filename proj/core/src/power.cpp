#include "bpcm/power.hpp"

#include <cmath>
#include <stdexcept>

namespace bpcm {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_common(double m, double lambda_p, double tau, double alpha) {
    if (m < 0.0 || lambda_p < 0.0 || tau < 0.0) {
        throw std::domain_error("power: m, lambda_p, tau must be >= 0");
    }
    if (!(alpha > 0.0)) throw std::domain_error("power: alpha must be > 0");
}

void check_solver(double e_net, double m, double lambda_p, double tau, double alpha) {
    if (!(e_net >= 0.0)) throw std::domain_error("solver: e_net must be >= 0");
    if (!(m > 0.0) || !(lambda_p > 0.0) || !(tau > 0.0) || !(alpha > 0.0)) {
        throw std::domain_error("solver: m, lambda_p, tau, alpha must be > 0");
    }
}

}  // namespace

void PowerParams::validate() const {
    if (!(tau > 0.0)) throw std::domain_error("PowerParams: tau must be > 0");
    if (!(alpha > 0.0)) throw std::domain_error("PowerParams: alpha must be > 0");
}

double power_mcp(double m, double lambda_p, double tau, double alpha, double r_d) {
    check_common(m, lambda_p, tau, alpha);
    if (r_d < 0.0) throw std::domain_error("power_mcp: r_d must be >= 0");
    return m * lambda_p * tau * std::pow(r_d, alpha) / (0.5 * alpha + 1.0);
}

double power_tcp(double m, double lambda_p, double tau, double alpha, double sigma) {
    check_common(m, lambda_p, tau, alpha);
    if (sigma < 0.0) throw std::domain_error("power_tcp: sigma must be >= 0");
    return m * lambda_p * tau * std::tgamma(0.5 * alpha + 1.0) * std::pow(2.0 * sigma * sigma, 0.5 * alpha);
}

double power_ppp(double m, double lambda_p, double tau, double alpha) {
    check_common(m, lambda_p, tau, alpha);
    if (lambda_p == 0.0) {
        throw std::domain_error("power_ppp: lambda_p must be > 0 (head distances are undefined)");
    }
    return m * lambda_p * std::pow(kPi * lambda_p, -0.5 * alpha) * tau * std::tgamma(0.5 * alpha + 1.0);
}

double solve_r_d(double e_net, double m, double lambda_p, double tau, double alpha) {
    check_solver(e_net, m, lambda_p, tau, alpha);
    return std::pow(e_net * (1.0 + 0.5 * alpha) / (m * lambda_p * tau), 1.0 / alpha);
}

double solve_sigma(double e_net, double m, double lambda_p, double tau, double alpha) {
    check_solver(e_net, m, lambda_p, tau, alpha);
    const double denom = m * lambda_p * tau * std::tgamma(1.0 + 0.5 * alpha) * std::pow(2.0, 0.5 * alpha);
    return std::pow(e_net / denom, 1.0 / alpha);
}

double solve_m(double e_net, double lambda_p, double tau, double alpha) {
    check_solver(e_net, 1.0, lambda_p, tau, alpha);
    return e_net / (std::tgamma(0.5 * alpha + 1.0) * tau * lambda_p * std::pow(kPi * lambda_p, -0.5 * alpha));
}

double power_for(const BooleanModelSpec& model, const PowerParams& p) {
    p.validate();
    const ProcessSpec& spec = model.process;
    switch (spec.kind) {
        case ProcessKind::mcp:
            return power_mcp(spec.m, spec.lambda_p, p.tau, p.alpha, spec.r_d);
        case ProcessKind::tcp:
            return power_tcp(spec.m, spec.lambda_p, p.tau, p.alpha, spec.sigma);
        case ProcessKind::ppp:
            return power_ppp(spec.m, spec.lambda_p, p.tau, p.alpha);
    }
    throw std::domain_error("power_for: unknown process kind");
}

}  // namespace bpcm
