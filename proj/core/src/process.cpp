#include "bpcm/process.hpp"

#include <cmath>
#include <stdexcept>

namespace bpcm {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double ProcessSpec::daughter_intensity() const {
    if (kind != ProcessKind::mcp) {
        throw std::domain_error("ProcessSpec::daughter_intensity: defined for MCP only");
    }
    return m / (kPi * r_d * r_d);
}

double ProcessSpec::spread() const {
    switch (kind) {
        case ProcessKind::mcp: return r_d;
        case ProcessKind::tcp: return 6.0 * sigma;
        case ProcessKind::ppp: return 0.0;
    }
    return 0.0;
}

void ProcessSpec::validate() const {
    // Zero densities are admitted: they describe the empty deployment, for
    // which every coverage statistic is 0.
    if (!(lambda_p >= 0.0) || !std::isfinite(lambda_p)) {
        throw std::domain_error("ProcessSpec: lambda_p must be finite and >= 0");
    }
    if (!(m >= 0.0) || !std::isfinite(m)) {
        throw std::domain_error("ProcessSpec: m must be finite and >= 0");
    }
    if (kind == ProcessKind::mcp && !(r_d > 0.0)) {
        throw std::domain_error("ProcessSpec: MCP requires r_d > 0");
    }
    if (kind == ProcessKind::tcp && !(sigma > 0.0)) {
        throw std::domain_error("ProcessSpec: TCP requires sigma > 0");
    }
}

void Window::validate() const {
    if (!(width > 0.0) || !(height > 0.0)) {
        throw std::domain_error("Window: width and height must be > 0");
    }
}

void BooleanModelSpec::validate() const {
    process.validate();
    if (!(R > 0.0)) throw std::domain_error("BooleanModelSpec: R must be > 0");
}

}  // namespace bpcm
