#include "bpcm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace bpcm {

void QuadratureSettings::validate() const {
    if (!(rel_tol > 0.0)) throw std::domain_error("QuadratureSettings: rel_tol must be > 0");
    if (!(abs_tol >= 0.0)) throw std::domain_error("QuadratureSettings: abs_tol must be >= 0");
    if (max_subdivisions < 1) throw std::domain_error("QuadratureSettings: max_subdivisions must be >= 1");
    if (!(tail_cutoff > 0.0 && tail_cutoff < 1.0)) {
        throw std::domain_error("QuadratureSettings: tail_cutoff must be in (0, 1)");
    }
}

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (QUADPACK dqk15).
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kKronrodW[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

// 7-point Gauss weights, matching the odd Kronrod nodes (indices 1,3,5) and
// the midpoint.
constexpr double kGaussW[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a = 0, b = 0;
    double integral = 0;
    double error = 0;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv[15];
    const double fc = f(center);
    fv[7] = fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kNodes[i];
        fv[i] = f(center - dx);
        fv[14 - i] = f(center + dx);
    }

    double kron = kKronrodW[7] * fc;
    double gauss = kGaussW[3] * fc;
    double resabs = kKronrodW[7] * std::abs(fc);
    for (int i = 0; i < 7; ++i) {
        const double pair = fv[i] + fv[14 - i];
        kron += kKronrodW[i] * pair;
        resabs += kKronrodW[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
        if (i % 2 == 1) gauss += kGaussW[i / 2] * pair;
    }

    const double mean = kron * 0.5;
    double resasc = kKronrodW[7] * std::abs(fc - mean);
    for (int i = 0; i < 7; ++i) {
        resasc += kKronrodW[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));
    }

    Panel p;
    p.a = a;
    p.b = b;
    p.integral = kron * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);

    double err = std::abs((kron - gauss) * half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    const double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
        err = std::max(err, 50.0 * eps * resabs);
    }
    p.error = err;
    return p;
}

struct WorstFirst {
    bool operator()(const Panel& lhs, const Panel& rhs) const {
        if (lhs.error != rhs.error) return lhs.error < rhs.error;
        return lhs.a > rhs.a;  // deterministic tie break
    }
};

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSettings& q) {
    q.validate();
    if (!(a <= b)) throw std::domain_error("integrate_adaptive: requires a <= b");
    if (a == b) return 0.0;

    std::priority_queue<Panel, std::vector<Panel>, WorstFirst> active;
    active.push(gk15(f, a, b));

    double total = active.top().integral;
    double total_err = active.top().error;
    double frozen_err = 0.0;  // panels too narrow to split further

    int splits = 0;
    while (total_err + frozen_err > std::max(q.abs_tol, q.rel_tol * std::abs(total))) {
        if (active.empty() || splits >= q.max_subdivisions) {
            throw convergence_error("integrate_adaptive: subdivision budget exhausted",
                                    total, total_err + frozen_err);
        }
        const Panel worst = active.top();
        active.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Interval at floating-point resolution; its error is permanent.
            frozen_err += worst.error;
            total_err -= worst.error;
            continue;
        }
        const Panel left = gk15(f, worst.a, mid);
        const Panel right = gk15(f, mid, worst.b);
        total += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;
        active.push(left);
        active.push(right);
        ++splits;
    }
    return total;
}

double integrate_semi_infinite(const std::function<double(double)>& f, double a, double scale,
                               const QuadratureSettings& q, double min_extent) {
    q.validate();
    if (!(scale > 0.0)) throw std::domain_error("integrate_semi_infinite: scale must be > 0");
    if (min_extent < 0.0) throw std::domain_error("integrate_semi_infinite: min_extent must be >= 0");

    double total = 0.0;
    double lo = a;
    if (min_extent > 0.0) {
        total = integrate_adaptive(f, a, a + min_extent, q);
        lo = a + min_extent;
    }
    const double cap = lo + 64.0 * scale;
    while (true) {
        const double hi = lo + scale;
        const double panel = integrate_adaptive(f, lo, hi, q);
        total += panel;
        lo = hi;
        if (std::abs(panel) < q.tail_cutoff * std::max(std::abs(total), q.abs_tol)) break;
        if (lo >= cap) {
            throw convergence_error(
                "integrate_semi_infinite: tail not found within 64 panels past the minimum extent",
                total, std::abs(panel));
        }
    }
    return total;
}

}  // namespace bpcm
