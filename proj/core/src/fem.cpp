#include "tlsim/fem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tlsim::fem {

Mesh1D Mesh1D::uniform(std::size_t n_elements, double length) {
    if (n_elements < 2) throw ConfigError("mesh needs at least 2 elements, got " + std::to_string(n_elements));
    if (!(length > 0.0)) throw ConfigError("mesh length must be positive, got " + std::to_string(length));
    Mesh1D mesh;
    mesh.n_elements = n_elements;
    mesh.length = length;
    mesh.h = length / static_cast<double>(n_elements);
    mesh.nodes.resize(n_elements + 1);
    for (std::size_t i = 0; i <= n_elements; ++i) {
        mesh.nodes[i] = length * static_cast<double>(i) / static_cast<double>(n_elements);
    }
    return mesh;
}

std::vector<double> GlobalSystem::multiply(const std::vector<double>& x) const {
    const std::size_t n = size();
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double v = diag[i] * x[i];
        if (i > 0) v += off[i - 1] * x[i - 1];
        if (i + 1 < n) v += off[i] * x[i + 1];
        y[i] = v;
    }
    return y;
}

namespace detail {
[[noreturn]] void throw_nonfinite_coeff(std::size_t element, double value) {
    throw SolverError("non-finite coefficient " + std::to_string(value) + " in element " +
                      std::to_string(element));
}
}  // namespace detail

void apply_dirichlet(GlobalSystem& sys, std::size_t node, double value) {
    const std::size_t n = sys.size();
    if (node > 0) {
        sys.rhs[node - 1] -= sys.off[node - 1] * value;
        sys.off[node - 1] = 0.0;
    }
    if (node + 1 < n) {
        sys.rhs[node + 1] -= sys.off[node] * value;
        sys.off[node] = 0.0;
    }
    sys.diag[node] = 1.0;
    sys.rhs[node] = value;
}

void apply_point_load(GlobalSystem& sys, std::size_t node, double value) {
    sys.rhs[node] += value;
}

NodalField solve(const GlobalSystem& sys) {
    const std::size_t n = sys.size();
    if (n == 0) return {};

    double scale = 0.0;
    for (double d : sys.diag) scale = std::max(scale, std::abs(d));
    if (!(scale > 0.0)) throw SolverError("singular system: zero diagonal");

    // LDL^T factorization, no pivoting (systems here are SPD after BCs).
    std::vector<double> d(n), l(n > 0 ? n - 1 : 0);
    const double pivot_floor = scale * 1e-300;
    double min_pivot = std::numeric_limits<double>::infinity();
    d[0] = sys.diag[0];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(std::abs(d[i]) > pivot_floor)) {
            throw SolverError("singular system: pivot " + std::to_string(d[i]) + " at row " +
                              std::to_string(i) + " (diagonal scale " + std::to_string(scale) + ")");
        }
        min_pivot = std::min(min_pivot, std::abs(d[i]));
        l[i] = sys.off[i] / d[i];
        d[i + 1] = sys.diag[i + 1] - sys.off[i] * l[i];
    }
    if (!(std::abs(d[n - 1]) > pivot_floor)) {
        throw SolverError("singular system: pivot " + std::to_string(d[n - 1]) + " at row " +
                          std::to_string(n - 1) + " (diagonal scale " + std::to_string(scale) + ")");
    }
    min_pivot = std::min(min_pivot, std::abs(d[n - 1]));

    NodalField x(sys.rhs);
    for (std::size_t i = 0; i + 1 < n; ++i) x[i + 1] -= l[i] * x[i];
    for (std::size_t i = 0; i < n; ++i) x[i] /= d[i];
    for (std::size_t i = n - 1; i > 0; --i) x[i - 1] -= l[i - 1] * x[i];

    // Verify the residual bound the time stepper relies on.
    const std::vector<double> ax = sys.multiply(x);
    double rr = 0.0, bb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ax[i] - sys.rhs[i];
        rr += r * r;
        bb += sys.rhs[i] * sys.rhs[i];
    }
    const double rel = std::sqrt(rr) / std::max(std::sqrt(bb), std::numeric_limits<double>::min());
    if (!(rel <= k_residual_bound)) {
        throw SolverError("linear solve residual " + std::to_string(rel) + " exceeds bound (pivot ratio " +
                          std::to_string(min_pivot / scale) + ")");
    }
    return x;
}

}  // namespace tlsim::fem
