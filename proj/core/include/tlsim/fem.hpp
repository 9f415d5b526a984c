#pragma once

// Linear 1-D finite-element kernel: uniform mesh, two-point Gauss element
// integrals for stiffness/mass/load terms, Dirichlet and point-load boundary
// conditions, and a direct symmetric-tridiagonal solve with a residual check.

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "tlsim/errors.hpp"

namespace tlsim::fem {

using NodalField = std::vector<double>;

struct Mesh1D {
    std::size_t n_elements = 0;
    double length = 0.0;
    double h = 0.0;                  // uniform spacing length / n_elements
    std::vector<double> nodes;       // n_elements + 1 coordinates

    static Mesh1D uniform(std::size_t n_elements, double length);

    std::size_t n_nodes() const { return n_elements + 1; }
    double element_mid(std::size_t e) const { return nodes[e] + 0.5 * h; }
};

// Symmetric banded system with bandwidth 1 (tridiagonal) plus right-hand side.
struct GlobalSystem {
    std::vector<double> diag;        // n
    std::vector<double> off;         // n - 1, sub- and super-diagonal
    std::vector<double> rhs;         // n

    explicit GlobalSystem(std::size_t n) : diag(n, 0.0), off(n > 0 ? n - 1 : 0, 0.0), rhs(n, 0.0) {}

    std::size_t size() const { return diag.size(); }

    // Accumulates a symmetric 2x2 element matrix for element e (nodes e, e+1).
    void add_element(std::size_t e, double k00, double k01, double k11) {
        diag[e] += k00;
        diag[e + 1] += k11;
        off[e] += k01;
    }

    void add_element_rhs(std::size_t e, double f0, double f1) {
        rhs[e] += f0;
        rhs[e + 1] += f1;
    }

    std::vector<double> multiply(const std::vector<double>& x) const;
};

struct GaussPoint {
    double x;        // physical coordinate
    double weight;   // physical weight (sums to h per element)
    double n0, n1;   // linear shape functions at the point
};

// Two-point Gauss rule on element e; exact through cubic integrands.
inline std::array<GaussPoint, 2> element_gauss(const Mesh1D& mesh, std::size_t e) {
    static const double xi = 1.0 / std::sqrt(3.0);
    const double xm = mesh.element_mid(e);
    const double half = 0.5 * mesh.h;
    std::array<GaussPoint, 2> gp;
    for (int i = 0; i < 2; ++i) {
        const double s = (i == 0) ? -xi : xi;
        gp[i].x = xm + half * s;
        gp[i].weight = half;
        gp[i].n1 = 0.5 * (1.0 + s);
        gp[i].n0 = 0.5 * (1.0 - s);
    }
    return gp;
}

namespace detail {
[[noreturn]] void throw_nonfinite_coeff(std::size_t element, double value);
}

// sum_e int_e c(x) B^T B dx. Coefficient is sampled at the Gauss points of each
// element; the assembled matrix is symmetric with zero row sums before BCs.
template <class Coeff>
void add_stiffness(GlobalSystem& sys, const Mesh1D& mesh, Coeff&& coeff) {
    const double inv_h2 = 1.0 / (mesh.h * mesh.h);
    for (std::size_t e = 0; e < mesh.n_elements; ++e) {
        double c = 0.0;
        for (const auto& gp : element_gauss(mesh, e)) {
            const double ci = coeff(e, gp.x);
            if (!std::isfinite(ci)) detail::throw_nonfinite_coeff(e, ci);
            c += gp.weight * ci;
        }
        const double k = c * inv_h2;
        sys.add_element(e, k, -k, k);
    }
}

// sum_e int_e c(x) N^T N dx (consistent mass).
template <class Coeff>
void add_mass(GlobalSystem& sys, const Mesh1D& mesh, Coeff&& coeff) {
    for (std::size_t e = 0; e < mesh.n_elements; ++e) {
        double m00 = 0.0, m01 = 0.0, m11 = 0.0;
        for (const auto& gp : element_gauss(mesh, e)) {
            const double ci = coeff(e, gp.x);
            if (!std::isfinite(ci)) detail::throw_nonfinite_coeff(e, ci);
            const double w = gp.weight * ci;
            m00 += w * gp.n0 * gp.n0;
            m01 += w * gp.n0 * gp.n1;
            m11 += w * gp.n1 * gp.n1;
        }
        sys.add_element(e, m00, m01, m11);
    }
}

// sum_e int_e c(x) N^T dx added to the right-hand side.
template <class Coeff>
void add_load_n(GlobalSystem& sys, const Mesh1D& mesh, Coeff&& coeff) {
    for (std::size_t e = 0; e < mesh.n_elements; ++e) {
        double f0 = 0.0, f1 = 0.0;
        for (const auto& gp : element_gauss(mesh, e)) {
            const double ci = coeff(e, gp.x);
            if (!std::isfinite(ci)) detail::throw_nonfinite_coeff(e, ci);
            f0 += gp.weight * ci * gp.n0;
            f1 += gp.weight * ci * gp.n1;
        }
        sys.add_element_rhs(e, f0, f1);
    }
}

// sum_e int_e c(x) B^T dx added to the right-hand side (gradient-weighted load).
template <class Coeff>
void add_load_b(GlobalSystem& sys, const Mesh1D& mesh, Coeff&& coeff) {
    const double inv_h = 1.0 / mesh.h;
    for (std::size_t e = 0; e < mesh.n_elements; ++e) {
        double c = 0.0;
        for (const auto& gp : element_gauss(mesh, e)) {
            const double ci = coeff(e, gp.x);
            if (!std::isfinite(ci)) detail::throw_nonfinite_coeff(e, ci);
            c += gp.weight * ci;
        }
        sys.add_element_rhs(e, -c * inv_h, c * inv_h);
    }
}

template <class Coeff>
GlobalSystem assemble_stiffness(const Mesh1D& mesh, Coeff&& coeff) {
    GlobalSystem sys(mesh.n_nodes());
    add_stiffness(sys, mesh, coeff);
    return sys;
}

template <class Coeff>
GlobalSystem assemble_mass(const Mesh1D& mesh, Coeff&& coeff) {
    GlobalSystem sys(mesh.n_nodes());
    add_mass(sys, mesh, coeff);
    return sys;
}

// Row/column elimination with right-hand-side correction; the solution at the
// node equals value exactly and a repeated application is a no-op.
void apply_dirichlet(GlobalSystem& sys, std::size_t node, double value);

void apply_point_load(GlobalSystem& sys, std::size_t node, double value);

// Direct LDL^T factorization of the tridiagonal system. Throws SolverError on
// a (near-)singular pivot or when the relative residual exceeds 1e-10.
NodalField solve(const GlobalSystem& sys);

inline constexpr double k_residual_bound = 1e-10;

}  // namespace tlsim::fem
