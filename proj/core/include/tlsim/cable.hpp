#pragma once

// Conductor cross-section damage profile, wind-induced mechanical load, and
// the temperature-dependent horizontal tension of the sagging span.

#include <cstddef>
#include <numbers>
#include <vector>

#include "tlsim/errors.hpp"

namespace tlsim::cable {

struct CableGeometry {
    double span_m = 200.0;        // L
    double diameter_m = 0.04;     // D
    double area_m2 = 0.0;         // A0 = pi D^2 / 4
    double damage_spread = 10.0;  // A_sigma: ratio of spread to depth of the area dip

    static CableGeometry make(double span_m, double diameter_m, double damage_spread);
};

// A(x) = A0 (1 - exp(-(x - L/2)^2 / (2 A_sigma^2)) / (A_sigma sqrt(2 pi)))
double area_profile(const CableGeometry& geom, double x);

struct SagParams {
    double pretension_n = 0.0;          // H0
    double weight_per_m = 0.0;          // W_b, self-weight
    double thermal_expansion = 2.3e-5;  // alpha_L [1/K]
    double span_m = 200.0;              // S_L
    double reference_temp_k = 293.15;   // temperature of zero elongation
};

struct DragBand {
    double re_min = 0.0;
    double re_max = 0.0;
    double cd = 0.0;
};

// Piecewise-constant C_D(Re). The default bands share the Reynolds ranges of
// the forced-convection correlation table and approximate a smooth cylinder
// (subcritical C_D = 1.0 around Re = 1e4).
struct DragTable {
    std::vector<DragBand> bands;

    static DragTable default_table();
    void validate() const;
};

// Lookup with clamping; out-of-table Reynolds numbers report through clamped.
double drag_coefficient(const DragTable& table, double reynolds, bool* clamped = nullptr);

struct WindLoadParams {
    double air_density = 1.225;                         // rho_air [kg/m3]
    DragTable drag = DragTable::default_table();
    double angle_rad = std::numbers::pi / 2.0;          // theta_w, line-to-wind angle
    double span_factor = 1.0;                           // alpha
};

// P_w = rho v^2 / 2
double wind_pressure(double air_density, double wind_speed_m_s);

// W_w = P_w C_D D sin^2(theta_w) alpha
double wind_load(const WindLoadParams& params, double wind_pressure_pa, double diameter_m, double cd);

// Tension chain: initial sag from pre-tension, thermal elongation of the
// unstressed length, new sag, combined self+wind weight, new horizontal
// tension. Throws SolverError in the taut-cable regime (L <= S_L).
double horizontal_tension(const SagParams& sag, double theta_mean_k, double wind_load_n_per_m);

}  // namespace tlsim::cable
