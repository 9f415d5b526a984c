#pragma once

// Conductor material constants and the ambient-air constants used by the
// convection correlation. Defaults describe an all-aluminum conductor.

#include "tlsim/errors.hpp"

namespace tlsim::sim {

struct MaterialParams {
    double young_pa = 69e9;              // Y
    double layer_width_m = 0.02;         // gamma, phase-field layer width
    double fracture_energy = 10e3;       // g_c [N/m]
    double density = 2700.0;             // rho [kg/m^3]
    double aging_coeff = 1e-10;          // a [m^5/(y kg)]
    double thermal_conductivity = 237.0; // kappa [W/(m K)]
    double conductivity_ref = 3.77e7;    // sigma_E0 [S/m]
    double resistivity_coeff = 3.9e-3;   // alpha [1/K]
    double reference_temp_k = 293.15;    // theta0 for resistivity and aging

    double air_density = 1.225;          // rho_air [kg/m^3]
    double air_viscosity = 15e-6;        // nu [m^2/s]
    double air_conductivity = 0.0295;    // kappa_air [W/(m K)]
    double prandtl = 0.71;               // Pr
    double h_min = 4.0;                  // natural-convection floor [W/(m^2 K)]

    void validate() const;
};

}  // namespace tlsim::sim
