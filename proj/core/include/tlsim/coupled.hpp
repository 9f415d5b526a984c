#pragma once

// Staggered quasi-static time loop over the coupled fields of one conductor
// span: horizontal tension -> displacement -> strain-energy history -> damage
// -> fatigue -> temperature -> voltage, with annealing failure detection.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tlsim/cable.hpp"
#include "tlsim/fem.hpp"
#include "tlsim/loading.hpp"
#include "tlsim/material.hpp"

namespace tlsim::sim {

struct SimulationConfig {
    double dt_years = 0.01;
    std::size_t n_steps = 6000;
    double theta_lim_k = 373.0;         // annealing/rupture proxy limit
    std::size_t steps_per_year = 100;
    std::size_t snapshot_interval = 500;  // steps between field snapshots, 0 disables

    void validate() const;
};

struct FieldState {
    fem::NodalField displacement;   // u [m]
    fem::NodalField damage;         // phi [-]
    fem::NodalField fatigue;        // F [N/m]
    fem::NodalField temperature;    // theta [K]
    fem::NodalField voltage;        // V [V]
    fem::NodalField history;        // strain-energy history [J/m^3]
};

struct StepRecord {
    double t_years = 0.0;
    double max_damage = 0.0;        // clamped to [0, 1] for reporting
    double max_fatigue = 0.0;
    double max_temperature = 0.0;
    double voltage_drop = 0.0;      // |V(L)|
    double tension_n = 0.0;
};

struct FieldSnapshot {
    double t_years = 0.0;
    FieldState fields;
};

struct RunWarnings {
    std::size_t drag_clamped = 0;
    std::size_t reynolds_clamped = 0;
    std::size_t stiffness_floored = 0;

    std::size_t total() const { return drag_clamped + reynolds_clamped + stiffness_floored; }
};

struct SimulationResult {
    std::vector<StepRecord> series;            // row 0 is the initial state; truncated at failure
    std::vector<FieldSnapshot> snapshots;
    std::optional<double> failure_time_years;  // first theta_max > theta_lim crossing
    std::optional<std::string> solver_error;   // set when the run aborted mid-step
    RunWarnings warnings;
    FieldState final_state;
};

// Deterministic model for one scenario realization. All inputs are SI; the
// wind model must already be converted to m/s.
class CoupledModel {
public:
    struct Inputs {
        std::size_t n_elements = 1000;
        cable::CableGeometry geometry;
        MaterialParams material;
        cable::SagParams sag;
        cable::WindLoadParams wind;
        loading::CurrentLoad current;
        loading::FourierModel wind_model;     // m/s
        loading::FourierModel ambient_model;  // K
        SimulationConfig config;
    };

    explicit CoupledModel(Inputs inputs);

    const fem::Mesh1D& mesh() const { return mesh_; }
    const Inputs& inputs() const { return in_; }

    loading::LoadSample load_at(double t_years) const;

    // Wind-dependent horizontal tension driven by the spatial mean of the
    // previous step's temperature field.
    double tension_at(const loading::LoadSample& load, double theta_mean_k, RunWarnings* warnings = nullptr) const;

    // Forced-convection coefficient from the cross-flow Nusselt correlation,
    // floored at the natural-convection minimum.
    double convective_h(double wind_speed_m_s, RunWarnings* warnings = nullptr) const;

    fem::NodalField solve_displacement(const FieldState& state, double tension_n,
                                       RunWarnings* warnings = nullptr) const;
    void update_history(FieldState& state) const;
    fem::NodalField solve_damage(const FieldState& state) const;
    fem::NodalField update_fatigue(const FieldState& state, double dt_years) const;
    fem::NodalField solve_temperature(const FieldState& state, const loading::LoadSample& load,
                                      RunWarnings* warnings = nullptr) const;
    fem::NodalField solve_voltage(const FieldState& state, const loading::LoadSample& load,
                                  RunWarnings* warnings = nullptr) const;

    FieldState initial_state() const;

    // One staggered pass at time t. Throws SolverError with the step context
    // when a sub-solve fails.
    void step(FieldState& state, double t_years, RunWarnings* warnings = nullptr) const;

    // Full time loop; stops at theta_max > theta_lim or after n_steps. A
    // mid-run SolverError is captured in the result, not thrown.
    SimulationResult run() const;

    // Element-averaged gradient of a nodal field, averaged back to nodes.
    fem::NodalField nodal_gradient(const fem::NodalField& values) const;

private:
    Inputs in_;
    fem::Mesh1D mesh_;
    std::vector<double> area_gp_;    // A(x) at the two Gauss points of each element
    std::vector<double> area_node_;  // A(x) at nodes (snapshot output)
    double perimeter_ = 0.0;         // A_s per unit length = pi D

    double degraded_factor(double phi) const;
    double conductivity_at(double phi, double theta) const;
};

// Degradation factor floor keeping ruptured systems nonsingular.
inline constexpr double k_stiffness_floor = 1e-6;

}  // namespace tlsim::sim
