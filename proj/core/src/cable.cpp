#include "tlsim/cable.hpp"

#include <cmath>
#include <string>

namespace tlsim::cable {

CableGeometry CableGeometry::make(double span_m, double diameter_m, double damage_spread) {
    if (!(span_m > 0.0)) throw ConfigError("span must be positive, got " + std::to_string(span_m));
    if (!(diameter_m > 0.0)) throw ConfigError("diameter must be positive, got " + std::to_string(diameter_m));
    if (!(damage_spread > 0.0)) {
        throw ConfigError("damage spread A_sigma must be positive, got " + std::to_string(damage_spread));
    }
    CableGeometry geom;
    geom.span_m = span_m;
    geom.diameter_m = diameter_m;
    geom.area_m2 = std::numbers::pi * diameter_m * diameter_m / 4.0;
    geom.damage_spread = damage_spread;
    return geom;
}

double area_profile(const CableGeometry& geom, double x) {
    const double half = geom.span_m / 2.0;
    const double spread = geom.damage_spread;
    const double dip = std::exp(-(x - half) * (x - half) / (2.0 * spread * spread)) /
                       (spread * std::sqrt(2.0 * std::numbers::pi));
    const double area = geom.area_m2 * (1.0 - dip);
    if (!(area > 0.0)) {
        throw ConfigError("damage exceeds section: A(" + std::to_string(x) + ") = " +
                          std::to_string(area) + " m^2 (A_sigma = " + std::to_string(spread) + ")");
    }
    return area;
}

DragTable DragTable::default_table() {
    DragTable table;
    table.bands = {
        {0.4, 4.0, 8.0},
        {4.0, 40.0, 3.0},
        {40.0, 4000.0, 1.2},
        {4000.0, 40000.0, 1.0},
        {40000.0, 400000.0, 1.2},
    };
    return table;
}

void DragTable::validate() const {
    if (bands.empty()) throw ConfigError("drag table must have at least one band");
    for (std::size_t i = 0; i < bands.size(); ++i) {
        const DragBand& b = bands[i];
        if (!(b.re_min > 0.0) || !(b.re_max > b.re_min)) {
            throw ConfigError("drag table band " + std::to_string(i) + " has invalid Reynolds range");
        }
        if (b.cd < 0.0) throw ConfigError("drag table band " + std::to_string(i) + " has negative C_D");
        if (i > 0 && bands[i - 1].re_max != b.re_min) {
            throw ConfigError("drag table bands must be contiguous (gap before band " + std::to_string(i) + ")");
        }
    }
}

double drag_coefficient(const DragTable& table, double reynolds, bool* clamped) {
    if (!(reynolds > 0.0)) throw ConfigError("Reynolds number must be positive for drag lookup");
    if (clamped) *clamped = false;
    if (reynolds < table.bands.front().re_min) {
        if (clamped) *clamped = true;
        return table.bands.front().cd;
    }
    if (reynolds >= table.bands.back().re_max) {
        if (clamped) *clamped = true;
        return table.bands.back().cd;
    }
    for (const DragBand& b : table.bands) {
        if (reynolds >= b.re_min && reynolds < b.re_max) return b.cd;
    }
    return table.bands.back().cd;  // unreachable for a contiguous table
}

double wind_pressure(double air_density, double wind_speed_m_s) {
    return 0.5 * air_density * wind_speed_m_s * wind_speed_m_s;
}

double wind_load(const WindLoadParams& params, double wind_pressure_pa, double diameter_m, double cd) {
    const double s = std::sin(params.angle_rad);
    return wind_pressure_pa * cd * diameter_m * s * s * params.span_factor;
}

double horizontal_tension(const SagParams& sag, double theta_mean_k, double wind_load_n_per_m) {
    if (!(theta_mean_k > 0.0)) {
        throw SolverError("mean conductor temperature must be positive, got " + std::to_string(theta_mean_k));
    }
    if (!(sag.pretension_n > 0.0) || !(sag.weight_per_m > 0.0) || !(sag.span_m > 0.0)) {
        throw ConfigError("sag parameters H0, W_b, S_L must all be positive");
    }

    const double s0 = sag.weight_per_m * sag.span_m * sag.span_m / (8.0 * sag.pretension_n);
    const double l0 = sag.span_m + 8.0 * s0 * s0 / (3.0 * sag.span_m);
    const double length = l0 * (1.0 + sag.thermal_expansion * (theta_mean_k - sag.reference_temp_k));
    if (!(length > sag.span_m)) {
        throw SolverError("taut-cable regime: thermal contraction left cable length " +
                          std::to_string(length) + " m <= span " + std::to_string(sag.span_m) + " m");
    }
    const double new_sag = std::sqrt(3.0 * sag.span_m * (length - sag.span_m) / 8.0);
    const double weight = std::hypot(sag.weight_per_m, wind_load_n_per_m);
    return weight * sag.span_m * sag.span_m / (8.0 * new_sag);
}

}  // namespace tlsim::cable
