#pragma once

// Monthly weather ingestion and the continuous cyclic loading built from it:
// a 12-sample DFT reduced to a real Fourier series with a one-year period,
// plus the parameterized electric current demand.

#include <array>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string>

#include "tlsim/errors.hpp"

namespace tlsim::loading {

inline constexpr std::size_t k_months = 12;
inline constexpr std::size_t k_harmonics = k_months / 2;
inline constexpr double k_ft_to_m = 0.3048;

struct WeatherSeries {
    std::string state_name;
    std::array<double, k_months> wind_ft_s{};
    std::array<double, k_months> ambient_temp_k{};
};

// f(t) = mean + sum_n [cos_coeff[n-1] cos(2 pi n t / T) + sin_coeff[n-1] sin(2 pi n t / T)]
struct FourierModel {
    double mean = 0.0;
    std::array<double, k_harmonics> cos_coeff{};
    std::array<double, k_harmonics> sin_coeff{};
    double period_years = 1.0;
};

struct CurrentLoad {
    double base_a = 1500.0;       // I_b
    double amplitude_a = 100.0;   // I_a
};

// Loading state handed to the coupled solver at one time instant.
struct LoadSample {
    double t_years = 0.0;
    double wind_speed_m_s = 0.0;   // clamped to >= 0 after synthesis
    double ambient_temp_k = 0.0;
    double current_a = 0.0;
};

// Real Fourier coefficients of 12 monthly samples. Mean is the arithmetic
// average; harmonics are scaled 2/N with the Nyquist term at 1/N so the series
// interpolates the samples exactly at t = k/12.
FourierModel dft_coefficients(std::span<const double, k_months> samples);

double synthesize(const FourierModel& model, double t_years);

// Current magnitude |I(t)| = I_b + I_a sin(4 pi t); period half a year.
double current_at(const CurrentLoad& load, double t_years);

// CSV with header "month,wind_ft_s,temp_K" and exactly 12 data rows.
WeatherSeries ingest_weather_csv(const std::filesystem::path& path);

constexpr double to_si(double ft_per_s) { return ft_per_s * k_ft_to_m; }

}  // namespace tlsim::loading
